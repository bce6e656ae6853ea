#include <doctest.h>

#include <cmath>
#include <map>

#include "rbl/book_algorithm.hpp"
#include "rbl/errors.hpp"
#include "rbl/invariants.hpp"

using namespace rbl;

namespace {

Colouring all_red(std::size_t n) {
  Colouring c(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) c.set(u, v, Colour::Red);
  return c;
}

// a=0, b=1, c=2, d=3; red a-c, a-d, b-c
Colouring hand_example() {
  Colouring c(4);
  c.set(0, 2, Colour::Red);
  c.set(0, 3, Colour::Red);
  c.set(1, 2, Colour::Red);
  return c;
}

BookParams params(unsigned k, unsigned ell, Rational mu, Rational eps, std::size_t x_min,
                  std::size_t w_min) {
  BookParams p = BookParams::defaults(k, ell);
  p.mu = mu;
  p.epsilon = eps;
  p.x_min = x_min;
  p.w_min = w_min;
  return p;
}

bool red_book(const Colouring& c, const std::vector<Vertex>& A, const VertexSet& Y) {
  for (std::size_t i = 0; i < A.size(); ++i) {
    for (std::size_t j = i + 1; j < A.size(); ++j)
      if (!c.is_red(A[i], A[j])) return false;
    if (!Y.is_subset_of(c.red(A[i]))) return false;
  }
  return true;
}

// Y at the end of the run, rebuilt from the step kinds and central vertices
VertexSet final_Y(const Colouring& c, const Trace& tr) {
  auto Y = VertexSet::of(tr.n, tr.y0);
  for (const auto& s : tr.steps)
    if (s.kind == StepKind::Red || s.kind == StepKind::DensityBoost) Y &= c.red(*s.central_vertex);
  return Y;
}

}  // namespace

TEST_CASE("height and alpha") {
  const Rational eps(1, 10), p0(1, 2);
  CHECK(height(p0, p0, eps, 100) == 1);
  CHECK(height(Rational(503, 1000), p0, eps, 100) == 3);
  CHECK(height(Rational(5015, 10000), p0, eps, 100) == 2);
  CHECK(alpha(1, eps, 100) == Rational(1, 1000));
  CHECK(alpha(3, eps, 100) == Rational(121, 100000));
  Ladder lad(p0, eps, 100);
  for (unsigned h = 1; h <= 10; ++h) CHECK(lad.q(h) - lad.q(h - 1) == alpha(h, eps, 100));
  // 1 <= h(p) <= (2/eps) log k for every p <= 1
  const double cap = 2 / 0.1 * std::log(100.0);
  for (int i = 1; i <= 100; ++i) {
    unsigned h = height(Rational(i, 100), p0, eps, 100);
    CHECK(h >= 1);
    CHECK(h <= std::ceil(cap));
  }
}

TEST_CASE("pair and vertex weights") {
  auto c = hand_example();
  auto st = initial_state(c, VertexSet::of(4, {0, 1}), VertexSet::of(4, {2, 3}));
  CHECK(st.p == Rational(3, 4));
  CHECK(pair_weight(c, st, 0, 1) == Rational(-1, 4));
  CHECK(pair_weight(c, st, 1, 0) == Rational(1, 8));
  Rational total = 0;
  for (Vertex x : {0u, 1u})
    for (Vertex y : {0u, 1u}) total += pair_weight(c, st, x, y);
  CHECK(total == Rational(1, 4));
  CHECK(vertex_weight(c, st, 0) == Rational(-1, 4));
  CHECK_THROWS_AS(pair_weight(c, st, 0, 2), ContractViolation);

  auto red = all_red(6);
  auto st2 = initial_state(red, VertexSet::of(6, {0, 1, 2}), VertexSet::of(6, {3, 4, 5}));
  CHECK(pair_weight(red, st2, 0, 1) == 0);
  CHECK(vertex_weight(red, st2, 2) == 0);
  auto st3 = initial_state(red, VertexSet::of(6, {0}), VertexSet::of(6, {3, 4, 5}));
  CHECK(vertex_weight(red, st3, 0) == 0);
}

TEST_CASE("degree regularisation") {
  auto c = hand_example();
  auto st = initial_state(c, VertexSet::of(4, {0, 1}), VertexSet::of(4, {2, 3}));
  auto prm = params(100, 100, Rational(2, 5), Rational(1, 10), 1, 1);
  Ladder lad(st.p0, prm.epsilon, prm.k);
  auto rec = degree_regularise(c, st, prm, lad);
  CHECK(rec.removed_count == 1);
  CHECK(rec.removed == std::vector<Vertex>{1});
  CHECK(st.X == VertexSet::of(4, {0}));
  CHECK(st.p == 1);

  auto red = all_red(10);
  auto st2 = initial_state(red, VertexSet::range(10, 0, 5), VertexSet::range(10, 5, 10));
  Ladder lad2(st2.p0, prm.epsilon, prm.k);
  auto rec2 = degree_regularise(red, st2, prm, lad2);
  CHECK(rec2.removed_count == 0);
  CHECK(st2.p == 1);
}

TEST_CASE("big blue candidates") {
  auto prm = params(12, 12, Rational(2, 5), Rational(3, 10), 1, 1);
  auto red = all_red(20);
  auto st = initial_state(red, VertexSet::range(20, 0, 10), VertexSet::range(20, 10, 20));
  CHECK(find_big_blue_candidates(red, st, prm).empty());

  Colouring blue(20);
  for (Vertex x = 0; x < 10; ++x)
    for (Vertex y = 10; y < 20; ++y) blue.set(x, y, Colour::Red);
  auto st2 = initial_state(blue, VertexSet::range(20, 0, 10), VertexSet::range(20, 10, 20));
  CHECK(find_big_blue_candidates(blue, st2, prm) == VertexSet::range(20, 0, 10));
}

TEST_CASE("all-red run takes k red steps") {
  auto c = all_red(200);
  auto prm = params(10, 10, Rational(2, 5), Rational(3, 10), 5, 10);
  auto tr = run(c, VertexSet::range(200, 0, 100), VertexSet::range(200, 100, 200), prm);
  CHECK(tr.summary.t == 10);
  CHECK(tr.summary.s == 0);
  CHECK(tr.summary.halting_reason == halt::AFull);
  for (const auto& s : tr.steps) CHECK((s.kind == StepKind::Red || s.kind == StepKind::DegreeRegularise));
  CHECK(red_book(c, tr.summary.final_A, final_Y(c, tr)));
  CHECK(check_trace(c, tr).exact_checks_pass());
}

TEST_CASE("all-blue run halts immediately") {
  Colouring c(200);
  auto prm = BookParams::defaults(10, 10);
  auto tr = run(c, VertexSet::range(200, 0, 100), VertexSet::range(200, 100, 200), prm);
  CHECK(tr.steps.empty());
  CHECK(tr.summary.halting_reason == halt::PFloor);
  CHECK(check_trace(c, tr).exact_checks_pass());
}

TEST_CASE("params validation") {
  auto p = BookParams::defaults(12, 12);
  CHECK_NOTHROW(p.validate());
  p.mu = 1;
  CHECK_THROWS(p.validate());
  p = BookParams::defaults(12, 13);
  CHECK_THROWS(p.validate());
  p = BookParams::defaults(12, 12);
  p.x_min = 0;
  CHECK_THROWS(p.validate());
}

TEST_CASE("trace json round trip") {
  auto c = random_colouring(300, Rational(1, 2), 5);
  auto prm = params(12, 12, Rational(3, 5), Rational(3, 10), 5, 300);
  auto tr = run(c, VertexSet::range(300, 0, 150), VertexSet::range(300, 150, 300), prm);
  auto js = trace_to_json(tr);
  CHECK(trace_to_json(trace_from_json(js)) == js);
  CHECK_THROWS_AS(trace_from_json("{\"steps\": 3}"), SchemaError);
}

// Headline property: replaying any run passes every exact check, every run ends with a red book
// and a known halting reason.
TEST_CASE("random runs replay cleanly") {
  std::map<StepKind, int> kinds;
  struct Cfg {
    std::size_t n;
    Rational red_prob, mu, eps;
    unsigned k;
    std::size_t x_min, w_min;
  };
  const std::vector<Cfg> cfgs = {
      {300, Rational(1, 2), Rational(3, 5), Rational(3, 10), 12, 5, 300},
      {300, Rational(1, 2), Rational(11, 20), Rational(1, 50), 40, 3, 300},
      {300, Rational(1, 2), Rational(2, 5), Rational(3, 10), 12, 20, 10},
      {200, Rational(3, 10), Rational(3, 5), Rational(1, 10), 8, 4, 40},
      {200, Rational(7, 10), Rational(1, 2), Rational(1, 5), 6, 2, 6},
  };
  for (const auto& cf : cfgs) {
    for (std::uint64_t seed = 0; seed < 12; ++seed) {
      auto c = random_colouring(cf.n, cf.red_prob, 1000 + seed);
      auto prm = params(cf.k, cf.k, cf.mu, cf.eps, cf.x_min, cf.w_min);
      auto tr = run(c, VertexSet::range(cf.n, 0, cf.n / 2), VertexSet::range(cf.n, cf.n / 2, cf.n), prm);
      for (const auto& s : tr.steps) ++kinds[s.kind];
      auto rep = check_trace(c, tr);
      INFO("seed " << seed << " failed " << rep.failed().size());
      CHECK(rep.exact_checks_pass());
      CHECK(halt::is_known(tr.summary.halting_reason));
      CHECK(red_book(c, tr.summary.final_A, final_Y(c, tr)));
      CHECK(final_Y(c, tr).size() == tr.summary.final_Y_size);
    }
  }
  MESSAGE("steps: D " << kinds[StepKind::DegreeRegularise] << ", BigBlue " << kinds[StepKind::BigBlue]
                      << ", Red " << kinds[StepKind::Red] << ", DensityBoost "
                      << kinds[StepKind::DensityBoost]);
  CHECK(kinds[StepKind::BigBlue] > 0);
  CHECK(kinds[StepKind::Red] > 0);
  CHECK(kinds[StepKind::DensityBoost] > 0);
}
