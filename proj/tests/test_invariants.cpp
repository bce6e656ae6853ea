#include <doctest.h>

#include <json.hpp>

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

struct Run {
  Colouring c;
  Trace tr;
};

// mu = 3/5 with a huge w_min gives Red and DensityBoost steps
Run boosted_run(std::uint64_t seed) {
  Run r{random_colouring(300, Rational(1, 2), seed), {}};
  BookParams p = BookParams::defaults(40, 40);
  p.mu = Rational(11, 20);
  p.epsilon = Rational(1, 50);
  p.x_min = 3;
  p.w_min = 300;
  r.tr = run(r.c, VertexSet::range(300, 0, 150), VertexSet::range(300, 150, 300), p);
  return r;
}

}  // namespace

TEST_CASE("all-red trace passes with trivial diagnostics") {
  auto c = all_red(60);
  BookParams p = BookParams::defaults(6, 6);
  p.x_min = 2;
  auto tr = run(c, VertexSet::range(60, 0, 30), VertexSet::range(60, 30, 60), p);
  auto rep = check_trace(c, tr);
  CHECK(rep.exact_checks_pass());
  for (const auto& id : check_ids()) CHECK_NOTHROW(rep.check(id));
  CHECK(*rep.diagnostic("zigzag") == tr.summary.t);
  CHECK(*rep.diagnostic("beta_bound") == p.mu);
  for (const auto& w : check_weight_bound(c, tr)) {
    CHECK(w.omega == 0);
    CHECK(w.is_max);
  }
  CHECK(check_beta_floor(tr).empty());
}

TEST_CASE("perturbed density is caught at its step") {
  auto r = boosted_run(11);
  REQUIRE(r.tr.steps.size() >= 3);
  for (std::size_t i = 0; i < r.tr.steps.size(); ++i) {
    Trace t = r.tr;
    Rational p = t.steps[i].p;
    t.steps[i].p = Rational(numerator(p) + 1, denominator(p));
    auto rep = check_trace(r.c, t);
    CHECK(!rep.exact_checks_pass());
    CHECK(rep.check("2").status == "fail");
    CHECK(*rep.check("2").first_violation == t.steps[i].index);
  }
}

TEST_CASE("boost at the unique blue neighbour") {
  // a=0, b=1 in X; c=2, d=3 in Y; red a-c, a-d, b-c. omega(a) = -1/4, omega(b) = 1/8, so b is
  // central, its red test fails (no red neighbour in X) and the boost moves to N_B(b) = {a}.
  Colouring c(4);
  c.set(0, 2, Colour::Red);
  c.set(0, 3, Colour::Red);
  c.set(1, 2, Colour::Red);
  BookParams p = BookParams::defaults(2, 2);
  p.mu = Rational(3, 5);
  p.epsilon = Rational(1, 2);
  p.x_min = 1;
  p.w_min = 4;
  auto tr = run(c, VertexSet::of(4, {0, 1}), VertexSet::of(4, {2, 3}), p);
  REQUIRE(tr.steps.size() == 2);
  CHECK(tr.steps[0].kind == StepKind::DegreeRegularise);
  CHECK(tr.steps[0].removed_count == 0);
  CHECK(tr.steps[1].kind == StepKind::DensityBoost);
  CHECK(*tr.steps[1].central_vertex == 1);
  CHECK(*tr.steps[1].beta == Rational(1, 2));
  CHECK(check_trace(c, tr).exact_checks_pass());

  auto w = check_weight_bound(c, tr);
  REQUIRE(w.size() == 1);
  CHECK(w[0].is_max);
  CHECK(w[0].omega == Rational(1, 8));
  CHECK(w[0].margin == Rational(3, 16));
  auto bf = check_beta_floor(tr);
  REQUIRE(bf.size() == 1);
  CHECK(bf[0].beta_le_mu);
  CHECK(bf[0].margin == Rational(1, 4));
}

TEST_CASE("weight argmax and beta <= mu on seeded runs") {
  std::size_t boosts = 0;
  for (std::uint64_t seed = 1; seed <= 6; ++seed) {
    auto r = boosted_run(seed);
    auto rep = check_trace(r.c, r.tr);
    CHECK(rep.exact_checks_pass());
    for (const auto& w : check_weight_bound(r.c, r.tr)) CHECK(w.is_max);
    for (const auto& b : check_beta_floor(r.tr)) {
      ++boosts;
      CHECK(b.beta_le_mu);
      CHECK(b.beta <= r.tr.params.mu);
      CHECK(b.margin == b.beta - Rational(1, 1600));
    }
    for (const auto& id : {"bounding_p", "ybound", "xbound", "zigzag", "beta_bound"})
      CHECK(rep.diagnostic(id).has_value());
  }
  CHECK(boosts > 0);
}

TEST_CASE("moved central vertex fails the argmax check") {
  auto r = boosted_run(3);
  for (std::size_t i = 0; i < r.tr.steps.size(); ++i) {
    auto& s = r.tr.steps[i];
    if (s.kind != StepKind::Red) continue;
    Trace t = r.tr;
    t.steps[i].central_vertex = *s.central_vertex + 1;
    CHECK(!check_trace(r.c, t).exact_checks_pass());
    break;
  }
}

TEST_CASE("provenance and schema errors") {
  auto r = boosted_run(2);
  Colouring small = random_colouring(100, Rational(1, 2), 2);
  CHECK_THROWS_AS(check_trace(small, r.tr), ProvenanceError);
  CHECK_THROWS_AS(trace_from_json("[]"), SchemaError);
  CHECK_THROWS_AS(trace_from_json("not json"), SchemaError);

  Trace t = r.tr;
  t.p0 += 1;
  auto rep = check_trace(r.c, t);
  CHECK(!rep.exact_checks_pass());
}

TEST_CASE("report json") {
  auto r = boosted_run(4);
  auto j = nlohmann::json::parse(report_to_json(check_trace(r.c, r.tr)));
  CHECK(j.contains("checks"));
  CHECK(j.contains("diagnostics"));
  for (const auto& id : check_ids()) {
    REQUIRE(j["checks"].contains(id));
    CHECK(j["checks"][id].contains("status"));
    CHECK(j["checks"][id].contains("worst_slack"));
    CHECK(j["checks"][id].contains("first_violation"));
  }
  for (auto& [k, v] : j["diagnostics"].items()) CHECK(v.get<std::string>().find('/') != std::string::npos);
}
