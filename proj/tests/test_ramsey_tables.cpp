#include <doctest.h>

#include "rbl/cliques.hpp"
#include "rbl/errors.hpp"
#include "rbl/ramsey_tables.hpp"

using namespace rbl;

namespace {

HighFloat hf(const BigInt& z) { return HighFloat(z.str()); }

bool close(const HighFloat& a, const HighFloat& b) { return abs(a / b - 1) < HighFloat("1e-40"); }

}  // namespace

TEST_CASE("es bound") {
  CHECK(es_bound(3, 3) == 20);
  for (unsigned k = 1; k < 30; ++k) CHECK(es_bound(k, 1) == k + 1);
  CHECK(es_bound(10, 10) == 184756);
  CHECK(es_bound(3, 4) == 35);
}

TEST_CASE("theorem bounds") {
  CHECK(close(paper_bound("explicit", 400, 400), exp(HighFloat(-1)) * hf(es_bound(400, 400))));
  CHECK(close(paper_bound("gamma", 400, 100), exp(HighFloat(-2)) * hf(es_bound(400, 100))));
  CHECK(close(paper_bound("near", 400, 360), exp(HighFloat(-4.5)) * hf(es_bound(400, 360))));
  CHECK(close(paper_bound("diagonal10", 50, 50), pow(HighFloat(4) - HighFloat(1) / 1024, 50)));

  CHECK_THROWS_AS(paper_bound("explicit", 10, 11), RangeError);
  CHECK_THROWS_AS(paper_bound("gamma", 10, 5), RangeError);
  CHECK_THROWS_AS(paper_bound("diagonal7", 10, 9), RangeError);
  CHECK_THROWS_AS(paper_bound("nope", 10, 9), InvalidInput);
  try {
    paper_bound("nearer", 30, 25);
    FAIL("out of range accepted");
  } catch (const RangeError& e) {
    CHECK(std::string(e.what()).find("ell <= 2k/3") != std::string::npos);
  }

  // below the binomial bound wherever the printed factor is below 1
  for (unsigned k = 10; k <= 200; k += 10)
    for (const auto& row : bound_rows(k, k)) {
      if (row.ratio < 1) CHECK(row.value < hf(row.es));
    }
}

TEST_CASE("tables csv") {
  auto csv = tables_csv(10, 12, "equal");
  CHECK(csv.rfind("k,ell,es_bound,theorem,paper_bound,ratio,o_k_factor\n", 0) == 0);
  CHECK(csv.find("\n10,10,184756,explicit,") != std::string::npos);
  CHECK(csv == tables_csv(10, 12, "equal"));
  CHECK_THROWS_AS(tables_csv(10, 12, "half"), InvalidInput);
  CHECK_THROWS_AS(tables_csv(5, 4, "equal"), InvalidInput);
}

TEST_CASE("es greedy") {
  Colouring red(10);
  for (Vertex u = 0; u < 10; ++u)
    for (Vertex v = u + 1; v < 10; ++v) red.set(u, v, Colour::Red);
  auto r = es_greedy(red, 4, 4);
  CHECK(r.outcome == EsOutcome::RedClique);
  CHECK(r.clique.size() == 4);
  CHECK(is_clique(red, Colour::Red, r.clique));

  for (std::uint64_t seed = 0; seed < 500; ++seed) {
    auto c = random_colouring(20, Rational(1, 2), seed);
    auto e = es_greedy(c, 3, 3);
    CHECK(e.outcome != EsOutcome::Exhausted);
    CHECK(is_clique(c, e.outcome == EsOutcome::RedClique ? Colour::Red : Colour::Blue, e.clique));
  }
  // Paley-17 has no K4 in either colour, so the greedy must run out
  auto p = es_greedy(paley_colouring(17), 4, 4);
  CHECK(p.outcome == EsOutcome::Exhausted);
  CHECK(std::string(es_outcome_name(p.outcome)) == "exhausted");
}

TEST_CASE("small ramsey numbers") {
  CHECK(known_ramsey(3, 3) == 6u);
  CHECK(known_ramsey(4, 3) == 9u);
  CHECK(!known_ramsey(4, 4).has_value());
  auto w = find_ramsey_witness(8, 3, 4);
  REQUIRE(w.has_value());
  CHECK(has_mono_clique(*w, 3, 4).kind == MonoResult::Neither);
  CHECK(!find_ramsey_witness(6, 3, 3).has_value());
  CHECK(all_colourings_forced(6, 3, 3));
  CHECK(!all_colourings_forced(5, 3, 3));
}
