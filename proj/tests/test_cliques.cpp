#include <doctest.h>

#include "rbl/cliques.hpp"
#include "rbl/errors.hpp"

using namespace rbl;

namespace {

Colouring all_of(std::size_t n, Colour col) {
  Colouring c(n);
  if (col == Colour::Red)
    for (Vertex u = 0; u < n; ++u)
      for (Vertex v = u + 1; v < n; ++v) c.set(u, v, Colour::Red);
  return c;
}

// naive: largest subset that is a clique
std::size_t brute_clique(const Colouring& c, Colour col) {
  const std::size_t n = c.n();
  std::size_t best = 0;
  for (std::uint32_t m = 1; m < (1u << n); ++m) {
    std::vector<Vertex> vs;
    for (Vertex v = 0; v < n; ++v)
      if (m >> v & 1) vs.push_back(v);
    if (vs.size() <= best) continue;
    if (is_clique(c, col, VertexSet::of(n, vs))) best = vs.size();
  }
  return best;
}

// u1..u5 = 0..4, w1..w5 = 5..9
Colouring uw_example() {
  Colouring c(10);
  for (Vertex a = 5; a < 10; ++a)
    for (Vertex b = a + 1; b < 10; ++b) c.set(a, b, Colour::Red);
  return c;
}

}  // namespace

TEST_CASE("max clique on trivial colourings") {
  auto red = all_of(6, Colour::Red);
  CHECK(max_clique(red, Colour::Red, VertexSet::full(6), 6).size() == 6);
  CHECK(max_clique(red, Colour::Blue, VertexSet::full(6), 6).size() == 1);
  CHECK(max_clique(red, Colour::Red, VertexSet::full(6), 4).size() == 4);
  CHECK_THROWS_AS(max_clique(red, Colour::Red, VertexSet(6), 3), ContractViolation);
}

TEST_CASE("paley 17") {
  auto c = paley_colouring(17);
  auto all = VertexSet::full(17);
  auto r = max_clique(c, Colour::Red, all, 17);
  CHECK(r.size() == 3);
  CHECK(is_clique(c, Colour::Red, r));
  CHECK(max_clique(c, Colour::Blue, all, 17).size() == 3);
  CHECK(has_mono_clique(c, 4, 4).kind == MonoResult::Neither);
  CHECK(has_mono_clique(c, 3, 4).kind != MonoResult::Neither);
}

TEST_CASE("max clique agrees with brute force") {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    std::size_t n = 6 + seed % 7;
    auto c = random_colouring(n, Rational(1, 2), seed);
    for (Colour col : {Colour::Red, Colour::Blue}) {
      auto q = max_clique(c, col, VertexSet::full(n), n);
      CHECK(is_clique(c, col, q));
      CHECK(q.size() == brute_clique(c, col));
    }
  }
}

TEST_CASE("has_mono_clique") {
  auto blue = all_of(5, Colour::Blue);
  CHECK(has_mono_clique(blue, 2, 6).kind == MonoResult::Neither);
  auto w = has_mono_clique(blue, 2, 5);
  CHECK(w.kind == MonoResult::BlueClique);
  CHECK(w.clique.size() == 5);
  CHECK_THROWS_AS(has_mono_clique(blue, 0, 3), InvalidInput);
}

TEST_CASE("every colouring of K6 has a monochromatic triangle") {
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (Vertex u = 0; u < 6; ++u)
    for (Vertex v = u + 1; v < 6; ++v) edges.push_back({u, v});
  int neither = 0;
  for (std::uint32_t m = 0; m < (1u << 15); ++m) {
    Colouring c(6);
    for (int e = 0; e < 15; ++e)
      if (m >> e & 1) c.set(edges[e].first, edges[e].second, Colour::Red);
    neither += has_mono_clique(c, 3, 3).kind == MonoResult::Neither;
  }
  CHECK(neither == 0);
}

TEST_CASE("best blue book") {
  auto c = uw_example();
  Book b = best_blue_book(c, VertexSet::full(10), Rational(2, 5));
  CHECK(b.spine == VertexSet::range(10, 0, 5));
  CHECK(b.pages == VertexSet::range(10, 5, 10));
  CHECK(is_book(c, b));

  auto hb = high_blue_degree(c, VertexSet::full(10), Rational(2, 5));
  for (Vertex u = 0; u < 5; ++u) CHECK(hb.contains(u));

  auto blue8 = all_of(8, Colour::Blue);
  Book b8 = best_blue_book(blue8, VertexSet::full(8), Rational(1, 2), 7);
  CHECK(b8.spine.size() == 7);
  CHECK(b8.pages.size() == 1);

  CHECK_THROWS_AS(best_blue_book(all_of(6, Colour::Red), VertexSet::full(6), Rational(1, 2)),
                  NoBookError);
}

TEST_CASE("best blue book honours its page contract") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    auto c = random_colouring(40, Rational(1, 2), 100 + seed);
    auto within = VertexSet::range(40, 0, 30);
    Rational mu(2, 5);
    Book b = best_blue_book(c, within, mu, 6);
    CHECK(is_book(c, b));
    CHECK(b.spine.size() >= 1);
    CHECK(b.pages.is_subset_of(within));
    CHECK(Rational(b.pages.size()) >= pow(mu, b.spine.size()) * within.size() / 2);
  }
}
