#include "rbl/cliques.hpp"

#include <algorithm>
#include <vector>

#include "rbl/errors.hpp"

namespace rbl {

namespace {

struct CliqueSearch {
  const Colouring& c;
  Colour colour;
  std::size_t cap;
  std::vector<Vertex> cur, best;

  bool done() const { return best.size() >= cap; }

  void expand(const VertexSet& P) {
    // greedy colouring in index order gives the bound
    std::vector<Vertex> order;
    std::vector<std::size_t> bound;
    order.reserve(P.size());
    bound.reserve(P.size());
    VertexSet U = P;
    std::size_t k = 0;
    while (!U.empty()) {
      ++k;
      VertexSet Q = U;
      while (!Q.empty()) {
        Vertex v = Q.first();
        Q.erase(v);
        Q -= c.nbr(v, colour);
        U.erase(v);
        order.push_back(v);
        bound.push_back(k);
      }
    }
    VertexSet rest = P;
    for (std::size_t i = order.size(); i-- > 0;) {
      if (cur.size() + bound[i] <= best.size() || done()) return;
      Vertex v = order[i];
      cur.push_back(v);
      VertexSet next = rest & c.nbr(v, colour);
      if (next.empty()) {
        if (cur.size() > best.size()) best = cur;
      } else {
        expand(next);
      }
      cur.pop_back();
      rest.erase(v);
    }
  }
};

}  // namespace

bool is_clique(const Colouring& c, Colour colour, const VertexSet& s) {
  auto vs = s.to_vector();
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = i + 1; j < vs.size(); ++j)
      if (c.is_red(vs[i], vs[j]) != (colour == Colour::Red)) return false;
  return true;
}

bool is_book(const Colouring& c, const Book& b) {
  if (!b.spine.disjoint(b.pages) || !is_clique(c, b.colour, b.spine)) return false;
  bool ok = true;
  b.spine.for_each([&](Vertex s) {
    b.pages.for_each([&](Vertex t) {
      if (c.is_red(s, t) != (b.colour == Colour::Red)) ok = false;
    });
  });
  return ok;
}

VertexSet max_clique(const Colouring& c, Colour colour, const VertexSet& within,
                     std::size_t size_cap) {
  if (within.empty()) throw ContractViolation("max_clique needs a nonempty vertex set");
  if (size_cap < 1) throw ContractViolation("size_cap must be at least 1");
  CliqueSearch s{c, colour, size_cap, {}, {}};
  s.expand(within);
  if (s.best.size() > size_cap) s.best.resize(size_cap);
  VertexSet out = VertexSet::of(c.n(), s.best);
  if (!is_clique(c, colour, out) || !out.is_subset_of(within))
    throw InternalError("max_clique produced a non-clique");
  return out;
}

MonoWitness has_mono_clique(const Colouring& c, std::size_t k, std::size_t ell) {
  if (k < 1 || ell < 1) throw InvalidInput("k and ell must be at least 1");
  VertexSet all = VertexSet::full(c.n());
  VertexSet r = max_clique(c, Colour::Red, all, k);
  if (r.size() >= k) return {MonoResult::RedClique, r};
  VertexSet b = max_clique(c, Colour::Blue, all, ell);
  if (b.size() >= ell) return {MonoResult::BlueClique, b};
  return {MonoResult::Neither, VertexSet(c.n())};
}

VertexSet high_blue_degree(const Colouring& c, const VertexSet& within, const Rational& mu) {
  VertexSet W(c.n());
  BigInt num = boost::multiprecision::numerator(mu), den = boost::multiprecision::denominator(mu);
  BigInt rhs = num * within.size();
  within.for_each([&](Vertex x) {
    if (den * VertexSet::intersect_count(c.blue(x), within) >= rhs) W.insert(x);
  });
  return W;
}

namespace {

constexpr std::size_t kSubsetEvalCap = 2'000'000;

// need(s) = smallest integer |T| with |T| >= mu^s * |within| / 2, grown on demand
class PageThresholds {
 public:
  PageThresholds(const Rational& mu, std::size_t within) : mu_(mu), within_(within) {}
  std::size_t operator()(std::size_t s) {
    while (need_.size() <= s) {
      Rational v = pow_ * within_ / 2;
      BigInt q = boost::multiprecision::numerator(v) / boost::multiprecision::denominator(v);
      if (Rational(q) < v) q += 1;
      need_.push_back(q.convert_to<std::size_t>());
      pow_ *= mu_;
    }
    return need_[s];
  }

 private:
  Rational mu_, pow_ = 1;
  std::size_t within_;
  std::vector<std::size_t> need_;
};

struct SubsetSearch {
  const Colouring& c;
  const std::vector<Vertex>& U;
  std::size_t target;
  std::size_t need;
  std::size_t evals = 0;
  std::vector<Vertex> cur, best;
  std::size_t best_pages = 0;
  bool found = false;

  void go(std::size_t from, const VertexSet& T) {
    if (evals >= kSubsetEvalCap) return;
    ++evals;
    if (T.size() < need) return;
    if (cur.size() == target) {
      if (!found || T.size() > best_pages) {
        found = true;
        best = cur;
        best_pages = T.size();
      }
      return;
    }
    for (std::size_t i = from; i + (target - cur.size()) <= U.size(); ++i) {
      cur.push_back(U[i]);
      go(i + 1, T & c.blue(U[i]));
      cur.pop_back();
    }
  }
};

}  // namespace

Book best_blue_book(const Colouring& c, const VertexSet& within, const Rational& mu,
                    std::size_t spine_budget) {
  if (within.empty()) throw ContractViolation("best_blue_book needs a nonempty vertex set");
  if (mu <= 0 || mu >= 1) throw ContractViolation("mu must lie in (0,1)");
  bool any_blue = false;
  within.for_each([&](Vertex x) {
    if (!any_blue && !(c.blue(x) & within).empty()) any_blue = true;
  });
  if (!any_blue) throw NoBookError("no vertex has a blue neighbour");

  VertexSet W = high_blue_degree(c, within, mu);
  if (W.empty()) W = within;

  // greedy seed: blue clique in W, each time keeping the largest common neighbourhood
  std::vector<Vertex> U;
  VertexSet cand = W, T = within;
  while (!cand.empty()) {
    Vertex pick = 0;
    std::size_t pick_size = 0;
    bool have = false;
    cand.for_each([&](Vertex v) {
      std::size_t sz = VertexSet::intersect_count(T, c.blue(v));
      if (!have || sz > pick_size) pick = v, pick_size = sz, have = true;
    });
    U.push_back(pick);
    T &= c.blue(pick);
    cand &= c.blue(pick);
  }
  std::vector<Vertex> sortedU = U;
  std::sort(sortedU.begin(), sortedU.end());

  PageThresholds need(mu, within.size());
  auto pages_of = [&](const std::vector<Vertex>& S) {
    VertexSet t = within;
    for (Vertex v : S) t &= c.blue(v);
    return t;
  };

  // baseline: longest feasible prefix of the greedy order
  std::vector<Vertex> spine;
  for (std::size_t s = std::min(U.size(), spine_budget); s >= 1; --s) {
    std::vector<Vertex> pre(U.begin(), U.begin() + static_cast<long>(s));
    if (pages_of(pre).size() >= need(s)) {
      spine = pre;
      break;
    }
  }

  std::size_t evals = 0;
  std::size_t floor_size = std::max<std::size_t>(1, spine.size());
  for (std::size_t s = std::min(U.size(), spine_budget); s >= floor_size; --s) {
    SubsetSearch ss{c, sortedU, s, need(s), 0, {}, {}, 0, false};
    ss.go(0, within);
    evals += ss.evals;
    if (ss.found) {
      spine = ss.best;
      break;
    }
    if (evals >= kSubsetEvalCap) break;
  }
  if (spine.empty()) throw NoBookError("no blue book meets the page threshold");

  VertexSet pages = pages_of(spine);
  if (spine.size() >= spine_budget) {
    for (;;) {
      VertexSet cands = pages & W;
      if (cands.empty()) cands = pages;
      Vertex pick = 0;
      std::size_t pick_size = 0;
      bool have = false;
      cands.for_each([&](Vertex v) {
        std::size_t sz = VertexSet::intersect_count(pages, c.blue(v));
        if (!have || sz > pick_size) pick = v, pick_size = sz, have = true;
      });
      if (!have || pick_size < need(spine.size() + 1)) break;
      spine.push_back(pick);
      pages &= c.blue(pick);
    }
  }

  Book b{VertexSet::of(c.n(), spine), pages, Colour::Blue};
  if (!is_book(c, b) || !b.pages.is_subset_of(within) || !b.spine.is_subset_of(within) ||
      b.pages.size() < need(b.spine.size()))
    throw InternalError("best_blue_book recheck failed");
  return b;
}

}  // namespace rbl
