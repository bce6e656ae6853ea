#include "rbl/ramsey_tables.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <gmp.h>
#include <mpfr.h>
#include <mutex>
#include <sstream>

#include "rbl/cliques.hpp"
#include "rbl/errors.hpp"

namespace rbl {

BigInt es_bound(unsigned k, unsigned ell) {
  BigInt out;
  mpz_bin_uiui(out.backend().data(), k + ell, ell);
  return out;
}

const std::vector<std::string>& theorem_ids() {
  static const std::vector<std::string> ids{"weak", "gamma", "near", "nearer", "explicit",
                                            "diagonal10", "diagonal7"};
  return ids;
}

namespace {

HighFloat to_hf(const BigInt& z) {
  HighFloat r;
  mpfr_set_z(r.backend().data(), z.backend().data(), MPFR_RNDN);
  return r;
}

void require(bool ok, const std::string& theorem, const std::string& constraint) {
  if (!ok) throw RangeError("theorem " + theorem + " needs " + constraint);
}

}  // namespace

HighFloat paper_log_factor(const std::string& th, unsigned k, unsigned ell) {
  require(k >= 1 && ell >= 1, th, "k, ell >= 1");
  const HighFloat K(k), L(ell);
  if (th == "weak") {
    require(10ULL * ell <= k + ell, th, "gamma = ell/(k+ell) <= 1/10");
    return -(L / (K + L)) * K / 20;
  }
  if (th == "gamma") {
    require(5ULL * ell <= k + ell, th, "gamma = ell/(k+ell) <= 1/5");
    return -(L / (K + L)) * K / 40;
  }
  if (th == "near") {
    require(10ULL * ell <= 9ULL * k, th, "ell <= 9k/10");
    return -L / 80;
  }
  if (th == "nearer") {
    require(3ULL * ell <= 2ULL * k, th, "ell <= 2k/3");
    return -L / 50;
  }
  if (th == "explicit") {
    require(ell <= k, th, "ell <= k");
    return -L / 400;
  }
  if (th == "diagonal10" || th == "diagonal7") {
    require(ell == k, th, "ell = k");
    HighFloat eps = th == "diagonal10" ? HighFloat(1) / 1024 : HighFloat(1) / 128;
    return K * log(HighFloat(4) - eps) - log(to_hf(es_bound(k, k)));
  }
  throw InvalidInput("unknown theorem '" + th + "'");
}

HighFloat paper_bound(const std::string& th, unsigned k, unsigned ell) {
  HighFloat lf = paper_log_factor(th, k, ell);
  if (th == "diagonal10" || th == "diagonal7") {
    HighFloat eps = th == "diagonal10" ? HighFloat(1) / 1024 : HighFloat(1) / 128;
    return pow(HighFloat(4) - eps, k);
  }
  return exp(lf) * to_hf(es_bound(k, ell));
}

const char* es_outcome_name(EsOutcome o) {
  switch (o) {
    case EsOutcome::RedClique: return "red clique";
    case EsOutcome::BlueClique: return "blue clique";
    case EsOutcome::Exhausted: return "exhausted";
  }
  return "?";
}

EsResult es_greedy(const Colouring& c, unsigned k, unsigned ell) {
  if (k < 1 || ell < 1) throw InvalidInput("es_greedy: k and ell must be positive");
  const std::size_t n = c.n();
  VertexSet X = VertexSet::full(n), A(n), B(n);
  EsResult res;
  while (X.size() > 0) {
    const Vertex x = static_cast<Vertex>(X.first());
    const std::uint64_t kr = k - A.size(), lr = ell - B.size();
    const std::uint64_t size = X.size();  // |X| with x still in it
    X.erase(x);
    const std::uint64_t b = VertexSet::intersect_count(c.blue(x), X);
    ++res.steps;
    // |N_B(x) cap X| >= gamma' |X| with gamma' = lr/(kr+lr)
    if (b * (kr + lr) >= lr * size) {
      B.insert(x);
      X &= c.blue(x);
      if (B.size() == ell) {
        res.outcome = EsOutcome::BlueClique;
        res.clique = B;
        return res;
      }
    } else {
      A.insert(x);
      X &= c.red(x);
      if (A.size() == k) {
        res.outcome = EsOutcome::RedClique;
        res.clique = A;
        return res;
      }
    }
  }
  res.outcome = EsOutcome::Exhausted;
  return res;
}

namespace {

using Mask = std::uint64_t;

// true if the graph given by adjacency masks has a clique of `size` inside `cand`
bool has_clique(const std::vector<Mask>& adj, Mask cand, unsigned size) {
  if (size == 0) return true;
  if (static_cast<unsigned>(std::popcount(cand)) < size) return false;
  while (cand) {
    int v = std::countr_zero(cand);
    cand &= cand - 1;
    if (has_clique(adj, cand & adj[v], size - 1)) return true;
    if (static_cast<unsigned>(std::popcount(cand)) < size) return false;
  }
  return false;
}

// Edge-by-edge backtracking, edges ordered column-wise ((0,1),(0,2),(1,2),(0,3),...).
// Vertex 0's row is taken sorted (red neighbours first), which loses no generality.
class WitnessSearch {
 public:
  WitnessSearch(unsigned n, unsigned k, unsigned ell) : n_(n), k_(k), ell_(ell), red_(n), blue_(n) {
    for (unsigned v = 1; v < n; ++v)
      for (unsigned u = 0; u < v; ++u) edges_.push_back({u, v});
  }

  std::optional<Colouring> run() {
    if (n_ == 0) return Colouring(0);
    if (k_ <= 1 || ell_ <= 1) return std::nullopt;  // a single vertex is both cliques
    if (n_ == 1) return Colouring(1);
    if (!go(0)) return std::nullopt;
    Colouring c(n_);
    for (unsigned v = 0; v < n_; ++v)
      for (unsigned u = v + 1; u < n_; ++u)
        if (red_[v] >> u & 1) c.set(v, u, Colour::Red);
    return c;
  }

 private:
  bool closes(const std::vector<Mask>& adj, unsigned u, unsigned v, unsigned size) const {
    Mask common = adj[u] & adj[v] & ((Mask(1) << v) - 1);
    return has_clique(adj, common, size - 2);
  }

  bool go(std::size_t i) {
    if (i == edges_.size()) return true;
    auto [u, v] = edges_[i];
    for (Colour col : {Colour::Red, Colour::Blue}) {
      if (u == 0 && col == Colour::Red && v > 1 && !(red_[0] >> (v - 1) & 1)) continue;
      auto& adj = col == Colour::Red ? red_ : blue_;
      unsigned size = col == Colour::Red ? k_ : ell_;
      adj[u] |= Mask(1) << v;
      adj[v] |= Mask(1) << u;
      if (!closes(adj, u, v, size) && go(i + 1)) return true;
      adj[u] &= ~(Mask(1) << v);
      adj[v] &= ~(Mask(1) << u);
    }
    return false;
  }

  unsigned n_, k_, ell_;
  std::vector<Mask> red_, blue_;
  std::vector<std::pair<unsigned, unsigned>> edges_;
};

}  // namespace

std::optional<Colouring> find_ramsey_witness(unsigned n, unsigned k, unsigned ell) {
  if (n > 64) throw InvalidInput("find_ramsey_witness: n must be at most 64");
  auto w = WitnessSearch(n, k, ell).run();
  if (w && has_mono_clique(*w, k, ell).kind != MonoResult::Neither)
    throw InternalError("find_ramsey_witness: witness failed the clique recheck");
  return w;
}

bool all_colourings_forced(unsigned n, unsigned k, unsigned ell) {
  if (n > 8) throw InvalidInput("all_colourings_forced: n must be at most 8");
  const unsigned m = n * (n - 1) / 2;
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) edges.push_back({u, v});
  for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << m); ++mask) {
    Colouring c(n);
    for (unsigned e = 0; e < m; ++e)
      if (mask >> e & 1) c.set(edges[e].first, edges[e].second, Colour::Red);
    if (has_mono_clique(c, k, ell).kind == MonoResult::Neither) return false;
  }
  return true;
}

std::optional<unsigned> known_ramsey(unsigned k, unsigned ell) {
  if (k > ell) std::swap(k, ell);
  if (k != 3 || (ell != 3 && ell != 4)) return std::nullopt;
  static std::mutex mu;
  static std::optional<unsigned> cache[2];
  static bool done[2] = {false, false};
  std::lock_guard<std::mutex> lock(mu);
  const int i = ell == 3 ? 0 : 1;
  if (!done[i]) {
    const unsigned claimed = ell == 3 ? 6 : 9;
    bool ok = find_ramsey_witness(claimed - 1, k, ell).has_value() &&
              !find_ramsey_witness(claimed, k, ell).has_value();
    if (ell == 3) ok = ok && all_colourings_forced(6, 3, 3);
    cache[i] = ok ? std::optional<unsigned>(claimed) : std::nullopt;
    done[i] = true;
  }
  return cache[i];
}

std::vector<BoundRow> bound_rows(unsigned k, unsigned ell) {
  std::vector<BoundRow> rows;
  for (const auto& th : theorem_ids()) {
    try {
      BoundRow r;
      r.k = k;
      r.ell = ell;
      r.es = es_bound(k, ell);
      r.theorem = th;
      r.value = paper_bound(th, k, ell);
      r.ratio = exp(paper_log_factor(th, k, ell));
      rows.push_back(std::move(r));
    } catch (const RangeError&) {
    }
  }
  return rows;
}

std::string tables_csv(unsigned k_lo, unsigned k_hi, const std::string& rule) {
  if (rule != "equal" && rule != "quarter" && rule != "ninetenths")
    throw InvalidInput("unknown ell rule '" + rule + "' (expected equal, quarter or ninetenths)");
  if (k_lo < 1 || k_hi < k_lo) throw InvalidInput("bad k range");
  std::ostringstream os;
  os << "k,ell,es_bound,theorem,paper_bound,ratio,o_k_factor\n";
  for (unsigned k = k_lo; k <= k_hi; ++k) {
    unsigned ell = rule == "equal" ? k : rule == "quarter" ? k / 4 : 9 * k / 10;
    if (ell < 1) continue;
    for (const auto& r : bound_rows(k, ell)) {
      os << r.k << ',' << r.ell << ',' << r.es.str() << ',' << r.theorem << ','
         << r.value.str(12, std::ios_base::scientific) << ','
         << r.ratio.str(12, std::ios_base::scientific) << ",dropped\n";
    }
  }
  return os.str();
}

}  // namespace rbl
