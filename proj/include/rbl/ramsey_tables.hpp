#pragma once

#include <boost/multiprecision/mpfr.hpp>
#include <optional>
#include <string>
#include <vector>

#include "rbl/colouring.hpp"
#include "rbl/rational.hpp"

namespace rbl {

using HighFloat = boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<50>>;

// C(k+l, l)
BigInt es_bound(unsigned k, unsigned ell);

// weak, gamma, near, nearer, explicit, diagonal10 (eps = 2^-10), diagonal7 (eps = 2^-7)
const std::vector<std::string>& theorem_ids();

// The theorem's bound with its o(k) term dropped. RangeError names the violated constraint.
HighFloat paper_bound(const std::string& theorem, unsigned k, unsigned ell);

// Natural log of the printed factor multiplying C(k+l,l) (for the diagonal bound,
// k ln(4-eps) - ln C(2k,k)).
HighFloat paper_log_factor(const std::string& theorem, unsigned k, unsigned ell);

enum class EsOutcome { RedClique, BlueClique, Exhausted };
const char* es_outcome_name(EsOutcome o);

struct EsResult {
  EsOutcome outcome = EsOutcome::Exhausted;
  VertexSet clique;  // A or B when a clique was completed
  std::size_t steps = 0;
};

// Greedy of Erdos and Szekeres, gamma recomputed from the remaining targets.
EsResult es_greedy(const Colouring& c, unsigned k, unsigned ell);

// Colouring of K_n with no red K_k and no blue K_l, if one exists (exhaustive search).
std::optional<Colouring> find_ramsey_witness(unsigned n, unsigned k, unsigned ell);

// Every colouring of K_n (n <= 8) has a red K_k or a blue K_l, by enumeration.
bool all_colourings_forced(unsigned n, unsigned k, unsigned ell);

// R(3,3) and R(3,4), re-derived by search on first use; nullopt elsewhere.
std::optional<unsigned> known_ramsey(unsigned k, unsigned ell);

struct BoundRow {
  unsigned k = 0, ell = 0;
  BigInt es;
  std::string theorem;
  HighFloat value;
  HighFloat ratio;
};

// Rows for every theorem whose range contains (k, l).
std::vector<BoundRow> bound_rows(unsigned k, unsigned ell);

// ell_rule: equal (l = k), quarter (l = floor(k/4)), ninetenths (l = floor(9k/10))
std::string tables_csv(unsigned k_lo, unsigned k_hi, const std::string& ell_rule);

}  // namespace rbl
