#include <algorithm>
#include <boost/multiprecision/mpfr.hpp>
#include <gmp.h>
#include <limits>
#include <mpfr.h>
#include <sstream>

#include "rbl/bounds.hpp"
#include "rbl/errors.hpp"
#include "rbl/parallel.hpp"

namespace rbl::bounds {

namespace {

using Real = boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<60>>;

BigInt binom(unsigned long n, unsigned long r) {
  BigInt out;
  if (r > n) return out;
  mpz_bin_uiui(out.backend().data(), n, r);
  return out;
}

Real to_real(const BigInt& z) {
  Real r;
  mpfr_set_z(r.backend().data(), z.backend().data(), MPFR_RNDN);
  return r;
}

Real to_real(const Rational& q) {
  Real r;
  mpfr_set_q(r.backend().data(), q.backend().data(), MPFR_RNDN);
  return r;
}

Real ln(const Rational& q) { return log(to_real(q)); }

BigInt ipow(const BigInt& b, unsigned e) {
  BigInt out;
  mpz_pow_ui(out.backend().data(), b.backend().data(), e);
  return out;
}

Rational rpow(const Rational& b, unsigned e) {
  return Rational(ipow(numerator(b), e), ipow(denominator(b), e));
}

// Partial tally for one slice of a sweep; merged in slice order.
struct Tally {
  std::size_t checked = 0, skipped = 0, violations = 0;
  double worst = std::numeric_limits<double>::infinity();
  std::string first;

  void skip() { ++skipped; }
  void record(const Real& margin, bool violated, const std::string& where) {
    ++checked;
    worst = std::min(worst, margin.convert_to<double>());
    if (violated) {
      if (violations++ == 0) first = where;
    }
  }
};

FactResult merge(const std::string& id, const std::vector<Tally>& parts) {
  FactResult r;
  r.id = id;
  r.worst_margin = std::numeric_limits<double>::infinity();
  for (const auto& t : parts) {
    r.checked += t.checked;
    r.skipped += t.skipped;
    if (t.violations && r.violations == 0) r.first_violation = t.first;
    r.violations += t.violations;
    r.worst_margin = std::min(r.worst_margin, t.worst);
  }
  if (r.checked == 0) r.worst_margin = 0;
  return r;
}

// X <= exp(a) Y for positive rationals X, Y. Exact when a = 0, otherwise decided on
// the margin ln Y - ln X + a at 60 digits.
void check_le_exp(Tally& t, const Rational& X, const Rational& Y, const Rational& a,
                  const std::string& where) {
  if (a == 0) {
    Real m = X == Y ? Real(0) : ln(Y / X);
    t.record(m, X > Y, where);
    return;
  }
  Real m = ln(Y / X) + to_real(a);
  t.record(m, m < 0, where);
}

std::string tuple(std::initializer_list<std::pair<const char*, std::string>> kv) {
  std::string s;
  for (const auto& [k, v] : kv) s += (s.empty() ? "" : " ") + std::string(k) + "=" + v;
  return s;
}

void fact1(const BinomialSweep& sw, unsigned jobs, BinomialReport& rep) {
  std::vector<Tally> two(sw.m_max + 1), strong(sw.m_max + 1);
  parallel_for(sw.m_max + 1, jobs, [&](std::size_t mi) {
    const long m = static_cast<long>(mi);
    if (m < 1) return;
    for (const Rational& sigma : sw.sigmas) {
      Rational sm = sigma * m;
      for (long b = 0; 2 * b <= m; ++b) {
        if (denominator(sm) != 1) {
          two[mi].skip();
          strong[mi].skip();
          continue;
        }
        const unsigned long smi = numerator(sm).convert_to<unsigned long>();
        Rational lower_side = rpow(sigma, b) * Rational(binom(m, b));
        Rational mid(binom(smi, b));
        std::string where = tuple({{"m", std::to_string(m)}, {"b", std::to_string(b)}, {"sigma", to_string(sigma)}});
        if (static_cast<unsigned long>(2 * b) <= smi) {
          check_le_exp(two[mi], lower_side, mid, Rational(b * b) / sm, where + " lower");
          check_le_exp(two[mi], mid, lower_side, Rational(0), where + " upper");
        } else {
          two[mi].skip();
        }
        if (7 * b <= m && sigma >= Rational(7, 15))
          check_le_exp(strong[mi], lower_side, mid, Rational(3 * b * b, 4 * m), where);
        else
          strong[mi].skip();
      }
    }
  });
  rep.facts.push_back(merge("binomial:fact1", two));
  rep.facts.push_back(merge("binomial:fact1:stronger", strong));
}

void fact_app_d(const BinomialSweep& sw, unsigned jobs, BinomialReport& rep) {
  std::vector<Tally> appd(sw.k_max + 1), f4(sw.k_max + 1), fin(sw.k_max + 1);
  parallel_for(sw.k_max + 1, jobs, [&](std::size_t ki) {
    const long k = static_cast<long>(ki);
    if (k < 1) return;
    for (long l = 1; l <= sw.ell_max; ++l) {
      const Rational gamma(l, k + l);
      const Rational full(binom(k + l, l));
      for (long t = 0; t <= std::min<long>(k, sw.t_max); ++t) {
        std::string where = tuple({{"k", std::to_string(k)}, {"ell", std::to_string(l)}, {"t", std::to_string(t)}});
        if (t == 0) {
          // the (t-1)^2 factor needs t >= 1
          appd[ki].skip();
          f4[ki].skip();
          continue;
        }
        Rational X(binom(k + l - t, l));
        check_le_exp(appd[ki], X, rpow(Rational(k, k + l), t) * full,
                     -gamma * (t - 1) * (t - 1) / (2 * k), where);
        if (l <= k) {
          // C(k+l,l) >= 2^{o(k)} (1-gamma)^{-t} exp(gamma t^2/2k) C(k-t+l,l), with the
          // subexponential factor made explicit as exp(-gamma(2t-1)/2k)
          Rational a = gamma * t * t / (2 * k) - gamma * (2 * t - 1) / (2 * k);
          check_le_exp(f4[ki], X / rpow(1 - gamma, t), full, -a, where);
        } else {
          f4[ki].skip();
        }
      }
      for (long b = 0; b <= l; ++b) {
        if (b == 0 || l > k) {
          fin[ki].skip();
          continue;
        }
        std::string where = tuple({{"k", std::to_string(k)}, {"ell", std::to_string(l)}, {"b", std::to_string(b)}});
        check_le_exp(fin[ki], Rational(binom(k + l - b, l - b)), rpow(gamma, b) * full,
                     -(1 - gamma) * (b - 1) * (b - 1) / (2 * l), where);
      }
    }
  });
  rep.facts.push_back(merge("app:D", appd));
  rep.facts.push_back(merge("binomial:fact4", f4));
  rep.facts.push_back(merge("final:fact", fin));
}

BigInt pow0(long b, long e) { return e == 0 ? BigInt(1) : ipow(BigInt(b), static_cast<unsigned>(e)); }

void fact_entropy(const BinomialSweep& sw, unsigned jobs, BinomialReport& rep) {
  std::vector<Tally> ent(sw.entropy_a_max + 1), ent2(sw.k_max + 1);
  parallel_for(sw.entropy_a_max + 1, jobs, [&](std::size_t ai) {
    const long a = static_cast<long>(ai);
    if (a < 1) return;
    const BigInt aa = pow0(a, a);
    for (long b = 0; b <= a; ++b) {
      // log2 C(a,b) <= a h(b/a)  <=>  C(a,b) b^b (a-b)^(a-b) <= a^a
      BigInt lhs = binom(a, b) * pow0(b, b) * pow0(a - b, a - b);
      Real m = lhs == aa ? Real(0) : log(to_real(aa)) - log(to_real(lhs));
      ent[ai].record(m, lhs > aa, tuple({{"a", std::to_string(a)}, {"b", std::to_string(b)}}));
    }
  });
  parallel_for(sw.k_max + 1, jobs, [&](std::size_t ki) {
    const long k = static_cast<long>(ki);
    if (k < 1) return;
    for (long l = 1; l <= sw.ell_max; ++l) {
      if (l > k) {
        ent2[ki].skip();
        continue;
      }
      // (k+l) h*(gamma) - ln C(k+l,l) lies in [0, ln(k+l+1)]
      const long n = k + l;
      BigInt base = binom(n, l) * pow0(k, k) * pow0(l, l);
      BigInt nn = pow0(n, n);
      Real gap = log(to_real(nn)) - log(to_real(base));
      Real up = log(Real(n + 1)) - gap;
      Real m = gap < up ? gap : up;
      bool bad = base > nn || nn > base * (n + 1);
      ent2[ki].record(m, bad, tuple({{"k", std::to_string(k)}, {"ell", std::to_string(l)}}));
    }
  });
  rep.facts.push_back(merge("fact:entropy", ent));
  rep.facts.push_back(merge("fact:entropy2", ent2));
}

void fact_gammas(const BinomialSweep& sw, unsigned jobs, BinomialReport& rep) {
  std::vector<Tally> parts(sw.thetas.size());
  parallel_for(sw.thetas.size(), jobs, [&](std::size_t ti) {
    const Rational& th = sw.thetas[ti];
    Real prev = 0;
    bool have = false;
    for (int e = sw.ratio_exp_lo; e <= sw.ratio_exp_hi; ++e) {
      const long k = 1L << e;
      Rational lr = th * k;
      BigInt lc = numerator(lr) / denominator(lr);
      if (lc * denominator(lr) != numerator(lr)) lc += 1;
      const long l = lc.convert_to<long>();
      if (l > k || l < 1) {
        parts[ti].skip();
        continue;
      }
      Rational gamma(l, k + l);
      // d(k) = ln C(k+l,l) - ln(gamma^-l (1-gamma)^-k) <= 0, and |d(k)|/k must fall with k
      Real d = log(to_real(binom(k + l, l))) + l * ln(gamma) + k * ln(1 - gamma);
      Real r = abs(d) / k;
      std::string where = tuple({{"theta", to_string(th)}, {"k", std::to_string(k)}});
      if (have) {
        Real m = prev - r;
        parts[ti].record(m, m <= 0 || d > 0, where);
      }
      prev = r;
      have = true;
    }
  });
  rep.facts.push_back(merge("fact:binomal:gammas", parts));
}

}  // namespace

bool BinomialReport::pass() const {
  return std::all_of(facts.begin(), facts.end(),
                     [](const FactResult& f) { return f.violations == 0 && f.checked > 0; });
}

const FactResult& BinomialReport::fact(const std::string& id) const {
  for (const auto& f : facts)
    if (f.id == id) return f;
  throw InvalidInput("no fact '" + id + "'");
}

BinomialReport verify_binomial_facts(const BinomialSweep& sweep, unsigned jobs) {
  if (sweep.m_max < 1 || sweep.k_max < 1 || sweep.ell_max < 1 || sweep.t_max < 0 ||
      sweep.entropy_a_max < 1 || sweep.ratio_exp_lo < 1 || sweep.ratio_exp_hi > 20 ||
      sweep.ratio_exp_lo > sweep.ratio_exp_hi)
    throw InvalidInput("verify_binomial_facts: bad sweep ranges");
  for (const Rational& s : sweep.sigmas)
    if (s <= 0 || s >= 1) throw InvalidInput("verify_binomial_facts: sigma must lie in (0,1)");
  for (const Rational& t : sweep.thetas)
    if (t <= 0) throw InvalidInput("verify_binomial_facts: theta must be positive");
  if (jobs == 0) jobs = 1;
  BinomialReport rep;
  fact1(sweep, jobs, rep);
  fact_app_d(sweep, jobs, rep);
  fact_entropy(sweep, jobs, rep);
  fact_gammas(sweep, jobs, rep);
  return rep;
}

std::string binomial_csv(const BinomialReport& rep) {
  std::ostringstream os;
  os << "fact_id,checked,skipped,violations,worst_margin,first_violation,status\n";
  for (const auto& f : rep.facts)
    os << f.id << ',' << f.checked << ',' << f.skipped << ',' << f.violations << ','
       << fmt(f.worst_margin) << ',' << f.first_violation << ','
       << (f.violations == 0 && f.checked > 0 ? "pass" : "fail") << '\n';
  return os.str();
}

}  // namespace rbl::bounds
