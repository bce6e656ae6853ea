#include <doctest.h>

#include <cmath>
#include <random>

#include "rbl/bounds.hpp"
#include "rbl/errors.hpp"

using namespace rbl;
using namespace rbl::bounds;

namespace {

const std::vector<BoundFunction> all_fns() {
  return {{Fn::h2}, {Fn::hstar}, {Fn::f1}, {Fn::f2}, {Fn::f}, {Fn::g},
          {Fn::G_mu, 0.45}, {Fn::fstar_nu, 0.4, 0.6, 0.8}, {Fn::Gstar_mu, 0.35, 0.5, 0.9}};
}

bool is_entropy(const BoundFunction& f) { return f.id == Fn::h2 || f.id == Fn::hstar; }

}  // namespace

TEST_CASE("closed-form values") {
  CHECK(eval({Fn::f1}, 0, 0) == doctest::Approx(2).epsilon(1e-14));
  CHECK(eval({Fn::f1}, 1, 0) == doctest::Approx(1).epsilon(1e-14));
  CHECK(eval({Fn::g}, 1, 0) == doctest::Approx(std::log2(25.0 / 6)).epsilon(1e-12));
  CHECK(eval({Fn::h2}, 0.5, 0) == doctest::Approx(1).epsilon(1e-14));
  CHECK(eval({Fn::h2}, 0, 0) == 0);
  CHECK(eval({Fn::h2}, 1, 0) == 0);
  CHECK(derivative_x({Fn::f1}, 0.5, 0.3) == doctest::Approx(-std::log2(1.5)).epsilon(1e-12));
  CHECK(std::abs(derivative_x({Fn::f1}, 0, 0.3)) < 1e-14);
  CHECK_THROWS_AS(eval({Fn::f1}, 1.5, 0), DomainError);
  CHECK_THROWS_AS(eval({Fn::g}, std::nan(""), 0.2), DomainError);
  CHECK(parse_fn(fn_name(Fn::Gstar_mu)) == Fn::Gstar_mu);
}

TEST_CASE("derivatives agree with central differences") {
  std::mt19937_64 rng(2024);
  std::uniform_real_distribution<double> u(0.05, 0.95);
  for (const auto& fn : all_fns()) {
    for (int i = 0; i < 1000; ++i) {
      double x = u(rng), y = u(rng);
      if (fn.id == Fn::f && std::abs(x - 0.75) < 1e-3) continue;  // jump
      const double h = 1e-6;
      double fd = (eval(fn, x + h, y) - eval(fn, x - h, y)) / (2 * h);
      double d = derivative_x(fn, x, y);
      INFO(fn_name(fn.id) << " at " << x << ", " << y);
      CHECK(std::abs(fd - d) <= 1e-6 * std::max(1.0, std::abs(d)) + 2e-7);
      if (is_entropy(fn)) continue;
      double fdy = (eval(fn, x, y + h) - eval(fn, x, y - h)) / (2 * h);
      double dy = derivative_y(fn, x, y);
      CHECK(std::abs(fdy - dy) <= 1e-6 * std::max(1.0, std::abs(dy)) + 2e-7);
    }
  }
}

TEST_CASE("enclosures contain sampled values") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(0, 1);
  for (const auto& fn : all_fns()) {
    for (int i = 0; i < 300; ++i) {
      double a = u(rng), b = u(rng), c = u(rng), d = u(rng);
      double w = 0.2 * u(rng);
      Iv X(std::min(a, 1 - w), std::min(a, 1 - w) + w), Y(std::min(b, 1 - w), std::min(b, 1 - w) + w);
      Iv e = enclose(fn, X, Y);
      double px = X.lo + c * X.width(), py = Y.lo + d * Y.width();
      double v = eval(fn, px, py);
      INFO(fn_name(fn.id));
      CHECK(e.lo <= v);
      CHECK(v <= e.hi);
    }
  }
}

TEST_CASE("monotonicity") {
  // g increasing in x for every y; f decreasing in x on [1/2, 1]
  for (int j = 1; j < 40; ++j) {
    double y = j / 40.0;
    for (int i = 0; i < 80; ++i) {
      double x1 = i / 80.0, x2 = (i + 1) / 80.0;
      CHECK(eval({Fn::g}, x2, y) >= eval({Fn::g}, x1, y));
      if (x1 >= 0.5) CHECK(eval({Fn::f}, x2, y) <= eval({Fn::f}, x1, y));
    }
  }
  // same pattern for G*_mu and f*_nu when nu >= (1-gamma)/(1+gamma)
  const double gamma = 0.4, mu = gamma, nu = (1 - gamma) / (1 + gamma), theta = gamma / (1 - gamma);
  BoundFunction G{Fn::Gstar_mu, mu, nu, theta}, F{Fn::fstar_nu, mu, nu, theta};
  for (int j = 1; j < 20; ++j)
    for (int i = 0; i < 40; ++i) {
      double y = j / 20.0, x1 = i / 40.0, x2 = (i + 1) / 40.0;
      CHECK(eval(G, x2, y) >= eval(G, x1, y));
      if (x1 >= 0.5) CHECK(eval(F, x2, y) <= eval(F, x1, y) + 1e-15);
    }
}

TEST_CASE("region certificate bounds random samples") {
  auto r = maximize_min_on_region({Fn::f}, {Fn::g}, {0, 1, 0, 0.75}, 1e-5, 4);
  CHECK(r.status == "certified");
  CHECK(r.certified_max < 2 - std::ldexp(1.0, -11));
  CHECK(r.best_value <= r.certified_max);
  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> ux(0, 1), uy(0, 0.75);
  double worst = -1e9;
  for (int i = 0; i < 100000; ++i) {
    double x = ux(rng), y = uy(rng);
    worst = std::max(worst, std::min(eval({Fn::f}, x, y), eval({Fn::g}, x, y)));
  }
  CHECK(worst <= r.certified_max);
  CHECK(worst >= r.best_value - 1e-3);
  CHECK(r.certified_max - r.best_value <= 1e-5 + 1e-9);
}

TEST_CASE("simplified gap forms match composed values") {
  // the appendix claims are certified on simplified forms; the composed ones must agree
  auto B = verify_appendix_claims('B', 1e-3, 2);
  auto C = verify_appendix_claims('C', 1e-3, 2);
  const auto& bg = B.row("AppB:G");
  const auto& bf = B.row("AppB:fstar");
  const auto& cg = C.row("AppC:G");
  const auto& cf = C.row("AppC:fstar");
  CHECK(gap_B_G(bg.gamma, bg.y) == doctest::Approx(bg.search.best_value).epsilon(1e-9));
  CHECK(gap_B_fstar(bf.gamma, bf.x) == doctest::Approx(bf.search.best_value).epsilon(1e-9));
  CHECK(gap_C_G(cg.gamma, cg.y) == doctest::Approx(cg.search.best_value).epsilon(1e-9));
  CHECK(gap_C_fstar(cf.gamma, cf.x) == doctest::Approx(cf.search.best_value).epsilon(1e-9));
  CHECK(B.pass());
  CHECK(C.pass());
}

TEST_CASE("appendix A rows") {
  auto A = verify_appendix_claims('A', 1e-3, 2);
  CHECK(A.pass());
  CHECK(A.row("AppA:G").value == doctest::Approx(1.9993).epsilon(5e-4));
  CHECK(std::abs(A.row("AppA:G").y - 0.434) < 0.01);
  CHECK(std::abs(A.row("AppA:f2").x - 0.817) < 0.01);
  // region and line-plus-monotonicity routes agree
  CHECK(A.row("final:calc").pass == A.row("final:calc:line").pass);
  auto csv = appendix_csv(A);
  CHECK(csv.rfind("claim_id,region,certified_max_or_gap,paper_constant,", 0) == 0);
}

TEST_CASE("binomial examples") {
  // C(10,4) = 210 <= 0.5^4 C(20,4) = 302.8125, and >= 302.8125 e^{-1.6}
  CHECK(210 <= 302.8125);
  CHECK(210 >= 302.8125 * std::exp(-1.6));
  // C(12,5) = 792 <= e^{-1/15} (2/3)^3 C(15,5)
  CHECK(792 <= std::exp(-1.0 / 15) * 8.0 / 27 * 3003);

  BinomialSweep small;
  small.m_max = 24;
  small.k_max = small.ell_max = small.t_max = 20;
  small.entropy_a_max = 40;
  small.ratio_exp_hi = 8;
  auto rep = verify_binomial_facts(small, 2);
  CHECK(rep.pass());
  for (const auto& f : rep.facts) {
    INFO(f.id);
    CHECK(f.checked > 0);
    CHECK(f.violations == 0);
  }
  CHECK(binomial_csv(rep) == binomial_csv(verify_binomial_facts(small, 1)));
}

TEST_CASE("number formatting") {
  CHECK(fmt(-0.0) == "0");
  CHECK(fmt(1.5) == "1.5");
}
