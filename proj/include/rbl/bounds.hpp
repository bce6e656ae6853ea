#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "rbl/rational.hpp"

namespace rbl::bounds {

enum class Fn { h2, hstar, f1, f2, f, g, G_mu, fstar_nu, Gstar_mu };

std::string fn_name(Fn id);
Fn parse_fn(const std::string& name);

// h2/hstar take their argument in x and ignore y.
struct BoundFunction {
  Fn id = Fn::f;
  double mu = 0.4;
  double nu = 0.5;
  double theta = 1.0;
};

double eval(const BoundFunction& fn, double x, double y);
double derivative_x(const BoundFunction& fn, double x, double y);
double derivative_y(const BoundFunction& fn, double x, double y);

// Closed interval of doubles.
struct Iv {
  double lo = 0, hi = 0;
  Iv() = default;
  Iv(double v) : lo(v), hi(v) {}
  Iv(double l, double h) : lo(l), hi(h) {}
  double width() const { return hi - lo; }
  double mid() const { return lo + (hi - lo) / 2; }
};

// Enclosure of fn over the box (natural extension through monotone pieces,
// tightened by the mean-value form where the gradient is bounded).
Iv enclose(const BoundFunction& fn, Iv x, Iv y);

// Enclosure of the x-partial over the box.
Iv enclose_dx(const BoundFunction& fn, Iv x, Iv y);

struct Box {
  double x_lo = 0, x_hi = 0, y_lo = 0, y_hi = 0;
};

struct Objective {
  // value at a point and an upper bound over a box (both coordinates generic)
  double (*value)(const void* ctx, double x, double y) = nullptr;
  double (*upper)(const void* ctx, const Box& b) = nullptr;
  const void* ctx = nullptr;
};

struct MaximizationResult {
  std::string status;  // "certified" or "inconclusive"
  double certified_max = 0;
  double best_value = 0;
  double best_x = 0, best_y = 0;
  double resolution = 0;  // widest surviving cell side at the last level
  int depth = 0;
  double slope_bound = 0;  // largest finite |gradient| bound used
  std::size_t cells = 0;   // cells evaluated in total
};

struct SearchOptions {
  double refine_tol = 1e-5;
  int max_depth = 30;
  int grid = 32;
  std::size_t max_cells = 1u << 22;
  unsigned jobs = 1;
};

MaximizationResult maximize(const Objective& obj, const Box& box, const SearchOptions& opt);

// tol: refinement stops once every surviving cell bound is within tol of the best point value.
MaximizationResult maximize_min_on_region(const BoundFunction& a, const BoundFunction& b,
                                          const Box& region, double tol, unsigned jobs = 1);

struct ClaimRow {
  std::string claim_id;
  std::string region;
  double value = 0;
  double paper_constant = 0;
  double x = 0, y = 0, gamma = 0;
  bool has_x = false, has_y = false, has_gamma = false;
  bool pass = false;
  MaximizationResult search;
};

struct AppendixReport {
  char appendix = 'A';
  std::vector<ClaimRow> rows;
  bool pass() const;
  const ClaimRow& row(const std::string& id) const;
};

AppendixReport verify_appendix_claims(char appendix, double tol, unsigned jobs = 1);

std::string appendix_csv(const AppendixReport& rep);

// Point values of the gap expressions from the claims, built from eval().
double gap_B_G(double gamma, double y);
double gap_B_fstar(double gamma, double x);
double gap_C_G(double gamma, double y);
double gap_C_fstar(double gamma, double x);

struct BinomialSweep {
  int m_max = 64;
  std::vector<Rational> sigmas{Rational(7, 15), Rational(1, 2), Rational(3, 4)};
  int k_max = 60, ell_max = 60, t_max = 60;
  int entropy_a_max = 128;
  int ratio_exp_lo = 4, ratio_exp_hi = 12;
  std::vector<Rational> thetas{Rational(1, 4), Rational(1, 2), Rational(2, 3), Rational(9, 10),
                               Rational(1)};
};

struct FactResult {
  std::string id;
  std::size_t checked = 0, skipped = 0, violations = 0;
  double worst_margin = 0;  // smallest slack seen (natural log scale where an exp is involved)
  std::string first_violation;
};

struct BinomialReport {
  std::vector<FactResult> facts;
  bool pass() const;
  const FactResult& fact(const std::string& id) const;
};

BinomialReport verify_binomial_facts(const BinomialSweep& sweep, unsigned jobs = 1);

std::string binomial_csv(const BinomialReport& rep);

// Deterministic number formatting shared by the CSV writers.
std::string fmt(double v);

}  // namespace rbl::bounds
