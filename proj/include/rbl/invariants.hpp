#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rbl/book_algorithm.hpp"

namespace rbl {

struct CheckResult {
  std::string status = "pass";  // pass | fail | diagnostic
  std::optional<Rational> worst_slack;
  std::optional<std::size_t> first_violation;  // step index; 0 = initial state, m+1 = summary
  std::string detail;
};

struct CheckReport {
  std::vector<std::pair<std::string, CheckResult>> checks;
  std::vector<std::pair<std::string, Rational>> diagnostics;

  const CheckResult& check(const std::string& id) const;
  std::optional<Rational> diagnostic(const std::string& id) const;
  bool exact_checks_pass() const;
  std::vector<std::string> failed() const;
};

// Check ids in report order.
const std::vector<std::string>& check_ids();

CheckReport check_trace(const Colouring& c, const Trace& tr);

struct WeightMargin {
  std::size_t index;
  Vertex central;
  Rational omega;   // omega(x_i)
  Rational margin;  // omega(x_i) + |X_{i-1}| / k^5
  bool is_max;      // x_i maximizes omega over eligible vertices, lowest index on ties
};
std::vector<WeightMargin> check_weight_bound(const Colouring& c, const Trace& tr);

struct BetaFloor {
  std::size_t index;
  Rational beta;
  Rational margin;  // beta - 1/k^2
  bool beta_le_mu;
};
std::vector<BetaFloor> check_beta_floor(const Trace& tr);

std::string report_to_json(const CheckReport& r);

}  // namespace rbl
