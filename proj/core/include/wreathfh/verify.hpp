#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "wreathfh/class_algebra.hpp"

namespace wfh {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;  // witness on failure
  double ms = 0;
};

struct SuiteReport {
  std::string suite;
  std::vector<CheckResult> checks;

  bool passed() const;
  nlohmann::json to_json() const;
};

struct VerifyOptions {
  std::vector<std::string> groups;  // empty: the suite's default groups
  // Bound on ‖λ‖+‖μ‖, except for the quotient suite where it bounds each
  // factor. -1 picks the suite default.
  int max_degree = -1;
  int extra_points = 2;             // polynomiality
  int n = 4;                        // wreath-axioms
  std::string pair_a = "bd:24";     // rescale
  std::string pair_b = "bi";
  OracleOptions oracle;
};

/// Suite names: tables, single-cycle, polynomiality, quotient, rescale,
/// wreath-axioms. Throws Error{ParseError} for anything else. A check that
/// runs out of budget is reported as failed and the suite continues.
SuiteReport run_suite(const std::string& name, const VerifyOptions& opt);
std::vector<std::string> suite_names();

SuiteReport verify_tables();
SuiteReport verify_single_cycle(const VerifyOptions& opt);
SuiteReport verify_polynomiality_suite(const VerifyOptions& opt);
SuiteReport verify_quotient(const VerifyOptions& opt);
SuiteReport verify_rescale(const VerifyOptions& opt);
SuiteReport verify_wreath_axioms(const VerifyOptions& opt);

}  // namespace wfh
