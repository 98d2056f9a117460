#pragma once

// The verification suite behind `symplab check`.

#include <string>
#include <vector>

#include "scenario.hpp"

namespace symplab::lab {

enum class CheckStatus { Pass, Fail, Warn };
const char* to_string(CheckStatus s);

struct CheckResult {
  /// "<family>.<index>", e.g. "commutators.2".
  std::string name;
  CheckStatus status = CheckStatus::Pass;
  double deviation = 0.0;
  double tolerance = 0.0;
  std::string detail;
};

struct CheckSummary {
  std::vector<CheckResult> results;
  std::vector<std::string> warnings;
  bool passed() const;
};

/// Tolerances used by run_checks.
struct CheckTolerances {
  static constexpr double kSymplectic = 1e-12;
  static constexpr double kConservation = 1e-10;
  static constexpr double kCommutator = 1e-8;
  static constexpr double kUnitary = 1e-5;
  static constexpr int kUnitaryGridPoints = 32;
  static constexpr int kFlowSamples = 20;
};

/// Runs every enabled check. Commutator and uncertainty failures on a
/// non-localized state are downgraded to warnings.
CheckSummary run_checks(const Scenario& scenario);

}  // namespace symplab::lab
