#pragma once

#include <functional>
#include <string>
#include <vector>

namespace cogrowth {

/// Tolerances of the acceptance suite.
namespace acceptance {
inline constexpr double kMuTolerance = 5e-9;
inline constexpr double kLambdaTolerance = 1e-8;
inline constexpr double kRatioRelativeTolerance = 0.02;
inline constexpr int kRatioOrder = 24;
inline constexpr int kOracleCheckN = 10;
inline constexpr int kPropertyN = 7;
inline constexpr int kReducedCheckN = 10;
inline constexpr int kRoundTripOrder = 20;
inline constexpr int kVerifyOrder = 16;
inline constexpr int kFirstCriterion = 1;
inline constexpr int kLastCriterion = 7;
} // namespace acceptance

struct CriterionResult {
  int id = 0;
  std::string title;
  bool passed = false;
  /// One line per individual check, failures included.
  std::vector<std::string> details;
  double seconds = 0;
  double budget_seconds = 0;
};

/// Runs one acceptance criterion (1..7). Exceptions from the library are
/// reported as a failed check, not propagated.
CriterionResult run_criterion(int id);

/// Runs criteria 1..7 in order, invoking on_done after each.
std::vector<CriterionResult>
run_acceptance(const std::function<void(const CriterionResult &)> &on_done = {});

/// "criterion <id> PASS|FAIL <title> (<seconds> s)"
std::string summary_line(const CriterionResult &r);

/// JSON report: {"criteria": [{id, title, passed, seconds, budget_seconds,
/// details}], "passed": bool}
std::string report_json(const std::vector<CriterionResult> &results);

} // namespace cogrowth
