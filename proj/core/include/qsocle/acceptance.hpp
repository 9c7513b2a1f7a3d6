#pragma once

// The release gate: nine self-contained checks covering the worked examples,
// the cross-model sweeps, the closure criteria and the duality invariant.
// Each check carries its own wall-clock budget and fails when it exceeds it.

#include <string>
#include <vector>

namespace qsocle {

struct CriterionResult {
  int index = 0;
  std::string name;
  bool passed = false;
  double seconds = 0.0;
  double budget_seconds = 0.0;
  std::string detail;
};

/// Runs all nine checks in order.  `workers` sizes the sweep thread pools;
/// values below one select the hardware concurrency.
std::vector<CriterionResult> run_acceptance(int workers = 0);

/// "[PASS] 4 regular-sweep-agreement (12.31 s / 300 s) cases=336 ..." style.
std::string format_criterion_line(const CriterionResult& result);

} // namespace qsocle
