#pragma once

// Case dispatch and deterministic sweeps.  A sweep enumerates its cases in
// lexicographic order of the case tuple and reports them in that order no
// matter how many worker threads run the analyses, so identical inputs give
// identical reports.

#include <optional>
#include <string>
#include <vector>

#include "qsocle/quasisocle.hpp"
#include "qsocle/report.hpp"

namespace qsocle {

enum class Model { Regular, Semigroup, PredictorOnly };

std::string to_string(Model model);
/// Accepts "regular", "semigroup", "predictor-only"; throws on anything else.
Model model_from_string(const std::string& name);

/// One case to run, in any of the three models.
struct CaseDescriptor {
  Model model = Model::Regular;

  // regular / predictor-only
  std::vector<int> a;
  std::optional<int> gm_a_invariant; // required for predictor-only

  // semigroup
  int sg_a = 0;
  int sg_b = 0;
  int sg_n = 0;

  // shared
  int q = 1;

  std::string tuple() const;
};

/// Cartesian ranges for a sweep.  Empty ranges are fine and produce an empty
/// report.
struct SweepSpec {
  Model model = Model::Regular;

  // regular / predictor-only: dimensions and the per-coordinate exponent range
  std::vector<int> dims = {2, 3};
  int a_min = 1;
  int a_max = 4;

  // semigroup: coprime pairs a < b <= sg_b_max and the n range
  int sg_a_min = 2;
  int sg_b_max = 13;
  int n_min = 1;
  int n_max = 4;

  // shared: q runs from q_min to q_max, default up to rho of each case
  int q_min = 1;
  std::optional<int> q_max;

  std::optional<int> gm_a_invariant; // predictor-only

  // caps
  std::size_t box_cap = default_box_cap();
  std::optional<int> reduction_n_max;
  /// Optional wall-clock budget; cases not started before it expires are
  /// reported as skipped.  Using it trades away run-to-run determinism.
  std::optional<double> time_budget_s;

  void validate() const;
};

/// A finished run: the cases in input order plus summary counts.
struct RunReport {
  std::string tool;
  std::optional<std::string> generated_at;
  std::vector<CaseReport> cases;

  int agreed = 0;
  int disagreed = 0;
  int improper = 0;
  int skipped = 0;

  int total() const { return static_cast<int>(cases.size()); }
  /// Zero disagreements is the pass condition; skipped cases do not fail a
  /// run unless the caller opts into strict mode.
  bool pass() const { return disagreed == 0; }
};

/// Runs one case, catching per-case errors (caps, bounds) into a skipped
/// report instead of propagating them.
CaseReport run_case(const CaseDescriptor& descriptor, const AnalyzeOptions& options = {});

/// The sweep's case list in its canonical order.
std::vector<CaseDescriptor> enumerate_cases(const SweepSpec& spec);

/// Enumerates and runs a sweep on `workers` threads (at least one).
RunReport run_sweep(const SweepSpec& spec, int workers = 1);

/// Wraps one finished case in a RunReport with correct counts.
RunReport single_case_report(CaseReport report);

/// Recomputes the summary counters from the case statuses.
void refresh_counts(RunReport& report);

} // namespace qsocle
