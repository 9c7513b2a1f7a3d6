#pragma once

// Report structures shared by the polynomial and numerical-semigroup case
// analyses and by the run harness.

#include <optional>
#include <string>
#include <vector>

namespace qsocle {

/// Closed-form invariants of a case, derived without computing any ideal.
/// rho is the top nonzero degree of the artinian quotient A/Q and ell the
/// dual shift rho + 1 - q.  The optional verdicts are present exactly when
/// the case is integral (ell >= every a_i), which is when the closed-form
/// theory applies.
struct Prediction {
  int rho = 0;
  int ell = 0;
  /// ell <= 0, i.e. q > rho: the colon is the whole ring and every ring
  /// verdict is suppressed.
  bool improper = false;
  bool integral = false;
  std::optional<int> reduction_number;       ///< ceil(q / ell)
  std::optional<int> g_a_invariant;          ///< reduction_number - d
  std::optional<bool> rees_cm;               ///< reduction_number < d
  std::optional<bool> g_gorenstein;          ///< ell divides q
  std::optional<bool> rees_gorenstein;       ///< q == (d - 2) * ell
};

enum class CaseStatus {
  Agree,    ///< every oracle matched its prediction
  Disagree, ///< at least one comparison failed
  Improper, ///< q > rho; only the degenerate conventions were checked
  Skipped,  ///< a cap or bound stopped the case; see CaseReport::error
};

/// One predictor-versus-oracle comparison, pre-rendered for output.
struct CheckRow {
  std::string name;
  std::string predicted;
  std::string oracle;
  bool agree = true;
};

/// Everything the harness knows about one analyzed case.
struct CaseReport {
  std::string model;      ///< "regular", "semigroup" or "predictor-only"
  std::string case_tuple; ///< e.g. "d=3 a=(2,2,2) q=3"
  Prediction prediction;

  bool oracles_run = false;
  std::vector<std::string> ideal_generators; ///< rendered generators of Q : m^q

  std::optional<bool> integral_oracle;       ///< closure membership of all generators
  bool r_oracle_ran = false;
  std::optional<int> r_oracle;               ///< empty after r_oracle_ran: no stabilization
  std::optional<bool> g_gorenstein_oracle;   ///< duality verdict in the quotient

  std::vector<CheckRow> checks;
  bool agreement = true;
  CaseStatus status = CaseStatus::Agree;
  std::string error;

  void add_check(const std::string& name, const std::string& predicted,
                 const std::string& oracle);
};

/// Rendering helpers shared by reports and their serializers.
std::string render(const std::optional<bool>& v);
std::string render(const std::optional<int>& v);
std::string render(bool v);

} // namespace qsocle
