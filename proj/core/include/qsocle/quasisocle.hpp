#pragma once

// The quasi-socle ideal I = Q : m^q of a diagonal parameter ideal
// Q = (x_1^{a_1},...,x_d^{a_d}) in a power-series ring, together with the
// closed-form predictions for its behaviour and the independent oracles that
// verify them:
//
//   rho = gm_a_invariant + sum(a_i)   (gm_a_invariant = -d for the regular
//                                      model, so rho = sum(a_i) - d)
//   ell = rho + 1 - q
//   I is integral over Q        iff  ell >= a_i for every i,
//   and in that case I = Q + m^ell, the reduction number of I with respect
//   to Q is ceil(q / ell), the associated graded ring of I is Gorenstein iff
//   ell divides q, and the Rees algebra is Gorenstein iff q = (d - 2) * ell.

#include <optional>
#include <vector>

#include "qsocle/box.hpp"
#include "qsocle/monomial.hpp"
#include "qsocle/report.hpp"

namespace qsocle {

/// One case: exponents a, socle power q, and the a-invariant of the
/// associated graded ring of the maximal ideal (-d in the regular model,
/// where all oracles apply; any other value restricts the case to the
/// closed-form predictor).
struct CaseSpec {
  std::vector<int> a;
  int q = 1;
  int gm_a_invariant = 0;

  static CaseSpec regular(std::vector<int> a, int q);

  int dim() const { return static_cast<int>(a.size()); }
  bool is_regular_model() const { return gm_a_invariant == -dim(); }
  void validate() const;
};

/// Extra knobs threaded through analyze(); defaults reproduce the documented
/// behaviour.
struct AnalyzeOptions {
  std::size_t box_cap = default_box_cap();
  /// Cap for the reduction-number search; unset means ceil(q/ell) + 3 in the
  /// integral case and 10 otherwise.
  std::optional<int> reduction_n_max;
};

/// The closed-form predictions; pure arithmetic, never throws past
/// validation.
Prediction predict(const CaseSpec& spec);

/// I = Q : m^q, computed as q successive colons by m.  Regular model only.
MonomialIdeal quasi_socle_ideal(const CaseSpec& spec);

/// Smallest n <= n_max with I^{n+1} == Q * I^n, or empty if no such n
/// exists within the cap (which is the expected outcome whenever Q is not a
/// reduction of I).
std::optional<int> reduction_number_oracle(const MonomialIdeal& Q, const MonomialIdeal& I,
                                           int n_max);

/// Whether m^q * I == m^q * Q.  The prediction layer expects this to hold
/// exactly when I is integral over Q, and the harness checks the two against
/// each other.
bool mq_product_check(const CaseSpec& spec);

/// Valabrega-Valla equalities Q intersect I^n == Q * I^{n-1} for
/// 1 <= n <= n_max (default: reduction number + 2).  Integral cases only.
bool valabrega_valla_check(const CaseSpec& spec, std::optional<int> n_max = std::nullopt);

/// Fiber-cone variant: Q intersect (m * I^n) == m * Q * I^{n-1} over the
/// same range.  Integral cases only.
bool fiber_cone_check(const CaseSpec& spec, std::optional<int> n_max = std::nullopt);

/// Graded containments Q intersect m^{n*ell+m} inside m^m * Q * I^{n-1} for
/// 1 <= n <= n_max (default: reduction number + 1) and 0 <= m <= m_max
/// (default 2).  Integral cases only.
bool intersection_containment_check(const CaseSpec& spec,
                                    std::optional<int> n_max = std::nullopt,
                                    std::optional<int> m_max = std::nullopt);

/// Gorenstein verdict for the associated graded ring of I, by the duality
/// check on the image of I in the box quotient.  Integral cases only.
bool gorenstein_oracle(const CaseSpec& spec, std::size_t box_cap = default_box_cap());

/// Runs the predictor plus every applicable oracle and cross-checks them.
/// Regular model only; errors from sub-operations propagate.
CaseReport analyze(const CaseSpec& spec, const AnalyzeOptions& options = {});

/// Prediction-only report for cases with a non-regular tangent cone, where
/// the monomial oracles do not apply.
CaseReport analyze_predictor_only(const CaseSpec& spec);

} // namespace qsocle
