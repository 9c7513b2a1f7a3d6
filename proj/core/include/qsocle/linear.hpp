#pragma once

// Exact feasibility of small systems of linear inequalities over the
// rationals, by Fourier-Motzkin elimination.  Coefficients are taken as
// 64-bit integers; the elimination itself runs on arbitrary-precision
// integers internally, so no overflow can occur during pivoting.

#include <cstdint>
#include <vector>

namespace qsocle {

/// One inequality sum_i coef[i] * x_i <= bound.
struct LinearConstraint {
  std::vector<std::int64_t> coef;
  std::int64_t bound = 0;
};

/// A conjunction of inequalities over num_vars rational unknowns.
struct LinearSystem {
  int num_vars = 0;
  std::vector<LinearConstraint> rows;

  void add_row(std::vector<std::int64_t> coef, std::int64_t bound);
};

/// True iff some rational point satisfies every row.
bool rational_feasible(const LinearSystem& system);

} // namespace qsocle
