#pragma once

// Dense model of the artinian quotient A/(x_1^{a_1},...,x_d^{a_d}).  Its
// monomial k-basis is the box of exponent vectors alpha with
// 0 <= alpha_i < a_i; an ideal of the quotient is an upward-closed subset of
// the box.  Everything here is exact set arithmetic on bitsets.

#include <cstddef>
#include <vector>

#include "qsocle/monomial.hpp"

namespace qsocle {

/// Reads the box point cap: QSOCLE_BOX_CAP if set, else 1e6 points.
std::size_t default_box_cap();

/// The exponent box of (x_1^{a_1},...,x_d^{a_d}): all alpha with
/// 0 <= alpha_i < a_i, indexed in mixed radix with the last coordinate
/// fastest.  Construction rejects boxes with more points than `cap`.
class BoxSpec {
public:
  explicit BoxSpec(std::vector<int> sides, std::size_t cap = default_box_cap());

  int dim() const { return static_cast<int>(sides_.size()); }
  const std::vector<int>& sides() const { return sides_; }
  std::size_t point_count() const { return points_; }

  /// The largest total degree of a box point, sum(a_i - 1).  This is the
  /// index of nilpotency of the image of the maximal ideal, the degree of
  /// the one-dimensional socle of the quotient.
  int top_degree() const;

  std::size_t index_of(const ExponentVector& p) const;
  ExponentVector point_at(std::size_t index) const;
  bool in_box(const ExponentVector& p) const;

  bool operator==(const BoxSpec&) const = default;

private:
  std::vector<int> sides_;
  std::size_t points_ = 1;
};

/// An upward-closed subset of a box: the set of monomials of an ideal of the
/// artinian quotient.  The empty set is the zero ideal; the full box is the
/// unit ideal.
class BoxIdeal {
public:
  static BoxIdeal empty(BoxSpec spec);
  static BoxIdeal full(BoxSpec spec);

  /// The image of a monomial ideal J: box points that J contains.
  static BoxIdeal project(const MonomialIdeal& J, BoxSpec spec);

  /// The image of m^n: box points of total degree >= n.  For n <= 0 this is
  /// the full box.
  static BoxIdeal max_ideal_power(BoxSpec spec, int n);

  /// The smallest upward-closed set containing the given seed points.
  static BoxIdeal upward_closure(BoxSpec spec, const std::vector<ExponentVector>& seeds);

  const BoxSpec& spec() const { return spec_; }
  bool is_empty() const;
  bool is_full() const;
  std::size_t size() const;
  bool contains(const ExponentVector& p) const;

  /// The minimal points of the set; they generate it as an ideal.
  std::vector<ExponentVector> minimal_points() const;

  bool operator==(const BoxIdeal&) const = default;

private:
  explicit BoxIdeal(BoxSpec spec) : spec_(std::move(spec)), member_(spec_.point_count(), 0) {}

  BoxSpec spec_;
  std::vector<char> member_;

  friend BoxIdeal annihilator(const BoxIdeal& E);
  friend BoxIdeal box_product(const BoxIdeal& E, const BoxIdeal& F);
};

/// (0) : E inside the quotient: points alpha such that alpha + beta falls
/// outside the box for every point beta of E.  annihilator(empty) is the
/// full box; annihilator(full) is empty.
BoxIdeal annihilator(const BoxIdeal& E);

/// The image of the product ideal: pointwise sums that stay inside the box.
BoxIdeal box_product(const BoxIdeal& E, const BoxIdeal& F);

/// E^n; n = 0 gives the full box.
BoxIdeal box_power(const BoxIdeal& E, int n);

/// max { n >= 0 : E^n is nonempty }.  Undefined (throws) for the unit ideal,
/// whose powers never vanish.
int nilpotency_index(const BoxIdeal& E);

/// Checks the Gorenstein duality of the associated graded ring of E by
/// Ooishi's criterion: with r the nilpotency index of E, requires
/// annihilator(E^i) == E^{r+1-i} for all 0 <= i <= r+1.  E must be a proper
/// nonzero box ideal.
bool gorenstein_duality_check(const BoxIdeal& E);

} // namespace qsocle
