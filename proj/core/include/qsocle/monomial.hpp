#pragma once

// Exact arithmetic on monomial ideals of a polynomial ring k[x_1..x_d],
// represented by their unique minimal generating sets (antichains of
// exponent vectors).  All operations are deterministic: generators are kept
// in a canonical order (total degree, then lexicographic).

#include <compare>
#include <string>
#include <vector>

namespace qsocle {

/// A monomial x^alpha, stored as its vector of non-negative exponents.
class ExponentVector {
public:
  /// Builds a vector from explicit coordinates; every entry must be >= 0.
  explicit ExponentVector(std::vector<int> coords);

  /// The zero vector (the monomial 1) in `dim` variables.
  static ExponentVector zero(int dim);

  /// The i-th unit vector (the variable x_{i+1}), 0-based.
  static ExponentVector unit(int dim, int i);

  int dim() const { return static_cast<int>(coords_.size()); }
  int operator[](int i) const { return coords_[static_cast<std::size_t>(i)]; }
  const std::vector<int>& coords() const { return coords_; }

  int total_degree() const;

  /// Divisibility of monomials: true iff *this <= other componentwise.
  bool divides(const ExponentVector& other) const;

  /// Componentwise sum (product of the monomials).
  friend ExponentVector operator+(const ExponentVector& a, const ExponentVector& b);

  /// Componentwise max(a - b, 0); this is the generator map of the colon by a
  /// single monomial.
  ExponentVector saturating_sub(const ExponentVector& b) const;

  /// Componentwise max (the lcm of the two monomials).
  static ExponentVector join(const ExponentVector& a, const ExponentVector& b);

  bool operator==(const ExponentVector&) const = default;

  /// Canonical order: total degree first, then lexicographic.
  std::strong_ordering operator<=>(const ExponentVector& other) const;

  /// Renders e.g. (2,0,1) as "x1^2*x3"; the zero vector renders as "1".
  std::string to_monomial_string() const;

  /// Renders as a bare tuple, e.g. "(2,0,1)".
  std::string to_tuple_string() const;

private:
  std::vector<int> coords_;
};

/// A monomial ideal held by its minimal generators.  The zero ideal has no
/// generators; the unit ideal is generated by the zero vector.  Construction
/// minimalizes, so equal ideals compare equal.
class MonomialIdeal {
public:
  /// Minimalizes `gens` (drops duplicates and multiples) and sorts them
  /// canonically.  An empty generator list yields the zero ideal.
  MonomialIdeal(int dim, std::vector<ExponentVector> gens);

  static MonomialIdeal zero(int dim);
  static MonomialIdeal unit(int dim);

  /// The ideal (x_1^{a_1}, ..., x_d^{a_d}); every a_i must be >= 1.
  static MonomialIdeal diagonal(const std::vector<int>& a);

  /// The power m^q of the maximal ideal m = (x_1..x_d): all monomials of
  /// total degree exactly q.  q = 0 gives the unit ideal.
  static MonomialIdeal maximal_power(int dim, int q);

  int dim() const { return dim_; }
  const std::vector<ExponentVector>& generators() const { return gens_; }
  bool is_zero() const { return gens_.empty(); }
  bool is_unit() const;

  /// Membership of a monomial: some generator divides alpha.
  bool contains(const ExponentVector& alpha) const;

  /// Ideal containment: other is a subset of *this.
  bool contains(const MonomialIdeal& other) const;

  bool operator==(const MonomialIdeal&) const = default;

  std::string to_string() const;

private:
  int dim_;
  std::vector<ExponentVector> gens_;
};

/// J + K.
MonomialIdeal sum(const MonomialIdeal& J, const MonomialIdeal& K);

/// J * K, minimalized.  product(0, K) = 0.
MonomialIdeal product(const MonomialIdeal& J, const MonomialIdeal& K);

/// J^n; power(J, 0) is the unit ideal.
MonomialIdeal power(const MonomialIdeal& J, int n);

/// J intersect K, via pairwise lcms.  intersect(0, K) = 0.
MonomialIdeal intersect(const MonomialIdeal& J, const MonomialIdeal& K);

/// The colon ideal J : K = { f | f*K in J }, as the intersection over the
/// generators k of K of the single-monomial colons J : x^k.  K must not be
/// the zero ideal.
MonomialIdeal colon(const MonomialIdeal& J, const MonomialIdeal& K);

} // namespace qsocle
