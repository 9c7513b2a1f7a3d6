#pragma once

// One-dimensional model: the numerical-semigroup ring A = k[[t^a, t^b]] with
// 1 < a < b coprime, parameter ideal Q = (t^{a*n}) and quasi-socle ideal
// I = Q : m^q.  Monomial ideals of A are ideals of the semigroup
// S = <a, b>; they are handled as bitmaps truncated at a bound certified to
// exceed every degree an operation chain can produce.  Here
//
//   rho = a + n - 2,   ell = (a + n) - (q + 1),
//
// I is integral over Q iff q < a, and the reduction number / Gorenstein
// predictions take the same closed form as in the polynomial model.

#include <memory>
#include <optional>
#include <vector>

#include "qsocle/quasisocle.hpp"
#include "qsocle/report.hpp"

namespace qsocle {

/// All elements of the semigroup <a, b> up to and including `bound`.
std::vector<int> semigroup_members(int a, int b, int bound);

/// One semigroup case.
struct SemigroupSpec {
  int a = 2;
  int b = 3;
  int n = 1;
  int q = 1;

  void validate() const; ///< 1 < a < b, gcd(a,b) = 1, n >= 1, q >= 1
};

/// Membership and m-adic order tables for S = <a, b>, truncated at `bound`.
class SemigroupRing {
public:
  SemigroupRing(int a, int b, int bound);

  int a() const { return a_; }
  int b() const { return b_; }
  int bound() const { return bound_; }
  /// The largest integer outside S (the Frobenius number a*b - a - b).
  int frobenius() const { return a_ * b_ - a_ - b_; }

  bool in_semigroup(int s) const;
  /// max { i + j : s = i*a + j*b }, or -1 when s is not in S.
  int order(int s) const;

  bool operator==(const SemigroupRing& o) const {
    return a_ == o.a_ && b_ == o.b_ && bound_ == o.bound_;
  }

private:
  int a_, b_, bound_;
  std::vector<int> order_; // order_[s] = -1 iff s not in S
};

/// An ideal of S (a subset closed under adding S), truncated at the ring's
/// bound.  The bitmap is exact below the bound; operations certify that the
/// bound covers what they need and throw BoundViolation otherwise.
class SemigroupIdeal {
public:
  static SemigroupIdeal zero(std::shared_ptr<const SemigroupRing> ring);
  /// S itself (the unit ideal).
  static SemigroupIdeal unit(std::shared_ptr<const SemigroupRing> ring);
  static SemigroupIdeal from_generators(std::shared_ptr<const SemigroupRing> ring,
                                        const std::vector<int>& gens);
  /// { s in S : order(s) >= k }, the image of m^k; k <= 0 gives all of S.
  static SemigroupIdeal order_at_least(std::shared_ptr<const SemigroupRing> ring, int k);
  /// { s in S : s >= c }; this is the integral closure of (t^c).
  static SemigroupIdeal degree_at_least(std::shared_ptr<const SemigroupRing> ring, int c);

  const SemigroupRing& ring() const { return *ring_; }
  const std::shared_ptr<const SemigroupRing>& ring_ptr() const { return ring_; }

  bool is_zero() const;
  bool is_unit() const { return contains(0); }
  bool contains(int s) const;
  bool subset_of(const SemigroupIdeal& other) const;

  std::optional<int> min_element() const;
  /// The minimal generators; requires the bound to certify completeness.
  std::vector<int> generators() const;
  /// All members up to the bound.
  std::vector<int> members() const;

  bool operator==(const SemigroupIdeal& o) const;

private:
  explicit SemigroupIdeal(std::shared_ptr<const SemigroupRing> ring);

  std::shared_ptr<const SemigroupRing> ring_;
  std::vector<char> member_;

  friend SemigroupIdeal sum(const SemigroupIdeal&, const SemigroupIdeal&);
  friend SemigroupIdeal intersect(const SemigroupIdeal&, const SemigroupIdeal&);
  friend SemigroupIdeal product(const SemigroupIdeal&, const SemigroupIdeal&);
  friend SemigroupIdeal colon(const SemigroupIdeal&, const SemigroupIdeal&);
};

SemigroupIdeal sum(const SemigroupIdeal& E, const SemigroupIdeal& F);
SemigroupIdeal intersect(const SemigroupIdeal& E, const SemigroupIdeal& F);
SemigroupIdeal product(const SemigroupIdeal& E, const SemigroupIdeal& F);
SemigroupIdeal power(const SemigroupIdeal& E, int k);
/// E : F = { s in S : s + F inside E }.  F must not be the zero ideal.
SemigroupIdeal colon(const SemigroupIdeal& E, const SemigroupIdeal& F);

/// Closed-form predictions for a semigroup case.  The Rees verdicts stay
/// empty: the ring is one-dimensional and they do not apply.
Prediction predict(const SemigroupSpec& spec);

/// One case with its ring context; the truncation bound is derived from the
/// spec (and the optional reduction-search cap) so that every operation in
/// the analysis chain stays certified.
class SemigroupCase {
public:
  explicit SemigroupCase(SemigroupSpec spec, std::optional<int> reduction_n_max = std::nullopt);

  const SemigroupSpec& spec() const { return spec_; }
  const std::shared_ptr<const SemigroupRing>& ring() const { return ring_; }

  SemigroupIdeal parameter_ideal() const;            ///< Q = (t^{a*n})
  SemigroupIdeal max_ideal_power(int k) const;       ///< image of m^k
  SemigroupIdeal quasi_socle() const;                ///< I = Q : m^q
  SemigroupIdeal closure_of_parameter_ideal() const; ///< { s in S : s >= a*n }

  /// Nilpotency index of the image of I in A/Q.
  int quotient_nilpotency_index() const;
  /// Ooishi duality in the finite quotient A/Q; integral cases only.
  bool gorenstein_duality() const;

  CaseReport analyze() const;

private:
  SemigroupSpec spec_;
  std::optional<int> n_max_override_;
  std::shared_ptr<const SemigroupRing> ring_;

  bool in_parameter_ideal(int s) const;
  std::vector<int> quotient_image(const SemigroupIdeal& E) const;
  std::vector<int> quotient_annihilator(const SemigroupIdeal& E) const;
};

/// Convenience wrapper: build the case and analyze it.
CaseReport analyze(const SemigroupSpec& spec, const AnalyzeOptions& options = {});

} // namespace qsocle
