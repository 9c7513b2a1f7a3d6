#pragma once

// Integral closure of monomial ideals, decided exactly.  For a diagonal
// ideal (x_1^{a_1},...,x_d^{a_d}) the closure consists of the monomials with
// sum_i alpha_i / a_i >= 1; for an arbitrary monomial ideal it consists of
// the lattice points of the Newton polyhedron (the convex hull of the
// exponents of the ideal's monomials).

#include <vector>

#include "qsocle/monomial.hpp"

namespace qsocle {

/// Membership of x^alpha in the closure of (x_1^{a_1},...,x_d^{a_d}):
/// sum_i alpha_i / a_i >= 1, evaluated in exact integer arithmetic.
bool diagonal_closure_contains(const std::vector<int>& a, const ExponentVector& alpha);

/// The full closure of the diagonal ideal, minimally generated.  All minimal
/// generators satisfy alpha_i <= a_i, so the finite box [0, a_i] is scanned
/// exhaustively.
MonomialIdeal diagonal_closure(const std::vector<int>& a);

/// Membership of x^alpha in the Newton polyhedron of J, i.e. whether alpha
/// dominates a rational convex combination of the generators of J.  Decided
/// by exact Fourier-Motzkin elimination over the combination weights.
/// J must not be the zero ideal.
bool newton_polyhedron_contains(const MonomialIdeal& J, const ExponentVector& alpha);

/// For q = (x_1^{n-1}, x_2^n, ..., x_d^n) with d >= 2, n >= 2, checks on the
/// box [0, m*n]^d that
///   (i)  the closure of q is exactly (x_1^{n-1}) + m^n, and
///   (ii) the m-th power of that closure is itself integrally closed, namely
///        equal to the closure of (x_1^{m(n-1)}, x_2^{mn}, ..., x_d^{mn}).
/// Returns the conjunction of both scans.
bool powers_integrally_closed(int d, int n, int m);

/// The closed-form test for the quasi-socle ideal Q : m^q to coincide with
/// the integral closure of Q = (x_1^{a_1},...,x_d^{a_d}): with
/// ell = sum(a_i) - d + 1 - q, either every a_i equals ell, or exactly one
/// equals ell - 1 and the rest equal ell.  Requires d >= 2 and every
/// a_i >= 2; outside that hypothesis the test refuses (throws).
bool closure_equality_criterion(const std::vector<int>& a, int q);

} // namespace qsocle
