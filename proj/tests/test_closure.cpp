#include "doctest.h"

#include <stdexcept>
#include <vector>

#include "qsocle/closure.hpp"
#include "qsocle/monomial.hpp"
#include "qsocle/quasisocle.hpp"

using namespace qsocle;

namespace {

ExponentVector ev(std::vector<int> coords) { return ExponentVector(std::move(coords)); }

MonomialIdeal ideal(int dim, const std::vector<std::vector<int>>& rows) {
  std::vector<ExponentVector> gens;
  for (const auto& r : rows) gens.emplace_back(r);
  return MonomialIdeal(dim, gens);
}

bool next_point(std::vector<int>& p, const std::vector<int>& hi) {
  for (std::size_t i = p.size(); i-- > 0;) {
    if (p[i] < hi[i]) {
      ++p[i];
      for (std::size_t j = i + 1; j < p.size(); ++j) p[j] = 0;
      return true;
    }
  }
  return false;
}

} // namespace

TEST_SUITE("closure") {

TEST_CASE("weighted-degree membership criterion for diagonal ideals") {
  // sum alpha_i / a_i >= 1
  CHECK(diagonal_closure_contains({2, 2, 2}, ev({1, 1, 0})));
  CHECK_FALSE(diagonal_closure_contains({2, 2, 2}, ev({1, 0, 0})));
  CHECK(diagonal_closure_contains({2, 2, 2}, ev({0, 2, 0})));
  CHECK(diagonal_closure_contains({3, 5}, ev({3, 0})));
  CHECK(diagonal_closure_contains({3, 5}, ev({2, 2}))); // 2/3 + 2/5 = 16/15
  CHECK_FALSE(diagonal_closure_contains({3, 5}, ev({2, 1}))); // 2/3 + 1/5 = 13/15
}

TEST_CASE("closure of diagonal ideals, minimally generated") {
  CHECK(diagonal_closure({2, 2}) == MonomialIdeal::maximal_power(2, 2));
  CHECK(diagonal_closure({1, 1, 1}) == MonomialIdeal::maximal_power(3, 1));
  CHECK(diagonal_closure({2, 3}) == ideal(2, {{2, 0}, {0, 3}, {1, 2}}));
  // the closure contains the ideal
  for (const std::vector<int>& a : {std::vector<int>{2, 2, 2}, {3, 5}, {4, 2, 3}})
    CHECK(diagonal_closure(a).contains(MonomialIdeal::diagonal(a)));
}

TEST_CASE("newton-polyhedron membership basics") {
  MonomialIdeal J = ideal(2, {{2, 0}, {0, 3}});
  for (const auto& g : J.generators()) CHECK(newton_polyhedron_contains(J, g));
  CHECK(newton_polyhedron_contains(J, ev({1, 2})));
  CHECK_FALSE(newton_polyhedron_contains(J, ev({1, 1})));
  CHECK_THROWS_AS(newton_polyhedron_contains(MonomialIdeal::zero(2), ev({1, 1})),
                  std::invalid_argument);
  CHECK_THROWS_AS(newton_polyhedron_contains(J, ev({1, 1, 1})), std::invalid_argument);
  // single-generator ideal: membership is plain divisibility of the generator scale
  MonomialIdeal P = ideal(2, {{2, 1}});
  CHECK(newton_polyhedron_contains(P, ev({2, 1})));
  CHECK(newton_polyhedron_contains(P, ev({3, 1})));
  CHECK_FALSE(newton_polyhedron_contains(P, ev({2, 0})));
}

TEST_CASE("diagonal and general membership agree") {
  for (const std::vector<int>& a : {std::vector<int>{2, 3}, {2, 2, 2}, {3, 4}, {1, 3}}) {
    MonomialIdeal J = MonomialIdeal::diagonal(a);
    std::vector<int> hi(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) hi[i] = a[i] + 1;
    std::vector<int> p(a.size(), 0);
    do {
      ExponentVector alpha(p);
      CHECK(newton_polyhedron_contains(J, alpha) == diagonal_closure_contains(a, alpha));
    } while (next_point(p, hi));
  }
}

TEST_CASE("membership in scaled diagonal ideals matches the explicit inequality") {
  // J = (x1^{m(n-1)}, x2^{mn}, ..., xd^{mn}): alpha is in the closure iff
  // n*alpha_1 + (n-1)*(alpha_2+...+alpha_d) >= m*n*(n-1)
  for (int n : {2, 3})
    for (int m : {1, 2}) {
      std::vector<int> a = {m * (n - 1), m * n, m * n};
      MonomialIdeal J = MonomialIdeal::diagonal(a);
      std::vector<int> hi(3, m * n + 1);
      std::vector<int> p(3, 0);
      do {
        ExponentVector alpha(p);
        bool inequality = n * p[0] + (n - 1) * (p[1] + p[2]) >= m * n * (n - 1);
        CHECK(newton_polyhedron_contains(J, alpha) == inequality);
      } while (next_point(p, hi));
    }
}

TEST_CASE("closure is idempotent and monotone") {
  for (const std::vector<int>& a : {std::vector<int>{2, 3}, {3, 3}, {2, 2, 3}}) {
    MonomialIdeal closed = diagonal_closure(a);
    std::vector<int> hi(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) hi[i] = a[i] + 1;
    std::vector<int> p(a.size(), 0);
    do {
      ExponentVector alpha(p);
      // the closure of the closure adds nothing
      CHECK(newton_polyhedron_contains(closed, alpha) == closed.contains(alpha));
      // monotone: members of the smaller ideal's closure lie in the larger's
      if (diagonal_closure_contains(a, alpha)) {
        std::vector<int> smaller(a.size());
        for (std::size_t i = 0; i < a.size(); ++i) smaller[i] = std::max(1, a[i] - 1);
        CHECK(diagonal_closure_contains(smaller, alpha));
      }
    } while (next_point(p, hi));
  }
}

TEST_CASE("powers of the one-lowered-exponent closure stay integrally closed") {
  CHECK(powers_integrally_closed(2, 2, 1));
  CHECK(powers_integrally_closed(3, 3, 2));
  CHECK(powers_integrally_closed(2, 4, 3));
  CHECK_THROWS_AS(powers_integrally_closed(1, 2, 1), std::invalid_argument);
  CHECK_THROWS_AS(powers_integrally_closed(2, 1, 1), std::invalid_argument);
  CHECK_THROWS_AS(powers_integrally_closed(2, 2, 0), std::invalid_argument);
}

TEST_CASE("equality-with-closure criterion") {
  // all a_i equal ell, or exactly one equals ell - 1 and the rest equal ell
  CHECK_FALSE(closure_equality_criterion({3, 3}, 1));  // ell = 4, no condition fits
  CHECK(closure_equality_criterion({2, 3, 3}, 3));     // ell = 3, one a_i = 2
  CHECK(closure_equality_criterion({2, 2}, 1));        // ell = 2, all equal
  CHECK(closure_equality_criterion({3, 3}, 2));        // ell = 3, all equal
  CHECK_THROWS_AS(closure_equality_criterion({3}, 1), std::domain_error);
  CHECK_THROWS_AS(closure_equality_criterion({1, 3}, 1), std::domain_error);
  CHECK_THROWS_AS(closure_equality_criterion({2, 2}, 0), std::invalid_argument);
}

TEST_CASE("criterion matches the computed ideal equality in dimension two") {
  for (int a1 = 2; a1 <= 4; ++a1)
    for (int a2 = 2; a2 <= 4; ++a2) {
      std::vector<int> a = {a1, a2};
      MonomialIdeal closed = diagonal_closure(a);
      int rho = a1 + a2 - 2;
      for (int q = 1; q <= rho; ++q) {
        int ell = rho + 1 - q;
        if (ell < std::max(a1, a2)) continue; // criterion applies to integral cases
        bool predicted = closure_equality_criterion(a, q);
        bool actual = quasi_socle_ideal(CaseSpec::regular(a, q)) == closed;
        CHECK(predicted == actual);
      }
    }
}

TEST_CASE("integrality of the colon matches the shift threshold") {
  // ell >= max a_i iff every generator of Q : m^q lies in the closure of Q
  for (const std::vector<int>& a : {std::vector<int>{2, 3}, {3, 3}, {2, 2, 2}}) {
    int rho = 0;
    for (int ai : a) rho += ai - 1;
    int max_a = 0;
    for (int ai : a) max_a = std::max(max_a, ai);
    for (int q = 1; q <= rho; ++q) {
      MonomialIdeal I = quasi_socle_ideal(CaseSpec::regular(a, q));
      bool all_inside = true;
      for (const auto& g : I.generators())
        if (!diagonal_closure_contains(a, g)) { all_inside = false; break; }
      CHECK(all_inside == (rho + 1 - q >= max_a));
    }
  }
}

} // TEST_SUITE
