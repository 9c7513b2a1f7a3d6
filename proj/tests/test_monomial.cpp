#include "doctest.h"

#include <random>
#include <stdexcept>
#include <vector>

#include "qsocle/monomial.hpp"

using namespace qsocle;

namespace {

ExponentVector ev(std::vector<int> coords) { return ExponentVector(std::move(coords)); }

MonomialIdeal ideal(int dim, const std::vector<std::vector<int>>& rows) {
  std::vector<ExponentVector> gens;
  for (const auto& r : rows) gens.emplace_back(r);
  return MonomialIdeal(dim, gens);
}

/// A few random generators with entries in [0, max_exp]; may normalize to
/// the unit ideal when a zero vector is drawn.
MonomialIdeal random_ideal(std::mt19937& rng, int dim, int max_exp, int max_gens) {
  std::uniform_int_distribution<int> count(1, max_gens);
  std::uniform_int_distribution<int> exp(0, max_exp);
  std::vector<ExponentVector> gens;
  int n = count(rng);
  for (int g = 0; g < n; ++g) {
    std::vector<int> coords(dim);
    for (int& c : coords) c = exp(rng);
    gens.emplace_back(coords);
  }
  return MonomialIdeal(dim, gens);
}

/// Iterates the box [0, hi]^d in place.
bool next_point(std::vector<int>& p, int hi) {
  for (std::size_t i = p.size(); i-- > 0;) {
    if (p[i] < hi) {
      ++p[i];
      for (std::size_t j = i + 1; j < p.size(); ++j) p[j] = 0;
      return true;
    }
  }
  return false;
}

} // namespace

TEST_SUITE("monomial") {

TEST_CASE("exponent vector construction and accessors") {
  ExponentVector p = ev({2, 0, 1});
  CHECK(p.dim() == 3);
  CHECK(p[0] == 2);
  CHECK(p.total_degree() == 3);
  CHECK(p.to_monomial_string() == "x1^2*x3");
  CHECK(p.to_tuple_string() == "(2,0,1)");
  CHECK(ExponentVector::zero(3).to_monomial_string() == "1");
  CHECK(ExponentVector::unit(3, 1) == ev({0, 1, 0}));
  CHECK_THROWS_AS(ev({1, -1}), std::invalid_argument);
  CHECK_THROWS_AS(ExponentVector::zero(0), std::invalid_argument);
}

TEST_CASE("divisibility, product, colon map, lcm") {
  CHECK(ev({1, 0}).divides(ev({2, 0})));
  CHECK_FALSE(ev({1, 1}).divides(ev({2, 0})));
  CHECK(ev({0, 0}).divides(ev({3, 7})));
  CHECK(ev({1, 2}) + ev({3, 0}) == ev({4, 2}));
  CHECK(ev({1, 2}).saturating_sub(ev({3, 1})) == ev({0, 1}));
  CHECK(ExponentVector::join(ev({1, 2}), ev({3, 0})) == ev({3, 2}));
}

TEST_CASE("canonical order: total degree first, then lexicographic") {
  CHECK(ev({0, 2}) < ev({3, 0}));     // degree 2 before degree 3
  CHECK(ev({0, 0, 1}) < ev({0, 1, 0})); // same degree, lexicographic
  CHECK(ev({0, 1, 0}) < ev({1, 0, 0}));
  CHECK(ev({1, 1}) == ev({1, 1}));
}

TEST_CASE("construction minimalizes to the generator antichain") {
  CHECK(ideal(2, {{2, 0}, {3, 1}, {0, 2}}) == ideal(2, {{2, 0}, {0, 2}}));
  CHECK(MonomialIdeal::zero(2).is_zero());
  CHECK(MonomialIdeal::zero(2).generators().empty());
  CHECK(ideal(2, {{0, 0}, {1, 2}}) == MonomialIdeal::unit(2));
  CHECK(ideal(2, {{1, 2}, {1, 2}, {1, 2}}).generators().size() == 1);
  // antichain: no generator divides another
  MonomialIdeal J = ideal(2, {{4, 0}, {3, 1}, {1, 2}, {2, 3}, {0, 5}});
  for (const auto& g : J.generators())
    for (const auto& h : J.generators())
      if (!(g == h)) CHECK_FALSE(g.divides(h));
}

TEST_CASE("membership") {
  MonomialIdeal J = ideal(2, {{2, 0}, {0, 2}});
  CHECK(J.contains(ev({2, 1})));
  CHECK_FALSE(J.contains(ev({1, 1})));
  CHECK(MonomialIdeal::unit(2).contains(ev({0, 0})));
  CHECK_FALSE(MonomialIdeal::zero(2).contains(ev({5, 5})));
  CHECK_THROWS_AS(J.contains(ev({1, 1, 1})), std::invalid_argument);
}

TEST_CASE("maximal ideal powers") {
  CHECK(MonomialIdeal::maximal_power(2, 2) == ideal(2, {{2, 0}, {1, 1}, {0, 2}}));
  CHECK(MonomialIdeal::maximal_power(3, 1) ==
        ideal(3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}));
  CHECK(MonomialIdeal::maximal_power(2, 0) == MonomialIdeal::unit(2));
  CHECK(power(MonomialIdeal::maximal_power(2, 1), 3) == MonomialIdeal::maximal_power(2, 3));
}

TEST_CASE("sum, product, power, intersect basics") {
  MonomialIdeal J = ideal(2, {{2, 0}});
  MonomialIdeal K = ideal(2, {{0, 3}});
  CHECK(intersect(J, K) == ideal(2, {{2, 3}}));
  CHECK(product(J, K) == ideal(2, {{2, 3}}));
  CHECK(sum(J, K) == ideal(2, {{2, 0}, {0, 3}}));
  CHECK(product(J, MonomialIdeal::unit(2)) == J);
  CHECK(power(J, 0) == MonomialIdeal::unit(2));
  CHECK(power(J, 3) == ideal(2, {{6, 0}}));
  CHECK_THROWS_AS(power(J, -1), std::invalid_argument);
  CHECK_THROWS_AS(sum(J, MonomialIdeal::unit(3)), std::invalid_argument);
}

TEST_CASE("zero ideal conventions") {
  MonomialIdeal J = ideal(2, {{1, 1}});
  MonomialIdeal z = MonomialIdeal::zero(2);
  CHECK(sum(z, J) == J);
  CHECK(product(z, J) == z);
  CHECK(intersect(z, J) == z);
  CHECK(power(z, 0) == MonomialIdeal::unit(2));
  CHECK(power(z, 2) == z);
}

TEST_CASE("colon by maximal-ideal powers") {
  // (x1^2, x2^2, x3^2) : m^3 = m
  MonomialIdeal Q3 = MonomialIdeal::diagonal({2, 2, 2});
  CHECK(colon(Q3, MonomialIdeal::maximal_power(3, 3)) == MonomialIdeal::maximal_power(3, 1));
  // (x^3, y^3) : m^2 = m^3
  MonomialIdeal Q2 = MonomialIdeal::diagonal({3, 3});
  CHECK(colon(Q2, MonomialIdeal::maximal_power(2, 2)) == MonomialIdeal::maximal_power(2, 3));
  // (x^2, y^2) : m^5 = (1), since m^3 (hence 1 * m^5) lies inside (x^2, y^2)
  CHECK(colon(MonomialIdeal::diagonal({2, 2}), MonomialIdeal::maximal_power(2, 5)) ==
        MonomialIdeal::unit(2));
  CHECK(colon(Q2, MonomialIdeal::unit(2)) == Q2);
  CHECK_THROWS_AS(colon(Q2, MonomialIdeal::zero(2)), std::invalid_argument);
}

TEST_CASE("colon agrees with the pointwise oracle") {
  std::mt19937 rng(7);
  for (int iter = 0; iter < 50; ++iter) {
    MonomialIdeal J = random_ideal(rng, 2, 4, 3);
    MonomialIdeal K = random_ideal(rng, 2, 3, 3);
    if (K.is_zero()) continue;
    MonomialIdeal C = colon(J, K);
    std::vector<int> p(2, 0);
    do {
      ExponentVector alpha(p);
      bool direct = true;
      for (const auto& k : K.generators())
        if (!J.contains(alpha + k)) { direct = false; break; }
      CHECK(C.contains(alpha) == direct);
    } while (next_point(p, 7));
  }
}

TEST_CASE("product membership has a pointwise decomposition") {
  std::mt19937 rng(11);
  for (int iter = 0; iter < 30; ++iter) {
    MonomialIdeal J = random_ideal(rng, 2, 3, 2);
    MonomialIdeal K = random_ideal(rng, 2, 3, 2);
    MonomialIdeal P = product(J, K);
    std::vector<int> p(2, 0);
    do {
      ExponentVector alpha(p);
      bool split = false;
      for (int b0 = 0; b0 <= p[0] && !split; ++b0)
        for (int b1 = 0; b1 <= p[1] && !split; ++b1) {
          ExponentVector beta = ev({b0, b1});
          ExponentVector gamma = ev({p[0] - b0, p[1] - b1});
          split = J.contains(beta) && K.contains(gamma);
        }
      CHECK(P.contains(alpha) == split);
    } while (next_point(p, 6));
  }
}

TEST_CASE("colon adjunction and monotonicity in the divisor") {
  std::mt19937 rng(23);
  for (int iter = 0; iter < 50; ++iter) {
    MonomialIdeal J = random_ideal(rng, 3, 3, 3);
    MonomialIdeal K = random_ideal(rng, 3, 2, 2);
    if (K.is_zero()) continue;
    CHECK(J.contains(product(K, colon(J, K))));
    for (int q = 0; q < 3; ++q) {
      MonomialIdeal small = colon(J, MonomialIdeal::maximal_power(3, q));
      MonomialIdeal large = colon(J, MonomialIdeal::maximal_power(3, q + 1));
      CHECK(large.contains(small));
    }
  }
}

TEST_CASE("intersect equals product on disjoint supports") {
  std::mt19937 rng(31);
  std::uniform_int_distribution<int> exp(1, 4);
  for (int iter = 0; iter < 40; ++iter) {
    // J lives on x1, K on x2: intersection = product = lcm combinations
    MonomialIdeal J = ideal(2, {{exp(rng), 0}});
    MonomialIdeal K = ideal(2, {{0, exp(rng)}, {0, exp(rng)}});
    CHECK(intersect(J, K) == product(J, K));
  }
}

TEST_CASE("operations return normalized values") {
  std::mt19937 rng(41);
  for (int iter = 0; iter < 30; ++iter) {
    MonomialIdeal J = random_ideal(rng, 2, 4, 4);
    MonomialIdeal K = random_ideal(rng, 2, 4, 4);
    for (const MonomialIdeal& R : {sum(J, K), product(J, K), intersect(J, K)}) {
      // re-minimalizing the generators changes nothing
      CHECK(MonomialIdeal(2, R.generators()) == R);
      for (const auto& g : R.generators())
        for (const auto& h : R.generators())
          if (!(g == h)) CHECK_FALSE(g.divides(h));
    }
  }
}

TEST_CASE("ideal containment") {
  MonomialIdeal J = ideal(2, {{2, 0}, {0, 2}});
  CHECK(MonomialIdeal::maximal_power(2, 1).contains(J));
  CHECK_FALSE(J.contains(MonomialIdeal::maximal_power(2, 1)));
  CHECK(J.contains(MonomialIdeal::zero(2)));
  CHECK(MonomialIdeal::unit(2).contains(J));
}

} // TEST_SUITE
