#include "qsocle/closure.hpp"

#include <stdexcept>

#include <boost/multiprecision/cpp_int.hpp>

#include "qsocle/linear.hpp"

namespace qsocle {

namespace {

using Int = boost::multiprecision::cpp_int;

void check_diagonal_exponents(const std::vector<int>& a) {
  if (a.empty())
    throw std::invalid_argument("diagonal closure: dimension must be >= 1");
  for (int ai : a)
    if (ai < 1)
      throw std::invalid_argument("diagonal closure: every exponent must be >= 1");
}

} // namespace

bool diagonal_closure_contains(const std::vector<int>& a, const ExponentVector& alpha) {
  check_diagonal_exponents(a);
  if (alpha.dim() != static_cast<int>(a.size()))
    throw std::invalid_argument("diagonal_closure_contains: dimension mismatch");
  // sum alpha_i / a_i >= 1 cleared to the common denominator prod a_i.
  Int prod = 1;
  for (int ai : a)
    prod *= ai;
  Int lhs = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    lhs += Int(alpha[static_cast<int>(i)]) * (prod / a[i]);
  return lhs >= prod;
}

MonomialIdeal diagonal_closure(const std::vector<int>& a) {
  check_diagonal_exponents(a);
  const int d = static_cast<int>(a.size());
  std::vector<ExponentVector> gens;
  std::vector<int> c(a.size(), 0);
  for (;;) {
    ExponentVector p(c);
    if (diagonal_closure_contains(a, p))
      gens.push_back(std::move(p));
    int i = d - 1;
    while (i >= 0 && c[static_cast<std::size_t>(i)] == a[static_cast<std::size_t>(i)])
      c[static_cast<std::size_t>(i--)] = 0;
    if (i < 0)
      break;
    ++c[static_cast<std::size_t>(i)];
  }
  return MonomialIdeal(d, std::move(gens));
}

bool newton_polyhedron_contains(const MonomialIdeal& J, const ExponentVector& alpha) {
  if (J.is_zero())
    throw std::invalid_argument("newton_polyhedron_contains: ideal must not be zero");
  if (J.dim() != alpha.dim())
    throw std::invalid_argument("newton_polyhedron_contains: dimension mismatch");
  if (J.contains(alpha))
    return true; // alpha dominates a single generator

  // Want weights w_g >= 0 with sum w_g = 1 and sum w_g * g <= alpha
  // componentwise.  Substituting the last weight w_m = 1 - sum of the others
  // leaves m - 1 unknowns.
  const auto& gens = J.generators();
  const std::size_t m = gens.size();
  if (m == 1)
    return false; // single generator already handled by the containment test

  const ExponentVector& last = gens.back();
  LinearSystem sys;
  sys.num_vars = static_cast<int>(m) - 1;

  for (std::size_t g = 0; g + 1 < m; ++g) {
    std::vector<std::int64_t> row(m - 1, 0);
    row[g] = -1;
    sys.add_row(std::move(row), 0); // w_g >= 0
  }
  sys.add_row(std::vector<std::int64_t>(m - 1, 1), 1); // w_m >= 0

  for (int i = 0; i < J.dim(); ++i) {
    std::vector<std::int64_t> row(m - 1, 0);
    for (std::size_t g = 0; g + 1 < m; ++g)
      row[g] = gens[g][i] - last[i];
    sys.add_row(std::move(row), alpha[i] - last[i]);
  }
  return rational_feasible(sys);
}

bool powers_integrally_closed(int d, int n, int m) {
  if (d < 2 || n < 2 || m < 1)
    throw std::invalid_argument("powers_integrally_closed: need d >= 2, n >= 2, m >= 1");

  std::vector<int> base(static_cast<std::size_t>(d), n);
  base[0] = n - 1;
  const MonomialIdeal q_ideal = MonomialIdeal::diagonal(base);
  const MonomialIdeal closed = sum(q_ideal, MonomialIdeal::maximal_power(d, n));
  const MonomialIdeal closed_m = power(closed, m);

  std::vector<int> scaled(static_cast<std::size_t>(d), m * n);
  scaled[0] = m * (n - 1);
  const MonomialIdeal scaled_ideal = MonomialIdeal::diagonal(scaled);

  // Scan the box [0, m*n]^d.
  std::vector<int> c(static_cast<std::size_t>(d), 0);
  for (;;) {
    ExponentVector p(c);
    if (newton_polyhedron_contains(q_ideal, p) != closed.contains(p))
      return false;
    if (newton_polyhedron_contains(scaled_ideal, p) != closed_m.contains(p))
      return false;
    int i = d - 1;
    while (i >= 0 && c[static_cast<std::size_t>(i)] == m * n)
      c[static_cast<std::size_t>(i--)] = 0;
    if (i < 0)
      break;
    ++c[static_cast<std::size_t>(i)];
  }
  return true;
}

bool closure_equality_criterion(const std::vector<int>& a, int q) {
  if (a.size() < 2)
    throw std::domain_error("closure_equality_criterion: requires d >= 2");
  for (int ai : a)
    if (ai < 2)
      throw std::domain_error("closure_equality_criterion: requires every a_i >= 2");
  if (q < 1)
    throw std::invalid_argument("closure_equality_criterion: q must be >= 1");

  int ell = 1 - q - static_cast<int>(a.size());
  for (int ai : a)
    ell += ai;

  std::size_t at_ell = 0, at_ell_minus_1 = 0;
  for (int ai : a) {
    if (ai == ell)
      ++at_ell;
    else if (ai == ell - 1)
      ++at_ell_minus_1;
  }
  const std::size_t d = a.size();
  return at_ell == d || (at_ell == d - 1 && at_ell_minus_1 == 1);
}

} // namespace qsocle
