#include "qsocle/linear.hpp"

#include <algorithm>
#include <stdexcept>

#include <boost/multiprecision/cpp_int.hpp>

namespace qsocle {

void LinearSystem::add_row(std::vector<std::int64_t> coef, std::int64_t bound) {
  if (static_cast<int>(coef.size()) != num_vars)
    throw std::invalid_argument("LinearSystem: row width mismatch");
  rows.push_back(LinearConstraint{std::move(coef), bound});
}

namespace {

using Int = boost::multiprecision::cpp_int;

struct Row {
  std::vector<Int> coef;
  Int bound;

  bool operator==(const Row&) const = default;
  bool operator<(const Row& o) const {
    if (coef != o.coef)
      return coef < o.coef;
    return bound < o.bound;
  }
};

// Divides the row by the gcd of all its entries to keep numbers small.
// Scaling by a positive rational does not change the solution set.
void normalize(Row& r) {
  Int g = abs(r.bound);
  for (const Int& c : r.coef)
    g = boost::multiprecision::gcd(g, abs(c));
  if (g > 1) {
    for (Int& c : r.coef)
      c /= g;
    r.bound /= g;
  }
}

// A row with no variables left is the constant constraint 0 <= bound.
bool is_constant(const Row& r) {
  return std::all_of(r.coef.begin(), r.coef.end(), [](const Int& c) { return c == 0; });
}

constexpr std::size_t row_limit = 200000;

} // namespace

bool rational_feasible(const LinearSystem& system) {
  std::vector<Row> rows;
  rows.reserve(system.rows.size());
  for (const auto& in : system.rows) {
    Row r;
    r.coef.assign(in.coef.begin(), in.coef.end());
    r.bound = in.bound;
    normalize(r);
    if (is_constant(r)) {
      if (r.bound < 0)
        return false;
      continue;
    }
    rows.push_back(std::move(r));
  }

  std::vector<int> remaining;
  for (int v = 0; v < system.num_vars; ++v)
    remaining.push_back(v);

  while (!remaining.empty() && !rows.empty()) {
    // Eliminate the variable producing the fewest combined rows.
    int best = remaining.front();
    std::size_t best_cost = row_limit + 1;
    for (int v : remaining) {
      std::size_t pos = 0, neg = 0;
      for (const auto& r : rows) {
        if (r.coef[static_cast<std::size_t>(v)] > 0)
          ++pos;
        else if (r.coef[static_cast<std::size_t>(v)] < 0)
          ++neg;
      }
      std::size_t cost = pos * neg;
      if (cost < best_cost) {
        best_cost = cost;
        best = v;
      }
    }
    const auto vi = static_cast<std::size_t>(best);
    remaining.erase(std::find(remaining.begin(), remaining.end(), best));

    std::vector<Row> pos, neg, next;
    for (auto& r : rows) {
      if (r.coef[vi] > 0)
        pos.push_back(std::move(r));
      else if (r.coef[vi] < 0)
        neg.push_back(std::move(r));
      else
        next.push_back(std::move(r));
    }
    for (const auto& p : pos)
      for (const auto& n : neg) {
        // (-n_v) * p + p_v * n cancels the pivot variable; both multipliers
        // are positive, so the combined row is implied by p and n.
        const Int pv = p.coef[vi];
        const Int nv = -n.coef[vi];
        Row c;
        c.coef.resize(p.coef.size());
        for (std::size_t k = 0; k < c.coef.size(); ++k)
          c.coef[k] = nv * p.coef[k] + pv * n.coef[k];
        c.bound = nv * p.bound + pv * n.bound;
        normalize(c);
        if (is_constant(c)) {
          if (c.bound < 0)
            return false;
          continue;
        }
        next.push_back(std::move(c));
        if (next.size() > row_limit)
          throw std::runtime_error("rational_feasible: elimination exceeded the row limit");
      }
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    rows = std::move(next);
  }

  // Any surviving row still mentions a free variable and can be satisfied by
  // pushing that variable; only constant contradictions refute feasibility,
  // and those were caught above.
  return true;
}

} // namespace qsocle
