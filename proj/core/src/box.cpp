#include "qsocle/box.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <stdexcept>
#include <string>

#include "qsocle/errors.hpp"

namespace qsocle {

std::size_t default_box_cap() {
  if (const char* env = std::getenv("QSOCLE_BOX_CAP")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end && *end == '\0' && v > 0)
      return static_cast<std::size_t>(v);
  }
  return 1000000;
}

BoxSpec::BoxSpec(std::vector<int> sides, std::size_t cap) : sides_(std::move(sides)) {
  if (sides_.empty())
    throw std::invalid_argument("BoxSpec: dimension must be >= 1");
  for (int s : sides_) {
    if (s < 1)
      throw std::invalid_argument("BoxSpec: every side must be >= 1");
    if (points_ > cap / static_cast<std::size_t>(s))
      throw BoxCapExceeded("BoxSpec: box would exceed the cap of " +
                           std::to_string(cap) + " points");
    points_ *= static_cast<std::size_t>(s);
  }
}

int BoxSpec::top_degree() const {
  return std::accumulate(sides_.begin(), sides_.end(), 0) - dim();
}

std::size_t BoxSpec::index_of(const ExponentVector& p) const {
  if (!in_box(p))
    throw std::invalid_argument("BoxSpec: point outside the box");
  std::size_t idx = 0;
  for (int i = 0; i < dim(); ++i)
    idx = idx * static_cast<std::size_t>(sides_[static_cast<std::size_t>(i)]) +
          static_cast<std::size_t>(p[i]);
  return idx;
}

ExponentVector BoxSpec::point_at(std::size_t index) const {
  if (index >= points_)
    throw std::invalid_argument("BoxSpec: index out of range");
  std::vector<int> c(static_cast<std::size_t>(dim()), 0);
  for (int i = dim() - 1; i >= 0; --i) {
    auto side = static_cast<std::size_t>(sides_[static_cast<std::size_t>(i)]);
    c[static_cast<std::size_t>(i)] = static_cast<int>(index % side);
    index /= side;
  }
  return ExponentVector(std::move(c));
}

bool BoxSpec::in_box(const ExponentVector& p) const {
  if (p.dim() != dim())
    throw std::invalid_argument("BoxSpec: point dimension mismatch");
  for (int i = 0; i < dim(); ++i)
    if (p[i] >= sides_[static_cast<std::size_t>(i)])
      return false;
  return true;
}

namespace {

void check_same_spec(const BoxIdeal& a, const BoxIdeal& b, const char* op) {
  if (!(a.spec() == b.spec()))
    throw std::invalid_argument(std::string(op) + ": box mismatch");
}

} // namespace

BoxIdeal BoxIdeal::empty(BoxSpec spec) { return BoxIdeal(std::move(spec)); }

BoxIdeal BoxIdeal::full(BoxSpec spec) {
  BoxIdeal e(std::move(spec));
  std::fill(e.member_.begin(), e.member_.end(), 1);
  return e;
}

BoxIdeal BoxIdeal::project(const MonomialIdeal& J, BoxSpec spec) {
  if (J.dim() != spec.dim())
    throw std::invalid_argument("project: dimension mismatch");
  BoxIdeal e(std::move(spec));
  for (std::size_t idx = 0; idx < e.member_.size(); ++idx)
    e.member_[idx] = J.contains(e.spec_.point_at(idx)) ? 1 : 0;
  return e;
}

BoxIdeal BoxIdeal::max_ideal_power(BoxSpec spec, int n) {
  BoxIdeal e(std::move(spec));
  for (std::size_t idx = 0; idx < e.member_.size(); ++idx)
    e.member_[idx] = e.spec_.point_at(idx).total_degree() >= n ? 1 : 0;
  return e;
}

BoxIdeal BoxIdeal::upward_closure(BoxSpec spec, const std::vector<ExponentVector>& seeds) {
  BoxIdeal e(std::move(spec));
  for (const auto& s : seeds)
    if (e.spec_.in_box(s))
      e.member_[e.spec_.index_of(s)] = 1;
  // Sweep once per coordinate direction; marking in increasing index order
  // propagates within a direction automatically, and d passes close the set.
  for (int i = 0; i < e.spec_.dim(); ++i)
    for (std::size_t idx = 0; idx < e.member_.size(); ++idx) {
      if (!e.member_[idx])
        continue;
      ExponentVector p = e.spec_.point_at(idx);
      std::vector<int> c = p.coords();
      c[static_cast<std::size_t>(i)] += 1;
      ExponentVector up(std::move(c));
      if (e.spec_.in_box(up))
        e.member_[e.spec_.index_of(up)] = 1;
    }
  return e;
}

bool BoxIdeal::is_empty() const {
  return std::find(member_.begin(), member_.end(), 1) == member_.end();
}

bool BoxIdeal::is_full() const {
  return std::find(member_.begin(), member_.end(), 0) == member_.end();
}

std::size_t BoxIdeal::size() const {
  return static_cast<std::size_t>(std::count(member_.begin(), member_.end(), 1));
}

bool BoxIdeal::contains(const ExponentVector& p) const {
  return spec_.in_box(p) && member_[spec_.index_of(p)];
}

std::vector<ExponentVector> BoxIdeal::minimal_points() const {
  std::vector<ExponentVector> out;
  for (std::size_t idx = 0; idx < member_.size(); ++idx) {
    if (!member_[idx])
      continue;
    ExponentVector p = spec_.point_at(idx);
    bool minimal = true;
    for (int i = 0; i < spec_.dim() && minimal; ++i) {
      if (p[i] == 0)
        continue;
      std::vector<int> c = p.coords();
      c[static_cast<std::size_t>(i)] -= 1;
      if (member_[spec_.index_of(ExponentVector(std::move(c)))])
        minimal = false;
    }
    if (minimal)
      out.push_back(p);
  }
  return out;
}

BoxIdeal annihilator(const BoxIdeal& E) {
  // alpha kills the ideal iff alpha + beta leaves the box for every minimal
  // beta; upward closure extends that to all of E.
  const std::vector<ExponentVector> mins = E.minimal_points();
  BoxIdeal out = BoxIdeal::empty(E.spec());
  const int d = E.spec().dim();
  for (std::size_t idx = 0; idx < out.member_.size(); ++idx) {
    ExponentVector p = out.spec_.point_at(idx);
    bool kills = true;
    for (const auto& m : mins) {
      bool outside = false;
      for (int i = 0; i < d; ++i)
        if (p[i] + m[i] >= E.spec().sides()[static_cast<std::size_t>(i)]) {
          outside = true;
          break;
        }
      if (!outside) {
        kills = false;
        break;
      }
    }
    out.member_[idx] = kills ? 1 : 0;
  }
  return out;
}

BoxIdeal box_product(const BoxIdeal& E, const BoxIdeal& F) {
  check_same_spec(E, F, "box_product");
  // e + f for all e in E and minimal f suffices: any other sum decomposes
  // through an element of E above e.
  const std::vector<ExponentVector> mins = F.minimal_points();
  BoxIdeal out = BoxIdeal::empty(E.spec());
  const int d = E.spec().dim();
  for (std::size_t idx = 0; idx < E.member_.size(); ++idx) {
    if (!E.member_[idx])
      continue;
    ExponentVector e = E.spec().point_at(idx);
    for (const auto& f : mins) {
      std::vector<int> c(static_cast<std::size_t>(d));
      bool inside = true;
      for (int i = 0; i < d; ++i) {
        c[static_cast<std::size_t>(i)] = e[i] + f[i];
        if (c[static_cast<std::size_t>(i)] >= E.spec().sides()[static_cast<std::size_t>(i)]) {
          inside = false;
          break;
        }
      }
      if (inside)
        out.member_[out.spec_.index_of(ExponentVector(std::move(c)))] = 1;
    }
  }
  return out;
}

BoxIdeal box_power(const BoxIdeal& E, int n) {
  if (n < 0)
    throw std::invalid_argument("box_power: exponent must be >= 0");
  BoxIdeal acc = BoxIdeal::full(E.spec());
  for (int i = 0; i < n; ++i)
    acc = box_product(acc, E);
  return acc;
}

int nilpotency_index(const BoxIdeal& E) {
  if (E.is_full())
    throw std::domain_error("nilpotency_index: undefined for the unit ideal");
  int n = 0;
  BoxIdeal cur = E;
  while (!cur.is_empty()) {
    ++n;
    cur = box_product(cur, E);
  }
  return n == 0 ? 0 : n;
}

bool gorenstein_duality_check(const BoxIdeal& E) {
  if (E.is_empty() || E.is_full())
    throw std::domain_error("gorenstein_duality_check: ideal must be proper and nonzero");
  const int r = nilpotency_index(E);
  std::vector<BoxIdeal> powers;
  powers.reserve(static_cast<std::size_t>(r) + 2);
  powers.push_back(BoxIdeal::full(E.spec()));
  for (int i = 1; i <= r + 1; ++i)
    powers.push_back(box_product(powers.back(), E));
  for (int i = 0; i <= r + 1; ++i)
    if (!(annihilator(powers[static_cast<std::size_t>(i)]) ==
          powers[static_cast<std::size_t>(r + 1 - i)]))
      return false;
  return true;
}

} // namespace qsocle
