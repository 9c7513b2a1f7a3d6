#include "qsocle/monomial.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace qsocle {

namespace {

void check_same_dim(int a, int b, const char* op) {
  if (a != b)
    throw std::invalid_argument(std::string(op) + ": dimension mismatch (" +
                                std::to_string(a) + " vs " + std::to_string(b) + ")");
}

} // namespace

ExponentVector::ExponentVector(std::vector<int> coords) : coords_(std::move(coords)) {
  if (coords_.empty())
    throw std::invalid_argument("ExponentVector: dimension must be >= 1");
  for (int c : coords_)
    if (c < 0)
      throw std::invalid_argument("ExponentVector: negative exponent");
}

ExponentVector ExponentVector::zero(int dim) {
  return ExponentVector(std::vector<int>(static_cast<std::size_t>(dim), 0));
}

ExponentVector ExponentVector::unit(int dim, int i) {
  if (i < 0 || i >= dim)
    throw std::invalid_argument("ExponentVector::unit: index out of range");
  std::vector<int> c(static_cast<std::size_t>(dim), 0);
  c[static_cast<std::size_t>(i)] = 1;
  return ExponentVector(std::move(c));
}

int ExponentVector::total_degree() const {
  return std::accumulate(coords_.begin(), coords_.end(), 0);
}

bool ExponentVector::divides(const ExponentVector& other) const {
  check_same_dim(dim(), other.dim(), "divides");
  for (std::size_t i = 0; i < coords_.size(); ++i)
    if (coords_[i] > other.coords_[i])
      return false;
  return true;
}

ExponentVector operator+(const ExponentVector& a, const ExponentVector& b) {
  check_same_dim(a.dim(), b.dim(), "operator+");
  std::vector<int> c(a.coords_);
  for (std::size_t i = 0; i < c.size(); ++i)
    c[i] += b.coords_[i];
  return ExponentVector(std::move(c));
}

ExponentVector ExponentVector::saturating_sub(const ExponentVector& b) const {
  check_same_dim(dim(), b.dim(), "saturating_sub");
  std::vector<int> c(coords_);
  for (std::size_t i = 0; i < c.size(); ++i)
    c[i] = std::max(c[i] - b.coords_[i], 0);
  return ExponentVector(std::move(c));
}

ExponentVector ExponentVector::join(const ExponentVector& a, const ExponentVector& b) {
  check_same_dim(a.dim(), b.dim(), "join");
  std::vector<int> c(a.coords_);
  for (std::size_t i = 0; i < c.size(); ++i)
    c[i] = std::max(c[i], b.coords_[i]);
  return ExponentVector(std::move(c));
}

std::strong_ordering ExponentVector::operator<=>(const ExponentVector& other) const {
  if (auto cmp = total_degree() <=> other.total_degree(); cmp != 0)
    return cmp;
  return coords_ <=> other.coords_;
}

std::string ExponentVector::to_monomial_string() const {
  std::string out;
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (coords_[i] == 0)
      continue;
    if (!out.empty())
      out += "*";
    out += "x" + std::to_string(i + 1);
    if (coords_[i] > 1)
      out += "^" + std::to_string(coords_[i]);
  }
  return out.empty() ? "1" : out;
}

std::string ExponentVector::to_tuple_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (i)
      out += ",";
    out += std::to_string(coords_[i]);
  }
  return out + ")";
}

MonomialIdeal::MonomialIdeal(int dim, std::vector<ExponentVector> gens) : dim_(dim) {
  if (dim < 1)
    throw std::invalid_argument("MonomialIdeal: dimension must be >= 1");
  for (const auto& g : gens)
    check_same_dim(dim, g.dim(), "MonomialIdeal");
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  // Generators are sorted by degree, so a multiple can only follow its
  // divisor; one forward pass keeps exactly the minimal ones.
  for (const auto& g : gens) {
    bool redundant = false;
    for (const auto& kept : gens_)
      if (kept.divides(g)) {
        redundant = true;
        break;
      }
    if (!redundant)
      gens_.push_back(g);
  }
}

MonomialIdeal MonomialIdeal::zero(int dim) { return MonomialIdeal(dim, {}); }

MonomialIdeal MonomialIdeal::unit(int dim) {
  return MonomialIdeal(dim, {ExponentVector::zero(dim)});
}

MonomialIdeal MonomialIdeal::diagonal(const std::vector<int>& a) {
  const int d = static_cast<int>(a.size());
  if (d < 1)
    throw std::invalid_argument("diagonal: dimension must be >= 1");
  std::vector<ExponentVector> gens;
  for (int i = 0; i < d; ++i) {
    if (a[static_cast<std::size_t>(i)] < 1)
      throw std::invalid_argument("diagonal: every exponent must be >= 1");
    std::vector<int> c(static_cast<std::size_t>(d), 0);
    c[static_cast<std::size_t>(i)] = a[static_cast<std::size_t>(i)];
    gens.emplace_back(std::move(c));
  }
  return MonomialIdeal(d, std::move(gens));
}

MonomialIdeal MonomialIdeal::maximal_power(int dim, int q) {
  if (dim < 1)
    throw std::invalid_argument("maximal_power: dimension must be >= 1");
  if (q < 0)
    throw std::invalid_argument("maximal_power: exponent must be >= 0");
  // Odometer over all compositions of q into dim parts.
  std::vector<ExponentVector> gens;
  std::vector<int> c(static_cast<std::size_t>(dim), 0);
  c[0] = q;
  for (;;) {
    gens.emplace_back(c);
    // Find the rightmost position before the last with a nonzero entry.
    int i = dim - 2;
    while (i >= 0 && c[static_cast<std::size_t>(i)] == 0)
      --i;
    if (i < 0)
      break;
    --c[static_cast<std::size_t>(i)];
    int tail = c[static_cast<std::size_t>(dim - 1)] + 1;
    c[static_cast<std::size_t>(dim - 1)] = 0;
    c[static_cast<std::size_t>(i + 1)] = tail;
  }
  return MonomialIdeal(dim, std::move(gens));
}

bool MonomialIdeal::is_unit() const {
  return gens_.size() == 1 && gens_[0].total_degree() == 0;
}

bool MonomialIdeal::contains(const ExponentVector& alpha) const {
  check_same_dim(dim_, alpha.dim(), "contains");
  for (const auto& g : gens_) {
    if (g.total_degree() > alpha.total_degree())
      return false; // canonical order: nothing later can divide either
    if (g.divides(alpha))
      return true;
  }
  return false;
}

bool MonomialIdeal::contains(const MonomialIdeal& other) const {
  check_same_dim(dim_, other.dim_, "contains");
  for (const auto& g : other.gens_)
    if (!contains(g))
      return false;
  return true;
}

std::string MonomialIdeal::to_string() const {
  if (is_zero())
    return "(0)";
  std::string out = "(";
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    if (i)
      out += ", ";
    out += gens_[i].to_monomial_string();
  }
  return out + ")";
}

MonomialIdeal sum(const MonomialIdeal& J, const MonomialIdeal& K) {
  check_same_dim(J.dim(), K.dim(), "sum");
  std::vector<ExponentVector> gens = J.generators();
  gens.insert(gens.end(), K.generators().begin(), K.generators().end());
  return MonomialIdeal(J.dim(), std::move(gens));
}

MonomialIdeal product(const MonomialIdeal& J, const MonomialIdeal& K) {
  check_same_dim(J.dim(), K.dim(), "product");
  std::vector<ExponentVector> gens;
  gens.reserve(J.generators().size() * K.generators().size());
  for (const auto& g : J.generators())
    for (const auto& h : K.generators())
      gens.push_back(g + h);
  return MonomialIdeal(J.dim(), std::move(gens));
}

MonomialIdeal power(const MonomialIdeal& J, int n) {
  if (n < 0)
    throw std::invalid_argument("power: exponent must be >= 0");
  MonomialIdeal acc = MonomialIdeal::unit(J.dim());
  for (int i = 0; i < n; ++i)
    acc = product(acc, J);
  return acc;
}

MonomialIdeal intersect(const MonomialIdeal& J, const MonomialIdeal& K) {
  check_same_dim(J.dim(), K.dim(), "intersect");
  std::vector<ExponentVector> gens;
  gens.reserve(J.generators().size() * K.generators().size());
  for (const auto& g : J.generators())
    for (const auto& h : K.generators())
      gens.push_back(ExponentVector::join(g, h));
  return MonomialIdeal(J.dim(), std::move(gens));
}

MonomialIdeal colon(const MonomialIdeal& J, const MonomialIdeal& K) {
  check_same_dim(J.dim(), K.dim(), "colon");
  if (K.is_zero())
    throw std::invalid_argument("colon: divisor ideal must not be zero");
  auto colon_by_monomial = [&](const ExponentVector& k) {
    std::vector<ExponentVector> gens;
    gens.reserve(J.generators().size());
    for (const auto& g : J.generators())
      gens.push_back(g.saturating_sub(k));
    return MonomialIdeal(J.dim(), std::move(gens));
  };
  MonomialIdeal acc = colon_by_monomial(K.generators().front());
  for (std::size_t i = 1; i < K.generators().size(); ++i)
    acc = intersect(acc, colon_by_monomial(K.generators()[i]));
  return acc;
}

} // namespace qsocle
