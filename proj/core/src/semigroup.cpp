#include "qsocle/semigroup.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

#include "qsocle/errors.hpp"

namespace qsocle {

std::vector<int> semigroup_members(int a, int b, int bound) {
  if (a < 2 || b <= a || std::gcd(a, b) != 1)
    throw std::invalid_argument("semigroup_members: need 1 < a < b coprime");
  if (bound < 0)
    throw std::invalid_argument("semigroup_members: bound must be >= 0");
  std::vector<char> in_s(static_cast<std::size_t>(bound) + 1, 0);
  in_s[0] = 1;
  for (int s = 1; s <= bound; ++s)
    in_s[static_cast<std::size_t>(s)] =
        (s >= a && in_s[static_cast<std::size_t>(s - a)]) ||
        (s >= b && in_s[static_cast<std::size_t>(s - b)]);
  std::vector<int> out;
  for (int s = 0; s <= bound; ++s)
    if (in_s[static_cast<std::size_t>(s)])
      out.push_back(s);
  return out;
}

void SemigroupSpec::validate() const {
  if (a < 2 || b <= a)
    throw std::invalid_argument("SemigroupSpec: need 1 < a < b");
  if (std::gcd(a, b) != 1)
    throw std::invalid_argument("SemigroupSpec: a and b must be coprime");
  if (n < 1)
    throw std::invalid_argument("SemigroupSpec: n must be >= 1");
  if (q < 1)
    throw std::invalid_argument("SemigroupSpec: q must be >= 1");
}

SemigroupRing::SemigroupRing(int a, int b, int bound) : a_(a), b_(b), bound_(bound) {
  if (a < 2 || b <= a || std::gcd(a, b) != 1)
    throw std::invalid_argument("SemigroupRing: need 1 < a < b coprime");
  if (bound < a * b)
    throw std::invalid_argument("SemigroupRing: bound must cover at least one conductor span");
  order_.assign(static_cast<std::size_t>(bound) + 1, -1);
  order_[0] = 0;
  // order(s) = max representations count; one step back along either
  // generator and take the better one.
  for (int s = 1; s <= bound; ++s) {
    int best = -1;
    if (s >= a_ && order_[static_cast<std::size_t>(s - a_)] >= 0)
      best = order_[static_cast<std::size_t>(s - a_)] + 1;
    if (s >= b_ && order_[static_cast<std::size_t>(s - b_)] >= 0)
      best = std::max(best, order_[static_cast<std::size_t>(s - b_)] + 1);
    order_[static_cast<std::size_t>(s)] = best;
  }
}

bool SemigroupRing::in_semigroup(int s) const { return order(s) >= 0; }

int SemigroupRing::order(int s) const {
  if (s < 0)
    return -1;
  if (s > bound_)
    throw BoundViolation("SemigroupRing::order: degree " + std::to_string(s) +
                         " beyond the truncation bound " + std::to_string(bound_));
  return order_[static_cast<std::size_t>(s)];
}

namespace {

void check_same_ring(const SemigroupIdeal& e, const SemigroupIdeal& f, const char* op) {
  if (!(e.ring() == f.ring()))
    throw std::invalid_argument(std::string(op) + ": ring context mismatch");
}

} // namespace

SemigroupIdeal::SemigroupIdeal(std::shared_ptr<const SemigroupRing> ring)
    : ring_(std::move(ring)), member_(static_cast<std::size_t>(ring_->bound()) + 1, 0) {}

SemigroupIdeal SemigroupIdeal::zero(std::shared_ptr<const SemigroupRing> ring) {
  return SemigroupIdeal(std::move(ring));
}

SemigroupIdeal SemigroupIdeal::unit(std::shared_ptr<const SemigroupRing> ring) {
  SemigroupIdeal e(std::move(ring));
  for (int s = 0; s <= e.ring_->bound(); ++s)
    e.member_[static_cast<std::size_t>(s)] = e.ring_->in_semigroup(s);
  return e;
}

SemigroupIdeal SemigroupIdeal::from_generators(std::shared_ptr<const SemigroupRing> ring,
                                               const std::vector<int>& gens) {
  SemigroupIdeal e(std::move(ring));
  const int bound = e.ring_->bound();
  for (int g : gens) {
    if (g < 0 || !e.ring_->in_semigroup(g))
      throw std::invalid_argument("SemigroupIdeal: generator not in the semigroup");
    for (int s = g; s <= bound; ++s)
      if (e.ring_->in_semigroup(s - g))
        e.member_[static_cast<std::size_t>(s)] = 1;
  }
  return e;
}

SemigroupIdeal SemigroupIdeal::order_at_least(std::shared_ptr<const SemigroupRing> ring, int k) {
  SemigroupIdeal e(std::move(ring));
  for (int s = 0; s <= e.ring_->bound(); ++s)
    e.member_[static_cast<std::size_t>(s)] = e.ring_->order(s) >= std::max(k, 0);
  return e;
}

SemigroupIdeal SemigroupIdeal::degree_at_least(std::shared_ptr<const SemigroupRing> ring, int c) {
  SemigroupIdeal e(std::move(ring));
  for (int s = std::max(c, 0); s <= e.ring_->bound(); ++s)
    e.member_[static_cast<std::size_t>(s)] = e.ring_->in_semigroup(s);
  return e;
}

bool SemigroupIdeal::is_zero() const {
  return std::find(member_.begin(), member_.end(), 1) == member_.end();
}

bool SemigroupIdeal::contains(int s) const {
  if (s < 0)
    return false;
  if (s > ring_->bound())
    throw BoundViolation("SemigroupIdeal::contains: beyond the truncation bound");
  return member_[static_cast<std::size_t>(s)];
}

bool SemigroupIdeal::subset_of(const SemigroupIdeal& other) const {
  check_same_ring(*this, other, "subset_of");
  for (std::size_t s = 0; s < member_.size(); ++s)
    if (member_[s] && !other.member_[s])
      return false;
  return true;
}

std::optional<int> SemigroupIdeal::min_element() const {
  auto it = std::find(member_.begin(), member_.end(), 1);
  if (it == member_.end())
    return std::nullopt;
  return static_cast<int>(it - member_.begin());
}

std::vector<int> SemigroupIdeal::generators() const {
  const auto g0 = min_element();
  if (!g0)
    return {};
  // Every true minimal generator is below g0 + conductor + a, so the bound
  // certifies the list complete as soon as it reaches g0 + a*b.
  if (*g0 + ring_->a() * ring_->b() > ring_->bound())
    throw BoundViolation("SemigroupIdeal::generators: bound too small to certify generators");
  std::vector<int> out;
  for (int s = *g0; s <= ring_->bound(); ++s) {
    if (!member_[static_cast<std::size_t>(s)])
      continue;
    const bool from_a = s - ring_->a() >= 0 && member_[static_cast<std::size_t>(s - ring_->a())];
    const bool from_b = s - ring_->b() >= 0 && member_[static_cast<std::size_t>(s - ring_->b())];
    if (!from_a && !from_b)
      out.push_back(s);
  }
  return out;
}

std::vector<int> SemigroupIdeal::members() const {
  std::vector<int> out;
  for (std::size_t s = 0; s < member_.size(); ++s)
    if (member_[s])
      out.push_back(static_cast<int>(s));
  return out;
}

bool SemigroupIdeal::operator==(const SemigroupIdeal& o) const {
  return ring() == o.ring() && member_ == o.member_;
}

SemigroupIdeal sum(const SemigroupIdeal& E, const SemigroupIdeal& F) {
  check_same_ring(E, F, "sum");
  SemigroupIdeal out = E;
  for (std::size_t s = 0; s < out.member_.size(); ++s)
    out.member_[s] = out.member_[s] || F.member_[s];
  return out;
}

SemigroupIdeal intersect(const SemigroupIdeal& E, const SemigroupIdeal& F) {
  check_same_ring(E, F, "intersect");
  SemigroupIdeal out = E;
  for (std::size_t s = 0; s < out.member_.size(); ++s)
    out.member_[s] = out.member_[s] && F.member_[s];
  return out;
}

SemigroupIdeal product(const SemigroupIdeal& E, const SemigroupIdeal& F) {
  check_same_ring(E, F, "product");
  // Members of E*F are exactly e + f with e a member and f a generator of F;
  // generators() certifies its own completeness against the bound.
  const std::vector<int> fgens = F.generators();
  SemigroupIdeal out = SemigroupIdeal::zero(E.ring_ptr());
  const int bound = E.ring().bound();
  for (int e = 0; e <= bound; ++e) {
    if (!E.member_[static_cast<std::size_t>(e)])
      continue;
    for (int f : fgens)
      if (e + f <= bound)
        out.member_[static_cast<std::size_t>(e + f)] = 1;
  }
  return out;
}

SemigroupIdeal power(const SemigroupIdeal& E, int k) {
  if (k < 0)
    throw std::invalid_argument("power: exponent must be >= 0");
  SemigroupIdeal acc = SemigroupIdeal::unit(E.ring_ptr());
  for (int i = 0; i < k; ++i)
    acc = product(acc, E);
  return acc;
}

SemigroupIdeal colon(const SemigroupIdeal& E, const SemigroupIdeal& F) {
  check_same_ring(E, F, "colon");
  if (F.is_zero())
    throw std::invalid_argument("colon: divisor ideal must not be zero");
  if (E.is_zero())
    return E;
  const std::vector<int> fgens = F.generators();
  const int fmax = *std::max_element(fgens.begin(), fgens.end());
  const int bound = E.ring().bound();
  const int ab = E.ring().a() * E.ring().b();
  // Above min(E) + conductor everything lies in E, hence in E : F; the
  // direct test below the threshold therefore decides the whole bitmap.
  const int threshold = bound - fmax;
  if (threshold < *E.min_element() + ab)
    throw BoundViolation("colon: bound too small to certify the colon ideal");
  SemigroupIdeal out = SemigroupIdeal::zero(E.ring_ptr());
  for (int s = 0; s <= bound; ++s) {
    if (!E.ring().in_semigroup(s))
      continue;
    if (s > threshold) {
      out.member_[static_cast<std::size_t>(s)] = 1; // s >= min(E) + conductor
      continue;
    }
    bool all_in = true;
    for (int f : fgens)
      if (!E.member_[static_cast<std::size_t>(s + f)]) {
        all_in = false;
        break;
      }
    out.member_[static_cast<std::size_t>(s)] = all_in;
  }
  return out;
}

Prediction predict(const SemigroupSpec& spec) {
  spec.validate();
  Prediction pred;
  pred.rho = spec.a + spec.n - 2;
  pred.ell = pred.rho + 1 - spec.q;
  pred.improper = pred.ell <= 0;
  pred.integral = spec.q < spec.a; // equivalent to ell >= n
  if (pred.integral) {
    const int r = (spec.q + pred.ell - 1) / pred.ell;
    pred.reduction_number = r;
    pred.g_a_invariant = r - 1;
    pred.g_gorenstein = spec.q % pred.ell == 0;
    // rees_cm / rees_gorenstein stay empty: dimension one
  }
  return pred;
}

SemigroupCase::SemigroupCase(SemigroupSpec spec, std::optional<int> reduction_n_max)
    : spec_(spec), n_max_override_(reduction_n_max) {
  spec_.validate();
  const Prediction pred = predict(spec_);
  const int r_guess = pred.integral ? *pred.reduction_number + 3 : 10;
  const int deepest = std::max({r_guess, n_max_override_.value_or(0), spec_.a + spec_.n}) + 1;
  // Deepest power of I probed is I^{deepest}; its generators live below
  // deepest * a * n + conductor, and the colon / order tables need another
  // few b-multiples of slack.
  const int bound = (deepest + 1) * spec_.a * spec_.n +
                    (spec_.q + spec_.a + spec_.n + 2) * spec_.b + 3 * spec_.a * spec_.b;
  ring_ = std::make_shared<const SemigroupRing>(spec_.a, spec_.b, bound);
}

SemigroupIdeal SemigroupCase::parameter_ideal() const {
  return SemigroupIdeal::from_generators(ring_, {spec_.a * spec_.n});
}

SemigroupIdeal SemigroupCase::max_ideal_power(int k) const {
  return SemigroupIdeal::order_at_least(ring_, k);
}

SemigroupIdeal SemigroupCase::quasi_socle() const {
  return colon(parameter_ideal(), max_ideal_power(spec_.q));
}

SemigroupIdeal SemigroupCase::closure_of_parameter_ideal() const {
  return SemigroupIdeal::degree_at_least(ring_, spec_.a * spec_.n);
}

bool SemigroupCase::in_parameter_ideal(int s) const {
  const int c = spec_.a * spec_.n;
  if (s < c)
    return false;
  if (s > ring_->bound())
    throw BoundViolation("SemigroupCase: quotient lookup beyond the truncation bound");
  return ring_->in_semigroup(s - c);
}

std::vector<int> SemigroupCase::quotient_image(const SemigroupIdeal& E) const {
  // Classes of E in A/Q: members of E outside Q.  All of them sit below
  // a*n + frobenius, well inside the bound.
  std::vector<int> out;
  const int top = spec_.a * spec_.n + ring_->frobenius();
  for (int s = 0; s <= top; ++s)
    if (E.contains(s) && !in_parameter_ideal(s))
      out.push_back(s);
  return out;
}

std::vector<int> SemigroupCase::quotient_annihilator(const SemigroupIdeal& E) const {
  // s kills the class of E iff s + g lands in Q for every generator g.
  const std::vector<int> gens = E.generators();
  std::vector<int> out;
  const int top = spec_.a * spec_.n + ring_->frobenius();
  for (int s = 0; s <= top; ++s) {
    if (!ring_->in_semigroup(s) || in_parameter_ideal(s))
      continue;
    bool kills = true;
    for (int g : gens)
      if (!in_parameter_ideal(s + g)) {
        kills = false;
        break;
      }
    if (kills)
      out.push_back(s);
  }
  return out;
}

int SemigroupCase::quotient_nilpotency_index() const {
  const SemigroupIdeal I = quasi_socle();
  int n = 0;
  SemigroupIdeal cur = SemigroupIdeal::unit(ring_);
  for (;;) {
    cur = product(cur, I);
    if (quotient_image(cur).empty())
      return n;
    ++n;
  }
}

bool SemigroupCase::gorenstein_duality() const {
  const Prediction pred = predict(spec_);
  if (!pred.integral)
    throw std::domain_error("gorenstein_duality: requires an integral case");
  const SemigroupIdeal I = quasi_socle();
  const int r = quotient_nilpotency_index();
  std::vector<SemigroupIdeal> powers;
  powers.reserve(static_cast<std::size_t>(r) + 2);
  powers.push_back(SemigroupIdeal::unit(ring_));
  for (int i = 1; i <= r + 1; ++i)
    powers.push_back(product(powers.back(), I));
  for (int i = 0; i <= r + 1; ++i)
    if (quotient_annihilator(powers[static_cast<std::size_t>(i)]) !=
        quotient_image(powers[static_cast<std::size_t>(r + 1 - i)]))
      return false;
  return true;
}

CaseReport SemigroupCase::analyze() const {
  CaseReport report;
  report.model = "semigroup";
  report.case_tuple = "a=" + std::to_string(spec_.a) + " b=" + std::to_string(spec_.b) +
                      " n=" + std::to_string(spec_.n) + " q=" + std::to_string(spec_.q);
  report.prediction = predict(spec_);
  const Prediction& pred = report.prediction;
  report.oracles_run = true;

  const SemigroupIdeal Q = parameter_ideal();
  const SemigroupIdeal I = quasi_socle();
  for (int g : I.generators())
    report.ideal_generators.push_back("t^" + std::to_string(g));

  report.integral_oracle = I.subset_of(closure_of_parameter_ideal());
  report.add_check("integral", render(pred.integral), render(report.integral_oracle));

  const SemigroupIdeal decomposition =
      pred.ell <= 0 ? SemigroupIdeal::unit(ring_) : sum(Q, max_ideal_power(pred.ell));
  report.add_check("colon_decomposition", render(true), render(I == decomposition));

  const int n_max =
      n_max_override_.value_or(pred.integral ? *pred.reduction_number + 3 : 10);
  report.r_oracle_ran = true;
  report.r_oracle = std::nullopt;
  {
    SemigroupIdeal ipow = SemigroupIdeal::unit(ring_); // I^n
    for (int n = 0; n <= n_max; ++n) {
      const SemigroupIdeal next = product(ipow, I);
      if (next == product(Q, ipow)) {
        report.r_oracle = n;
        break;
      }
      ipow = next;
    }
  }
  report.add_check("reduction_number", render(pred.reduction_number), render(report.r_oracle));

  if (pred.integral) {
    report.g_gorenstein_oracle = gorenstein_duality();
    report.add_check("gorenstein_duality", render(pred.g_gorenstein),
                     render(report.g_gorenstein_oracle));
    report.add_check("nilpotency_index", render(pred.reduction_number),
                     render(std::optional<int>(quotient_nilpotency_index())));
  }

  report.status = !report.agreement  ? CaseStatus::Disagree
                  : pred.improper    ? CaseStatus::Improper
                                     : CaseStatus::Agree;
  return report;
}

CaseReport analyze(const SemigroupSpec& spec, const AnalyzeOptions& options) {
  return SemigroupCase(spec, options.reduction_n_max).analyze();
}

} // namespace qsocle
