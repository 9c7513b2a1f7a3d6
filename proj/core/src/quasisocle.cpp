#include "qsocle/quasisocle.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "qsocle/closure.hpp"

namespace qsocle {

namespace {

int ceil_div(int num, int den) { return (num + den - 1) / den; }

int max_exponent(const std::vector<int>& a) {
  return *std::max_element(a.begin(), a.end());
}

std::string tuple_of(const CaseSpec& spec) {
  std::string out = "d=" + std::to_string(spec.dim()) + " a=(";
  for (std::size_t i = 0; i < spec.a.size(); ++i) {
    if (i)
      out += ",";
    out += std::to_string(spec.a[i]);
  }
  out += ") q=" + std::to_string(spec.q);
  if (!spec.is_regular_model())
    out += " gmA=" + std::to_string(spec.gm_a_invariant);
  return out;
}

MonomialIdeal diagonal_of(const CaseSpec& spec) { return MonomialIdeal::diagonal(spec.a); }

// I = Q + m^max(ell,0), the decomposition the duality predicts; with
// ell <= 0 the right-hand side is the unit ideal.
MonomialIdeal predicted_decomposition(const CaseSpec& spec, int ell) {
  const MonomialIdeal mpow = ell <= 0 ? MonomialIdeal::unit(spec.dim())
                                      : MonomialIdeal::maximal_power(spec.dim(), ell);
  return sum(diagonal_of(spec), mpow);
}

void require_integral(const Prediction& pred, const char* op) {
  if (!pred.integral)
    throw std::domain_error(std::string(op) + ": requires an integral case (ell >= a_i)");
}

void require_regular(const CaseSpec& spec, const char* op) {
  if (!spec.is_regular_model())
    throw std::domain_error(std::string(op) + ": requires the regular model (gm_a_invariant = -d)");
}

bool vv_inner(const MonomialIdeal& Q, const MonomialIdeal& I, int n_hi) {
  MonomialIdeal ipow = MonomialIdeal::unit(Q.dim());
  for (int n = 1; n <= n_hi; ++n) {
    const MonomialIdeal rhs = product(Q, ipow); // Q * I^{n-1}
    ipow = product(ipow, I);
    if (!(intersect(Q, ipow) == rhs))
      return false;
  }
  return true;
}

bool fiber_inner(const MonomialIdeal& Q, const MonomialIdeal& I, int n_hi) {
  const MonomialIdeal m1 = MonomialIdeal::maximal_power(Q.dim(), 1);
  MonomialIdeal ipow = MonomialIdeal::unit(Q.dim());
  for (int n = 1; n <= n_hi; ++n) {
    const MonomialIdeal rhs = product(m1, product(Q, ipow)); // m * Q * I^{n-1}
    ipow = product(ipow, I);
    if (!(intersect(Q, product(m1, ipow)) == rhs))
      return false;
  }
  return true;
}

bool containment_inner(const MonomialIdeal& Q, const MonomialIdeal& I, int ell, int n_hi,
                       int m_hi) {
  const int d = Q.dim();
  MonomialIdeal ipow = MonomialIdeal::unit(d); // I^{n-1}
  for (int n = 1; n <= n_hi; ++n) {
    const MonomialIdeal qipow = product(Q, ipow);
    for (int mm = 0; mm <= m_hi; ++mm) {
      const MonomialIdeal lhs = intersect(Q, MonomialIdeal::maximal_power(d, n * ell + mm));
      const MonomialIdeal rhs =
          mm == 0 ? qipow : product(MonomialIdeal::maximal_power(d, mm), qipow);
      if (!rhs.contains(lhs))
        return false;
    }
    ipow = product(ipow, I);
  }
  return true;
}

} // namespace

CaseSpec CaseSpec::regular(std::vector<int> a, int q) {
  CaseSpec spec;
  spec.gm_a_invariant = -static_cast<int>(a.size());
  spec.a = std::move(a);
  spec.q = q;
  spec.validate();
  return spec;
}

void CaseSpec::validate() const {
  if (a.empty())
    throw std::invalid_argument("CaseSpec: dimension must be >= 1");
  for (int ai : a)
    if (ai < 1)
      throw std::invalid_argument("CaseSpec: every exponent must be >= 1");
  if (q < 1)
    throw std::invalid_argument("CaseSpec: q must be >= 1");
}

Prediction predict(const CaseSpec& spec) {
  spec.validate();
  Prediction pred;
  pred.rho = spec.gm_a_invariant;
  for (int ai : spec.a)
    pred.rho += ai;
  pred.ell = pred.rho + 1 - spec.q;
  pred.improper = pred.ell <= 0;
  pred.integral = !pred.improper && pred.ell >= max_exponent(spec.a);
  if (pred.integral) {
    const int d = spec.dim();
    const int r = ceil_div(spec.q, pred.ell);
    pred.reduction_number = r;
    pred.g_a_invariant = r - d;
    pred.rees_cm = r < d;
    pred.g_gorenstein = spec.q % pred.ell == 0;
    pred.rees_gorenstein = spec.q == (d - 2) * pred.ell;
  }
  return pred;
}

MonomialIdeal quasi_socle_ideal(const CaseSpec& spec) {
  spec.validate();
  require_regular(spec, "quasi_socle_ideal");
  const MonomialIdeal m1 = MonomialIdeal::maximal_power(spec.dim(), 1);
  MonomialIdeal I = diagonal_of(spec);
  for (int k = 0; k < spec.q; ++k)
    I = colon(I, m1); // Q : m^q peeled one socle layer at a time
  return I;
}

std::optional<int> reduction_number_oracle(const MonomialIdeal& Q, const MonomialIdeal& I,
                                           int n_max) {
  if (n_max < 0)
    throw std::invalid_argument("reduction_number_oracle: n_max must be >= 0");
  MonomialIdeal ipow = MonomialIdeal::unit(I.dim()); // I^n
  for (int n = 0; n <= n_max; ++n) {
    const MonomialIdeal next = product(ipow, I); // I^{n+1}
    if (next == product(Q, ipow))
      return n;
    ipow = next;
  }
  return std::nullopt;
}

bool mq_product_check(const CaseSpec& spec) {
  spec.validate();
  require_regular(spec, "mq_product_check");
  const MonomialIdeal mq = MonomialIdeal::maximal_power(spec.dim(), spec.q);
  const MonomialIdeal I = quasi_socle_ideal(spec);
  return product(mq, I) == product(mq, diagonal_of(spec));
}

bool valabrega_valla_check(const CaseSpec& spec, std::optional<int> n_max) {
  const Prediction pred = predict(spec);
  require_regular(spec, "valabrega_valla_check");
  require_integral(pred, "valabrega_valla_check");
  return vv_inner(diagonal_of(spec), quasi_socle_ideal(spec),
                  n_max.value_or(*pred.reduction_number + 2));
}

bool fiber_cone_check(const CaseSpec& spec, std::optional<int> n_max) {
  const Prediction pred = predict(spec);
  require_regular(spec, "fiber_cone_check");
  require_integral(pred, "fiber_cone_check");
  return fiber_inner(diagonal_of(spec), quasi_socle_ideal(spec),
                     n_max.value_or(*pred.reduction_number + 2));
}

bool intersection_containment_check(const CaseSpec& spec, std::optional<int> n_max,
                                    std::optional<int> m_max) {
  const Prediction pred = predict(spec);
  require_regular(spec, "intersection_containment_check");
  require_integral(pred, "intersection_containment_check");
  return containment_inner(diagonal_of(spec), quasi_socle_ideal(spec), pred.ell,
                           n_max.value_or(*pred.reduction_number + 1), m_max.value_or(2));
}

bool gorenstein_oracle(const CaseSpec& spec, std::size_t box_cap) {
  const Prediction pred = predict(spec);
  require_regular(spec, "gorenstein_oracle");
  require_integral(pred, "gorenstein_oracle");
  const BoxSpec box(spec.a, box_cap);
  return gorenstein_duality_check(BoxIdeal::project(quasi_socle_ideal(spec), box));
}

CaseReport analyze(const CaseSpec& spec, const AnalyzeOptions& options) {
  spec.validate();
  require_regular(spec, "analyze");
  CaseReport report;
  report.model = "regular";
  report.case_tuple = tuple_of(spec);
  report.prediction = predict(spec);
  const Prediction& pred = report.prediction;
  report.oracles_run = true;

  const MonomialIdeal Q = diagonal_of(spec);
  const MonomialIdeal I = quasi_socle_ideal(spec);
  for (const auto& g : I.generators())
    report.ideal_generators.push_back(g.to_monomial_string());

  // Closure membership of every generator decides integrality of I over Q.
  bool closure_ok = true;
  for (const auto& g : I.generators())
    if (!diagonal_closure_contains(spec.a, g)) {
      closure_ok = false;
      break;
    }
  report.integral_oracle = closure_ok;
  report.add_check("integral", render(pred.integral), render(report.integral_oracle));

  // The colon must decompose as Q + m^ell (unit ideal once ell <= 0).
  report.add_check("colon_decomposition", render(true),
                   render(I == predicted_decomposition(spec, pred.ell)));

  const int n_max = options.reduction_n_max.value_or(
      pred.integral ? *pred.reduction_number + 3 : 10);
  report.r_oracle_ran = true;
  report.r_oracle = reduction_number_oracle(Q, I, n_max);
  report.add_check("reduction_number", render(pred.reduction_number), render(report.r_oracle));

  const MonomialIdeal mq = MonomialIdeal::maximal_power(spec.dim(), spec.q);
  const bool mq_equal = product(mq, I) == product(mq, Q);
  report.add_check("mq_product", render(pred.integral), render(mq_equal));

  if (pred.integral) {
    const int r = *pred.reduction_number;
    report.add_check("valabrega_valla", render(true), render(vv_inner(Q, I, r + 2)));
    report.add_check("fiber_cone", render(true), render(fiber_inner(Q, I, r + 2)));
    report.add_check("intersection_containment", render(true),
                     render(containment_inner(Q, I, pred.ell, r + 1, 2)));

    const BoxSpec box(spec.a, options.box_cap);
    const BoxIdeal image = BoxIdeal::project(I, box);
    report.g_gorenstein_oracle = gorenstein_duality_check(image);
    report.add_check("gorenstein_duality", render(pred.g_gorenstein),
                     render(report.g_gorenstein_oracle));
    report.add_check("nilpotency_index", render(pred.reduction_number),
                     render(std::optional<int>(nilpotency_index(image))));
  }

  report.status = !report.agreement  ? CaseStatus::Disagree
                  : pred.improper    ? CaseStatus::Improper
                                     : CaseStatus::Agree;
  return report;
}

CaseReport analyze_predictor_only(const CaseSpec& spec) {
  spec.validate();
  CaseReport report;
  report.model = "predictor-only";
  report.case_tuple = tuple_of(spec);
  report.prediction = predict(spec);
  report.oracles_run = false;
  report.status = report.prediction.improper ? CaseStatus::Improper : CaseStatus::Agree;
  return report;
}

} // namespace qsocle
