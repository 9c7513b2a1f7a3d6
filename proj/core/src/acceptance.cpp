#include "qsocle/acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <random>
#include <sstream>
#include <thread>

#include "qsocle/box.hpp"
#include "qsocle/closure.hpp"
#include "qsocle/harness.hpp"
#include "qsocle/quasisocle.hpp"

namespace qsocle {

namespace {

int resolve_workers(int workers) {
  if (workers >= 1) return workers;
  unsigned hc = std::thread::hardware_concurrency();
  if (hc == 0) return 1;
  return static_cast<int>(std::min(hc, 8u));
}

/// Lexicographic odometer over [lo, hi]^d; returns false after the last tuple.
bool next_tuple(std::vector<int>& v, int lo, int hi) {
  for (std::size_t i = v.size(); i-- > 0;) {
    if (v[i] < hi) {
      ++v[i];
      for (std::size_t j = i + 1; j < v.size(); ++j) v[j] = lo;
      return true;
    }
  }
  return false;
}

template <typename Body>
CriterionResult timed_criterion(int index, std::string name, double budget_s, Body&& body) {
  CriterionResult res;
  res.index = index;
  res.name = std::move(name);
  res.budget_seconds = budget_s;
  auto t0 = std::chrono::steady_clock::now();
  try {
    res.passed = body(res.detail);
  } catch (const std::exception& e) {
    res.passed = false;
    res.detail = std::string("exception: ") + e.what();
  }
  res.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (res.seconds > res.budget_seconds) {
    res.passed = false;
    res.detail += res.detail.empty() ? "over time budget" : "; over time budget";
  }
  return res;
}

std::string sweep_detail(const RunReport& run) {
  std::ostringstream out;
  out << "cases=" << run.total() << " agreed=" << run.agreed
      << " disagreed=" << run.disagreed << " improper=" << run.improper
      << " skipped=" << run.skipped;
  return out.str();
}

bool check_colon_is_maximal_ideal(std::string& detail) {
  CaseSpec spec = CaseSpec::regular({2, 2, 2}, 3);
  CaseReport rep = analyze(spec);
  MonomialIdeal I = quasi_socle_ideal(spec);
  bool ideal_exact = I == MonomialIdeal::maximal_power(3, 1);
  bool pred_non_integral = !rep.prediction.integral;
  bool oracle_non_integral = rep.integral_oracle.has_value() && !*rep.integral_oracle;
  detail = "I=" + I.to_string() +
           " predictor_integral=" + render(rep.prediction.integral) +
           " oracle_integral=" + render(rep.integral_oracle);
  return ideal_exact && pred_non_integral && oracle_non_integral && rep.agreement;
}

bool check_deep_box_invariants(std::string& detail) {
  CaseSpec spec = CaseSpec::regular({4, 4, 4, 4, 4}, 8);
  CaseReport rep = analyze(spec);
  std::ostringstream out;
  out << "rho=" << rep.prediction.rho << " ell=" << rep.prediction.ell
      << " r_pred=" << render(rep.prediction.reduction_number)
      << " r_oracle=" << render(rep.r_oracle)
      << " duality=" << render(rep.g_gorenstein_oracle)
      << " rees_gorenstein=" << render(rep.prediction.rees_gorenstein)
      << " rees_cm=" << render(rep.prediction.rees_cm);
  detail = out.str();
  return rep.prediction.rho == 15 && rep.prediction.ell == 8 &&
         rep.prediction.reduction_number == 1 && rep.r_oracle_ran &&
         rep.r_oracle == 1 && rep.g_gorenstein_oracle == true &&
         rep.prediction.rees_gorenstein == false &&
         rep.prediction.rees_cm == true && rep.agreement;
}

bool check_rees_gorenstein_case(std::string& detail) {
  CaseSpec spec = CaseSpec::regular({2, 2, 2}, 2);
  CaseReport rep = analyze(spec);
  std::ostringstream out;
  out << "rees_gorenstein=" << render(rep.prediction.rees_gorenstein)
      << " r_oracle=" << render(rep.r_oracle)
      << " duality=" << render(rep.g_gorenstein_oracle);
  detail = out.str();
  return rep.prediction.rees_gorenstein == true && rep.r_oracle_ran &&
         rep.r_oracle == 1 && rep.g_gorenstein_oracle == true && rep.agreement;
}

bool check_regular_sweep(std::string& detail, int workers) {
  SweepSpec sweep;
  sweep.model = Model::Regular;
  sweep.dims = {2, 3};
  sweep.a_min = 1;
  sweep.a_max = 4;
  RunReport run = run_sweep(sweep, workers);
  detail = sweep_detail(run);
  return run.pass() && run.skipped == 0 && run.total() == 336;
}

bool check_closure_equality_sweep(std::string& detail) {
  int cases = 0;
  int mismatches = 0;
  for (int d : {2, 3}) {
    std::vector<int> a(d, 2);
    do {
      int max_a = *std::max_element(a.begin(), a.end());
      int sum_a = 0;
      for (int ai : a) sum_a += ai;
      // ell = sum(a) - d + 1 - q stays >= max(a) up to this q.
      int q_top = sum_a - d + 1 - max_a;
      MonomialIdeal closed = diagonal_closure(a);
      for (int q = 1; q <= q_top; ++q) {
        bool predicted = closure_equality_criterion(a, q);
        bool actual = quasi_socle_ideal(CaseSpec::regular(a, q)) == closed;
        ++cases;
        if (predicted != actual) ++mismatches;
      }
    } while (next_tuple(a, 2, 5));
  }
  std::ostringstream out;
  out << "cases=" << cases << " mismatches=" << mismatches;
  detail = out.str();
  return cases > 0 && mismatches == 0;
}

bool check_closed_powers_family(std::string& detail) {
  int cases = 0;
  int failures = 0;
  for (int d : {2, 3})
    for (int n = 2; n <= 4; ++n)
      for (int m = 1; m <= 3; ++m) {
        ++cases;
        if (!powers_integrally_closed(d, n, m)) ++failures;
      }
  std::ostringstream out;
  out << "cases=" << cases << " failures=" << failures;
  detail = out.str();
  return failures == 0;
}

bool check_semigroup_sweep(std::string& detail, int workers) {
  SweepSpec sweep;
  sweep.model = Model::Semigroup;
  sweep.sg_a_min = 2;
  sweep.sg_b_max = 13;
  sweep.n_min = 1;
  sweep.n_max = 4;
  RunReport run = run_sweep(sweep, workers);
  detail = sweep_detail(run);
  return run.pass() && run.skipped == 0 && run.total() == 1102;
}

bool check_box_duality_involution(std::string& detail) {
  int power_checks = 0;
  int involution_checks = 0;
  int failures = 0;

  for (int d : {2, 3}) {
    std::vector<int> sides(d, 1);
    do {
      BoxSpec spec(sides);
      int rho = spec.top_degree();
      for (int i = 0; i <= rho + 1; ++i) {
        ++power_checks;
        BoxIdeal lhs = annihilator(BoxIdeal::max_ideal_power(spec, i));
        BoxIdeal rhs = BoxIdeal::max_ideal_power(spec, rho + 1 - i);
        if (!(lhs == rhs)) ++failures;
      }
    } while (next_tuple(sides, 1, 4));
  }

  std::mt19937 rng(1257);
  std::uniform_int_distribution<int> dim_dist(2, 3);
  std::uniform_int_distribution<int> side_dist(1, 5);
  std::uniform_int_distribution<int> seed_count_dist(0, 4);
  for (int k = 0; k < 100; ++k) {
    int d = dim_dist(rng);
    std::vector<int> sides(d);
    for (int& s : sides) s = side_dist(rng);
    BoxSpec spec(sides);
    std::vector<ExponentVector> seeds;
    int seed_count = seed_count_dist(rng);
    for (int s = 0; s < seed_count; ++s) {
      std::vector<int> p(d);
      for (int i = 0; i < d; ++i)
        p[i] = std::uniform_int_distribution<int>(0, sides[i] - 1)(rng);
      seeds.emplace_back(p);
    }
    BoxIdeal E = BoxIdeal::upward_closure(spec, seeds);
    ++involution_checks;
    if (!(annihilator(annihilator(E)) == E)) ++failures;
  }

  std::ostringstream out;
  out << "power_checks=" << power_checks
      << " involution_checks=" << involution_checks << " failures=" << failures;
  detail = out.str();
  return failures == 0;
}

bool check_predictor_family(std::string& detail) {
  int failures = 0;
  for (int n = 2; n <= 6; ++n) {
    CaseSpec spec;
    spec.a = {2, n};
    spec.q = n;
    spec.gm_a_invariant = n - 3;
    CaseReport rep = analyze_predictor_only(spec);
    bool ok = rep.prediction.rho == 2 * n - 1 && rep.prediction.ell == n &&
              rep.prediction.integral && rep.prediction.reduction_number == 1 &&
              rep.prediction.g_gorenstein == true && rep.agreement;
    if (!ok) ++failures;
  }
  std::ostringstream out;
  out << "family n=2..6 failures=" << failures;
  detail = out.str();
  return failures == 0;
}

} // namespace

std::vector<CriterionResult> run_acceptance(int workers) {
  int pool = resolve_workers(workers);
  std::vector<CriterionResult> results;
  results.push_back(timed_criterion(1, "colon-equals-maximal-ideal", 1.0,
                                    check_colon_is_maximal_ideal));
  results.push_back(timed_criterion(2, "deep-box-invariants", 30.0,
                                    check_deep_box_invariants));
  results.push_back(timed_criterion(3, "rees-gorenstein-case", 1.0,
                                    check_rees_gorenstein_case));
  results.push_back(timed_criterion(4, "regular-sweep-agreement", 300.0,
                                    [pool](std::string& d) { return check_regular_sweep(d, pool); }));
  results.push_back(timed_criterion(5, "closure-equality-criterion-sweep", 120.0,
                                    check_closure_equality_sweep));
  results.push_back(timed_criterion(6, "closed-powers-family", 120.0,
                                    check_closed_powers_family));
  results.push_back(timed_criterion(7, "semigroup-sweep-agreement", 120.0,
                                    [pool](std::string& d) { return check_semigroup_sweep(d, pool); }));
  results.push_back(timed_criterion(8, "box-duality-involution", 60.0,
                                    check_box_duality_involution));
  results.push_back(timed_criterion(9, "predictor-family", 1.0,
                                    check_predictor_family));
  return results;
}

std::string format_criterion_line(const CriterionResult& result) {
  std::ostringstream out;
  out << (result.passed ? "[PASS]" : "[FAIL]") << " " << result.index << " "
      << result.name << " (";
  out.setf(std::ios::fixed);
  out.precision(2);
  out << result.seconds << " s / ";
  out.unsetf(std::ios::fixed);
  out.precision(6);
  out << result.budget_seconds << " s)";
  if (!result.detail.empty()) out << " " << result.detail;
  return out.str();
}

} // namespace qsocle
