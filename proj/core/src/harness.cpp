#include "qsocle/harness.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <ctime>
#include <numeric>
#include <stdexcept>
#include <thread>

#include "qsocle/semigroup.hpp"
#include "qsocle/version.hpp"

namespace qsocle {

std::string to_string(Model model) {
  switch (model) {
  case Model::Regular:
    return "regular";
  case Model::Semigroup:
    return "semigroup";
  case Model::PredictorOnly:
    return "predictor-only";
  }
  return "regular";
}

Model model_from_string(const std::string& name) {
  if (name == "regular")
    return Model::Regular;
  if (name == "semigroup")
    return Model::Semigroup;
  if (name == "predictor-only")
    return Model::PredictorOnly;
  throw std::invalid_argument("unknown model '" + name +
                              "' (expected regular, semigroup or predictor-only)");
}

std::string CaseDescriptor::tuple() const {
  if (model == Model::Semigroup)
    return "a=" + std::to_string(sg_a) + " b=" + std::to_string(sg_b) +
           " n=" + std::to_string(sg_n) + " q=" + std::to_string(q);
  std::string out = "d=" + std::to_string(a.size()) + " a=(";
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (i)
      out += ",";
    out += std::to_string(a[i]);
  }
  out += ") q=" + std::to_string(q);
  if (model == Model::PredictorOnly && gm_a_invariant)
    out += " gmA=" + std::to_string(*gm_a_invariant);
  return out;
}

void SweepSpec::validate() const {
  if (model == Model::PredictorOnly && !gm_a_invariant)
    throw std::invalid_argument("SweepSpec: predictor-only sweeps need gm_a_invariant");
  if (q_min < 1)
    throw std::invalid_argument("SweepSpec: q_min must be >= 1");
  if (model == Model::Semigroup && sg_a_min < 2)
    throw std::invalid_argument("SweepSpec: sg_a_min must be >= 2");
}

CaseReport run_case(const CaseDescriptor& descriptor, const AnalyzeOptions& options) {
  try {
    switch (descriptor.model) {
    case Model::Regular: {
      const CaseSpec spec = CaseSpec::regular(descriptor.a, descriptor.q);
      return analyze(spec, options);
    }
    case Model::PredictorOnly: {
      if (!descriptor.gm_a_invariant)
        throw std::invalid_argument("predictor-only case needs gm_a_invariant");
      CaseSpec spec;
      spec.a = descriptor.a;
      spec.q = descriptor.q;
      spec.gm_a_invariant = *descriptor.gm_a_invariant;
      return analyze_predictor_only(spec);
    }
    case Model::Semigroup: {
      SemigroupSpec spec;
      spec.a = descriptor.sg_a;
      spec.b = descriptor.sg_b;
      spec.n = descriptor.sg_n;
      spec.q = descriptor.q;
      return analyze(spec, options);
    }
    }
    throw std::logic_error("run_case: unhandled model");
  } catch (const std::exception& e) {
    CaseReport report;
    report.model = to_string(descriptor.model);
    report.case_tuple = descriptor.tuple();
    report.status = CaseStatus::Skipped;
    report.error = e.what();
    return report;
  }
}

namespace {

// Appends every regular / predictor-only case of one dimension, exponent
// tuples in lexicographic order.
void enumerate_tuples(const SweepSpec& spec, int d, std::vector<CaseDescriptor>& out) {
  if (spec.a_min > spec.a_max || spec.a_min < 1)
    return;
  std::vector<int> a(static_cast<std::size_t>(d), spec.a_min);
  for (;;) {
    const int gm = spec.model == Model::PredictorOnly ? *spec.gm_a_invariant : -d;
    const int rho = std::accumulate(a.begin(), a.end(), gm);
    const int q_hi = spec.q_max.value_or(rho);
    for (int q = spec.q_min; q <= q_hi; ++q) {
      CaseDescriptor c;
      c.model = spec.model;
      c.a = a;
      c.q = q;
      if (spec.model == Model::PredictorOnly)
        c.gm_a_invariant = spec.gm_a_invariant;
      out.push_back(std::move(c));
    }
    int i = d - 1;
    while (i >= 0 && a[static_cast<std::size_t>(i)] == spec.a_max)
      a[static_cast<std::size_t>(i--)] = spec.a_min;
    if (i < 0)
      break;
    ++a[static_cast<std::size_t>(i)];
  }
}

std::string iso_utc_now() {
  const std::time_t now = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

} // namespace

std::vector<CaseDescriptor> enumerate_cases(const SweepSpec& spec) {
  spec.validate();
  std::vector<CaseDescriptor> out;
  if (spec.model == Model::Semigroup) {
    for (int a = spec.sg_a_min; a < spec.sg_b_max; ++a)
      for (int b = a + 1; b <= spec.sg_b_max; ++b) {
        if (std::gcd(a, b) != 1)
          continue;
        for (int n = spec.n_min; n <= spec.n_max; ++n) {
          const int rho = a + n - 2;
          const int q_hi = spec.q_max.value_or(rho);
          for (int q = spec.q_min; q <= q_hi; ++q) {
            CaseDescriptor c;
            c.model = Model::Semigroup;
            c.sg_a = a;
            c.sg_b = b;
            c.sg_n = n;
            c.q = q;
            out.push_back(c);
          }
        }
      }
    return out;
  }
  std::vector<int> dims = spec.dims;
  std::sort(dims.begin(), dims.end());
  dims.erase(std::unique(dims.begin(), dims.end()), dims.end());
  for (int d : dims) {
    if (d < 1)
      throw std::invalid_argument("SweepSpec: dimensions must be >= 1");
    enumerate_tuples(spec, d, out);
  }
  return out;
}

RunReport run_sweep(const SweepSpec& spec, int workers) {
  const std::vector<CaseDescriptor> cases = enumerate_cases(spec);
  RunReport report;
  report.tool = std::string(tool_name) + " " + std::string(version);
  report.generated_at = iso_utc_now();
  report.cases.resize(cases.size());

  AnalyzeOptions options;
  options.box_cap = spec.box_cap;
  options.reduction_n_max = spec.reduction_n_max;

  const auto start = std::chrono::steady_clock::now();
  const auto budget_hit = [&]() {
    return spec.time_budget_s &&
           std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count() >
               *spec.time_budget_s;
  };

  std::atomic<std::size_t> next{0};
  auto work = [&]() {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= cases.size())
        return;
      if (budget_hit()) {
        CaseReport skipped;
        skipped.model = to_string(cases[i].model);
        skipped.case_tuple = cases[i].tuple();
        skipped.status = CaseStatus::Skipped;
        skipped.error = "time budget exhausted";
        report.cases[i] = std::move(skipped);
        continue;
      }
      report.cases[i] = run_case(cases[i], options);
    }
  };

  const int thread_count = std::max(workers, 1);
  if (thread_count == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(thread_count));
    for (int t = 0; t < thread_count; ++t)
      pool.emplace_back(work);
    for (auto& th : pool)
      th.join();
  }

  refresh_counts(report);
  return report;
}

RunReport single_case_report(CaseReport report) {
  RunReport run;
  run.tool = std::string(tool_name) + " " + std::string(version);
  run.generated_at = iso_utc_now();
  run.cases.push_back(std::move(report));
  refresh_counts(run);
  return run;
}

void refresh_counts(RunReport& report) {
  report.agreed = report.disagreed = report.improper = report.skipped = 0;
  for (const auto& c : report.cases)
    switch (c.status) {
    case CaseStatus::Agree:
      ++report.agreed;
      break;
    case CaseStatus::Disagree:
      ++report.disagreed;
      break;
    case CaseStatus::Improper:
      ++report.improper;
      break;
    case CaseStatus::Skipped:
      ++report.skipped;
      break;
    }
}

} // namespace qsocle
