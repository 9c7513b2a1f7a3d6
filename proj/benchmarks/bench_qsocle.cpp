// Micro benchmarks for the hot operations: monomial colon and powers, box
// annihilators and the duality check, Newton-polyhedron membership, and the
// end-to-end case analyses.

#include <benchmark/benchmark.h>

#include <vector>

#include "qsocle/box.hpp"
#include "qsocle/closure.hpp"
#include "qsocle/monomial.hpp"
#include "qsocle/quasisocle.hpp"
#include "qsocle/semigroup.hpp"

using namespace qsocle;

namespace {

void BM_colon_by_maximal_power(benchmark::State& state) {
  const int s = static_cast<int>(state.range(0));
  const MonomialIdeal Q = MonomialIdeal::diagonal({s, s, s});
  const MonomialIdeal mq = MonomialIdeal::maximal_power(3, s);
  for (auto _ : state)
    benchmark::DoNotOptimize(colon(Q, mq));
}
BENCHMARK(BM_colon_by_maximal_power)->Arg(3)->Arg(4)->Arg(5);

void BM_ideal_power(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const MonomialIdeal I = quasi_socle_ideal(CaseSpec::regular({3, 3, 3}, 3));
  for (auto _ : state)
    benchmark::DoNotOptimize(power(I, n));
}
BENCHMARK(BM_ideal_power)->Arg(2)->Arg(3);

void BM_box_annihilator(benchmark::State& state) {
  const int s = static_cast<int>(state.range(0));
  const BoxSpec box({s, s, s, s});
  const BoxIdeal E = BoxIdeal::max_ideal_power(box, box.top_degree() / 2);
  for (auto _ : state)
    benchmark::DoNotOptimize(annihilator(E));
}
BENCHMARK(BM_box_annihilator)->Arg(3)->Arg(4);

void BM_gorenstein_duality_check(benchmark::State& state) {
  const BoxSpec box({4, 4, 4, 4, 4});
  const BoxIdeal E = BoxIdeal::max_ideal_power(box, 8);
  for (auto _ : state)
    benchmark::DoNotOptimize(gorenstein_duality_check(E));
}
BENCHMARK(BM_gorenstein_duality_check);

void BM_newton_membership(benchmark::State& state) {
  const MonomialIdeal J(3, {ExponentVector({3, 0, 0}), ExponentVector({0, 4, 0}),
                            ExponentVector({0, 0, 5}), ExponentVector({1, 1, 2})});
  std::vector<ExponentVector> points;
  for (int x = 0; x < 4; ++x)
    for (int y = 0; y < 4; ++y)
      for (int z = 0; z < 4; ++z)
        points.push_back(ExponentVector({x, y, z}));
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(newton_polyhedron_contains(J, points[i]));
    i = (i + 1) % points.size();
  }
}
BENCHMARK(BM_newton_membership);

void BM_analyze_regular(benchmark::State& state) {
  const int q = static_cast<int>(state.range(0));
  const CaseSpec spec = CaseSpec::regular({3, 3, 3}, q);
  for (auto _ : state)
    benchmark::DoNotOptimize(analyze(spec, {}));
}
BENCHMARK(BM_analyze_regular)->Arg(2)->Arg(4);

void BM_analyze_semigroup(benchmark::State& state) {
  const int q = static_cast<int>(state.range(0));
  SemigroupSpec spec;
  spec.a = 5;
  spec.b = 7;
  spec.n = 2;
  spec.q = q;
  for (auto _ : state)
    benchmark::DoNotOptimize(analyze(spec, {}));
}
BENCHMARK(BM_analyze_semigroup)->Arg(2)->Arg(4);

} // namespace

BENCHMARK_MAIN();
