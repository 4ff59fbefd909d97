#include <benchmark/benchmark.h>

#include "symorb/combinatorics.hpp"
#include "symorb/optimize.hpp"
#include "symorb/orbits.hpp"
#include "symorb/presets.hpp"
#include "symorb/quantum.hpp"

using namespace symorb;

static void BM_BurnsideDihedral(benchmark::State& state) {
  const PermGroup G = dihedral_group(static_cast<int>(state.range(0)));
  const int m = static_cast<int>(state.range(0)) / 2;
  for (auto _ : state) benchmark::DoNotOptimize(burnside_count(G, m));
}
BENCHMARK(BM_BurnsideDihedral)->Arg(8)->Arg(12)->Arg(16);

static void BM_EnumerateOrbits(benchmark::State& state) {
  const PermGroup G = preset("I12");
  const int m = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_orbits(G, m).orbits.size());
}
BENCHMARK(BM_EnumerateOrbits)->Arg(2)->Arg(4)->Arg(6);

static void BM_NormalizerCyclic(benchmark::State& state) {
  const PermGroup G = cyclic_group(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(normalizer(G).order());
}
BENCHMARK(BM_NormalizerCyclic)->Arg(8)->Arg(12)->Arg(16);

static void BM_NormalizerIcosahedron(benchmark::State& state) {
  const PermGroup G = preset("I12");
  for (auto _ : state) benchmark::DoNotOptimize(normalizer(G).order());
}
BENCHMARK(BM_NormalizerIcosahedron)->Unit(benchmark::kMillisecond);

static void BM_PairConcurrence(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const StateVector w = w_state(n);
  const Subset x = Subset::of({1, 2}, n);
  for (auto _ : state) benchmark::DoNotOptimize(concurrence(w, x));
}
BENCHMARK(BM_PairConcurrence)->Arg(6)->Arg(10)->Arg(14);

static void BM_PartialTrace(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const StateVector w = w_state(n);
  const Subset x = Subset::of({1, 3}, n);
  for (auto _ : state) benchmark::DoNotOptimize(partial_trace(w, x).matrix(0, 0));
}
BENCHMARK(BM_PartialTrace)->Arg(6)->Arg(10)->Arg(14);

static void BM_MaximizeCyclic(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const PermGroup G = cyclic_group(n);
  MaxOptions o;
  o.restarts = 2;
  const Measure m = Measure::parse("concurrence");
  for (auto _ : state) benchmark::DoNotOptimize(maximize(G, 2, m, Subset::of({1, 2}, n), o).value);
}
BENCHMARK(BM_MaximizeCyclic)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
