#include <benchmark/benchmark.h>

#include <random>

#include "kwise/canonical.hpp"
#include "kwise/constructions.hpp"
#include "kwise/generator.hpp"
#include "kwise/intersecting.hpp"

using namespace kwise;

namespace {

void BM_KwiseLinkedCubes(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const SetFamily f = linked_cubes(n, balanced_half(n));
  for (auto _ : state) benchmark::DoNotOptimize(is_k_wise_intersecting(f, 3));
  state.counters["members"] = static_cast<double>(f.size());
}
BENCHMARK(BM_KwiseLinkedCubes)->DenseRange(8, 20, 4);

void BM_MaximalLinkedCubes(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const SetFamily f = linked_cubes(n, balanced_half(n));
  for (auto _ : state) benchmark::DoNotOptimize(is_maximal_k_wise(f, 3));
}
BENCHMARK(BM_MaximalLinkedCubes)->DenseRange(8, 16, 4);

void BM_CoveragePairOfCubes(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const SetFamily g = pair_of_cubes(n, balanced_half(n));
  for (auto _ : state) benchmark::DoNotOptimize(coverage(g, 2).count);
}
BENCHMARK(BM_CoveragePairOfCubes)->DenseRange(8, 16, 4);

void BM_CoverageSeries(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  const SetFamily g = series_of_cubes(Partition::balanced(16, k));
  for (auto _ : state) benchmark::DoNotOptimize(coverage(g, k).count);
}
BENCHMARK(BM_CoverageSeries)->Arg(2)->Arg(4)->Arg(8);

void BM_CanonicalForm(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::mt19937_64 rng(1);
  std::uniform_int_distribution<Mask> pick(0, full_mask(n));
  SetFamily f(n);
  for (int i = 0; i < 3 * n; ++i) f.insert(pick(rng));
  for (auto _ : state) benchmark::DoNotOptimize(canonical_form(f));
}
BENCHMARK(BM_CanonicalForm)->DenseRange(5, 8, 1);

}  // namespace
