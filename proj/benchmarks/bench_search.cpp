#include <benchmark/benchmark.h>

#include "kwise/search.hpp"

using namespace kwise;

namespace {

void BM_SearchMin(benchmark::State& state) {
  SearchConfig cfg;
  cfg.n = static_cast<int>(state.range(0));
  cfg.k = static_cast<int>(state.range(1));
  cfg.nondegenerate = true;
  cfg.budget_seconds = 600;
  for (auto _ : state) benchmark::DoNotOptimize(search_min(cfg).f_value);
}
BENCHMARK(BM_SearchMin)->Args({4, 3})->Args({5, 3})->Args({5, 4})->Args({6, 3})->Unit(benchmark::kMillisecond);

void BM_SearchMinNoSymmetry(benchmark::State& state) {
  SearchConfig cfg;
  cfg.n = static_cast<int>(state.range(0));
  cfg.k = 3;
  cfg.nondegenerate = true;
  cfg.symmetry = false;
  cfg.budget_seconds = 600;
  for (auto _ : state) benchmark::DoNotOptimize(search_min(cfg).f_value);
}
BENCHMARK(BM_SearchMinNoSymmetry)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
