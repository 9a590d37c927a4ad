#include <benchmark/benchmark.h>

#include "shamrock/formulas.hpp"
#include "shamrock/lattice.hpp"
#include "shamrock/oracle.hpp"

using namespace shamrock;

static void BM_CountHexagon(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Region r = build_hexagon({n, n, n, n, n, n});
  for (auto _ : state) benchmark::DoNotOptimize(count_tilings(r));
  state.counters["cells"] = static_cast<double>(r.size());
}
BENCHMARK(BM_CountHexagon)->DenseRange(2, 8, 2)->Unit(benchmark::kMillisecond);

static void BM_CountSCored(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Region r = build_s_cored_hexagon(n, n, n, 1, 1, 1, 2);
  for (auto _ : state) benchmark::DoNotOptimize(count_tilings(r));
  state.counters["cells"] = static_cast<double>(r.size());
}
BENCHMARK(BM_CountSCored)->DenseRange(2, 6, 2)->Unit(benchmark::kMillisecond);

static void BM_CountMagnetBar(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Region r = build_magnet_bar(n, n, 1, 1, 1, 2);
  for (auto _ : state) benchmark::DoNotOptimize(count_tilings(r));
  state.counters["cells"] = static_cast<double>(r.size());
}
BENCHMARK(BM_CountMagnetBar)->DenseRange(2, 8, 2)->Unit(benchmark::kMillisecond);

static void BM_FindOneTiling(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Region r = build_hexagon({n, n, n, n, n, n});
  for (auto _ : state) benchmark::DoNotOptimize(find_one_tiling(r));
}
BENCHMARK(BM_FindOneTiling)->RangeMultiplier(2)->Range(4, 16);

static void BM_SCFormula(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(sc_formula(n, n + 1, n + 1, 2, 3, 1, 4));
}
BENCHMARK(BM_SCFormula)->RangeMultiplier(4)->Range(4, 256);

static void BM_EvaluatePrimeRoute(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto p = s_cored_product(n, n, n, 2, 3, 1, 4);
  for (auto _ : state) benchmark::DoNotOptimize(p.evaluate());
}
BENCHMARK(BM_EvaluatePrimeRoute)->RangeMultiplier(4)->Range(4, 256);

static void BM_EvaluateDirect(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto p = s_cored_product(n, n, n, 2, 3, 1, 4);
  for (auto _ : state) benchmark::DoNotOptimize(p.evaluate_direct());
}
BENCHMARK(BM_EvaluateDirect)->RangeMultiplier(4)->Range(4, 256);

static void BM_LogValue(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto p = s_cored_product(n, n, n, 2, 3, 1, 4);
  for (auto _ : state) benchmark::DoNotOptimize(p.log_value());
}
BENCHMARK(BM_LogValue)->RangeMultiplier(4)->Range(4, 256);
BENCHMARK_MAIN();
