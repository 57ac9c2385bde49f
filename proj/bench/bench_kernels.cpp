#include <benchmark/benchmark.h>

#include <bit>

#include "tourney/distinguishing.hpp"
#include "tourney/subset_search.hpp"
#include "tourney/sweep.hpp"

using namespace tourney;

static SweepConfig sweep_config(int p_max) {
  SweepConfig cfg;
  cfg.p_min = 1;
  cfg.p_max = p_max;
  cfg.mode = SweepMode::BruteOnly;
  cfg.record_timing = false;
  return cfg;
}

static void BM_SweepSerial(benchmark::State& state) {
  const auto cfg = sweep_config(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(run_sweep_serial(cfg).holding);
}
BENCHMARK(BM_SweepSerial)->Arg(6)->Arg(7)->Unit(benchmark::kMillisecond);

static void BM_SweepParallel(benchmark::State& state) {
  auto cfg = sweep_config(static_cast<int>(state.range(0)));
  cfg.workers = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(run_sweep(cfg).holding);
}
BENCHMARK(BM_SweepParallel)->Args({6, 4})->Args({7, 4})->Unit(benchmark::kMillisecond);

// Regular-set test over every 4-subset of QR23; the size check never passes,
// so each scan visits all C(23,4) subsets.
static bool never(const AutomorphismGroup& group, VertexSet set) {
  return is_regular_set(group, set) && std::popcount(set) == 5;
}

static void BM_SubsetScanSerial(benchmark::State& state) {
  const auto group = automorphisms(build_paley(23).graph());
  for (auto _ : state)
    benchmark::DoNotOptimize(first_subset_serial(23, 4, [&](VertexSet s) { return never(group, s); }));
}
BENCHMARK(BM_SubsetScanSerial)->Unit(benchmark::kMillisecond);

static void BM_SubsetScanParallel(benchmark::State& state) {
  const auto group = automorphisms(build_paley(23).graph());
  for (auto _ : state)
    benchmark::DoNotOptimize(first_subset(23, 4, [&](VertexSet s) { return never(group, s); }));
}
BENCHMARK(BM_SubsetScanParallel)->Unit(benchmark::kMillisecond);

static void BM_CostSerial(benchmark::State& state) {
  const auto g = build_cyclic(7, ConnectorSet(7, {3, 4, 5})).graph();
  for (auto _ : state) benchmark::DoNotOptimize(distinguishing_cost_serial(g));
}
BENCHMARK(BM_CostSerial)->Unit(benchmark::kMillisecond);

static void BM_CostParallel(benchmark::State& state) {
  const auto g = build_cyclic(7, ConnectorSet(7, {3, 4, 5})).graph();
  for (auto _ : state) benchmark::DoNotOptimize(distinguishing_cost(g));
}
BENCHMARK(BM_CostParallel)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
