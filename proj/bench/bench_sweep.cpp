// Serial reference sweep vs the OpenMP sweep on a phase-diagram-sized grid.

#include <benchmark/benchmark.h>

#include "ccqed/boundary.hpp"
#include "ccqed/sweep.hpp"

namespace {

const ccqed::SweepSpec& grid() {
  static const ccqed::SweepSpec spec = ccqed::default_phase_spec(81, 41);
  return spec;
}

void BM_EvaluatePoint(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(ccqed::evaluate_point(-10.0, 10.0));
  }
}
BENCHMARK(BM_EvaluatePoint);

void BM_SweepSerial(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(ccqed::run_sweep_serial(grid()));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(grid().point_count()));
}
BENCHMARK(BM_SweepSerial)->Unit(benchmark::kMillisecond);

void BM_SweepOpenMP(benchmark::State& state) {
  const int workers = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(ccqed::run_sweep(grid(), workers));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(grid().point_count()));
}
BENCHMARK(BM_SweepOpenMP)->Arg(1)->Arg(2)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond)->UseRealTime();

}  // namespace

BENCHMARK_MAIN();
