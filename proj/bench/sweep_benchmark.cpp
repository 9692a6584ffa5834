// Serial reference vs OpenMP for the grid sweeps.

#include "autbound/sweep.hpp"

#include <benchmark/benchmark.h>

namespace {

using autbound::BoundKind;
using autbound::Execution;

Execution execution_of(const benchmark::State& state) {
  return state.range(0) == 0 ? Execution::Serial : Execution::Parallel;
}

void BM_PglGrid(benchmark::State& state) {
  const Execution exec = execution_of(state);
  for (auto _ : state) {
    auto cells = autbound::bound_grid(BoundKind::Pgl, {1, 6}, {3, 30}, exec);
    benchmark::DoNotOptimize(cells.data());
  }
  state.SetLabel(exec == Execution::Serial ? "serial" : "openmp");
}
BENCHMARK(BM_PglGrid)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_DeckGrid(benchmark::State& state) {
  const Execution exec = execution_of(state);
  for (auto _ : state) {
    auto cells = autbound::bound_grid(BoundKind::Deck, {1, 6}, {3, 30}, exec);
    benchmark::DoNotOptimize(cells.data());
  }
  state.SetLabel(exec == Execution::Serial ? "serial" : "openmp");
}
BENCHMARK(BM_DeckGrid)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_TableCheck(benchmark::State& state) {
  const Execution exec = execution_of(state);
  for (auto _ : state) {
    auto cells = autbound::check_table({2, 4}, {3, 10}, exec);
    benchmark::DoNotOptimize(cells.data());
  }
  state.SetLabel(exec == Execution::Serial ? "serial" : "openmp");
}
BENCHMARK(BM_TableCheck)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_NAgreement(benchmark::State& state) {
  const Execution exec = execution_of(state);
  for (auto _ : state) {
    auto rows = autbound::n_agreement_grid(5, 4, 9, exec);
    benchmark::DoNotOptimize(rows.data());
  }
  state.SetLabel(exec == Execution::Serial ? "serial" : "openmp");
}
BENCHMARK(BM_NAgreement)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
