#include <benchmark/benchmark.h>

#include "gaussdistill/lemmas.hpp"
#include "gaussdistill/optimizer.hpp"
#include "gaussdistill/sweep.hpp"

using namespace gaussdistill;

namespace {

SweepConfig config_for(benchmark::State& state) {
  SweepConfig c;
  c.samples = static_cast<std::size_t>(state.range(0));
  return c;
}

void BM_SweepSerial(benchmark::State& state) {
  const auto c = config_for(state);
  for (auto _ : state) benchmark::DoNotOptimize(sweep_serial(c));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_SweepParallel(benchmark::State& state) {
  const auto c = config_for(state);
  for (auto _ : state) benchmark::DoNotOptimize(sweep(c));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_FvsGSerial(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(check_lemma5(static_cast<std::size_t>(state.range(0)), 7, Execution::serial));
  }
}

void BM_FvsGParallel(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(check_lemma5(static_cast<std::size_t>(state.range(0)), 7, Execution::parallel));
  }
}

void optimize_with(benchmark::State& state, Execution exec) {
  OptimizeConfig c;
  c.params = {2.0, 1.5};
  c.restarts = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(optimize(c, exec));
}

void BM_OptimizeSerial(benchmark::State& state) { optimize_with(state, Execution::serial); }
void BM_OptimizeParallel(benchmark::State& state) { optimize_with(state, Execution::parallel); }

}  // namespace

BENCHMARK(BM_SweepSerial)->Arg(1000)->Arg(10000)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_SweepParallel)->Arg(1000)->Arg(10000)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_FvsGSerial)->Arg(10000)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_FvsGParallel)->Arg(10000)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_OptimizeSerial)->Arg(8)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_OptimizeParallel)->Arg(8)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
