#include <benchmark/benchmark.h>

#include "kronkit/search.hpp"

using namespace kronkit;

namespace {

void BM_EnumerateRank2(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_ressayre(2));
}
BENCHMARK(BM_EnumerateRank2)->Unit(benchmark::kMillisecond);

void BM_ReduceRank2(benchmark::State& state) {
  const auto fs = enumerate_ressayre(2);
  for (auto _ : state) benchmark::DoNotOptimize(reduce_irredundant(fs));
}
BENCHMARK(BM_ReduceRank2)->Unit(benchmark::kMillisecond);

void BM_SampleSpectra(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(sample_spectra(static_cast<int>(state.range(0)), 1000, 0));
}
BENCHMARK(BM_SampleSpectra)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

void BM_WitnessGhz(benchmark::State& state) {
  const auto pair = parse_young({1, 1});
  const auto inst = make_instance(pair, pair, pair, 2);
  for (auto _ : state) benchmark::DoNotOptimize(search_witness(inst));
}
BENCHMARK(BM_WitnessGhz)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
