#include <benchmark/benchmark.h>

#include "kronkit/oracle.hpp"

using namespace kronkit;

namespace {

void BM_KronCoeffAllTriples(benchmark::State& state) {
  const auto ps = partitions(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    CharacterEvaluator chars;
    Integer total = 0;
    for (const auto& a : ps) {
      for (const auto& b : ps) total += kron_coeff(a, b, ps.back(), chars);
    }
    benchmark::DoNotOptimize(total);
  }
}
BENCHMARK(BM_KronCoeffAllTriples)->Arg(6)->Arg(8)->Arg(10);

void BM_SemigroupMemberGhz(benchmark::State& state) {
  const auto pair = parse_young({1, 1});
  const auto inst = make_instance(pair, pair, pair, 2);
  for (auto _ : state) benchmark::DoNotOptimize(semigroup_member(inst, 6));
}
BENCHMARK(BM_SemigroupMemberGhz);

}  // namespace
