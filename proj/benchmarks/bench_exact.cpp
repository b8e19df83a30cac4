#include <benchmark/benchmark.h>

#include <random>

#include "kronkit/marginals.hpp"
#include "kronkit/ressayre.hpp"
#include "kronkit/weights.hpp"

using namespace kronkit;

namespace {

HyperplaneCandidate standard(int m) {
  // (-1, 0, ..., 0, 1) on A and B, its negative on C.
  HyperplaneCandidate hz;
  for (int x = 0; x < 3; ++x) {
    hz.H[static_cast<std::size_t>(x)].assign(static_cast<std::size_t>(m), Integer(0));
    hz.H[static_cast<std::size_t>(x)].front() = x == 2 ? 1 : -1;
    hz.H[static_cast<std::size_t>(x)].back() = x == 2 ? -1 : 1;
  }
  hz.z = -1;
  return hz;
}

void BM_VerifyNonmembership(benchmark::State& state) {
  const auto inst = make_instance(parse_young({2}), parse_young({2}), parse_young({1, 1}), 2);
  const RessayreCertificate cert{standard(2), {Integer(1), Integer(0), Integer(0)}};
  for (auto _ : state) benchmark::DoNotOptimize(verify_nonmembership(inst, cert));
}
BENCHMARK(BM_VerifyNonmembership);

void BM_BareissRandom(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  PolyMatrix d(n, n * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) d.set_slot(r, c, static_cast<int>(r * n + c));
  }
  std::mt19937_64 rng(1);
  std::uniform_int_distribution<long> dist(-50, 50);
  std::vector<Integer> p(n * n);
  for (auto& v : p) v = dist(rng);
  for (auto _ : state) benchmark::DoNotOptimize(eval_determinant(d, p));
}
BENCHMARK(BM_BareissRandom)->Arg(4)->Arg(8)->Arg(16)->Arg(24);

void BM_ReducedDensities(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  std::mt19937_64 rng(2);
  std::uniform_int_distribution<long> num(-1000, 1000);
  std::uniform_int_distribution<long> den(1, 1000);
  MembershipCertificate cert(m);
  for (int a = 1; a <= m; ++a) {
    for (int b = 1; b <= m; ++b) {
      for (int c = 1; c <= m; ++c) cert.set(a, b, c, {Rational(num(rng), den(rng)), Rational(num(rng), den(rng))});
    }
  }
  for (auto _ : state) benchmark::DoNotOptimize(reduced_densities(cert));
}
BENCHMARK(BM_ReducedDensities)->Arg(2)->Arg(3)->Arg(4);

void BM_RequiredBits(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(required_bits(8, 65536));
}
BENCHMARK(BM_RequiredBits);

}  // namespace
