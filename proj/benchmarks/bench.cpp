#include <benchmark/benchmark.h>

#include <vector>

#include "primewheel/prime_oracle.hpp"
#include "primewheel/propagation.hpp"
#include "primewheel/wheel.hpp"

namespace {

using namespace primewheel;

void BM_PrimePiTenMillion(benchmark::State& state) {
  for (auto _ : state) {
    PrimeOracle oracle;  // fresh each round; the memo would absorb repeat work
    benchmark::DoNotOptimize(oracle.prime_pi(10'000'000));
  }
}
BENCHMARK(BM_PrimePiTenMillion)->Unit(benchmark::kMillisecond);

void BM_EnumerateProspectivePrimes(benchmark::State& state) {
  int k = (int)state.range(0);
  for (auto _ : state) {
    u64 acc = 0;
    for_each_prospective_prime(k, {}, [&](const ProspectivePrime& p) { acc += (u64)p.value; });
    benchmark::DoNotOptimize(acc);
  }
}
BENCHMARK(BM_EnumerateProspectivePrimes)->Arg(5)->Arg(6)->Arg(7)->Unit(benchmark::kMillisecond);

std::vector<u128> first_survivors(int k, size_t n) {
  std::vector<u128> out;
  struct Stop {};
  try {
    for_each_prospective_prime(k, {}, [&](const ProspectivePrime& p) {
      out.push_back(p.value);
      if (out.size() >= n) throw Stop{};
    });
  } catch (const Stop&) {
  }
  return out;
}

void BM_DisallowedResidueInverse(benchmark::State& state) {
  auto seeds = first_survivors(6, 1024);
  for (auto _ : state) {
    u64 acc = 0;
    for (u128 s : seeds) acc += disallowed_m(s, 6).m_hat;
    benchmark::DoNotOptimize(acc);
  }
}
BENCHMARK(BM_DisallowedResidueInverse);

// Baseline the modular inverse replaces: walk the multiplier until the
// quotient comes out integral.
u64 alpha_search_m(u64 beta, u64 gamma, u64 p) {
  for (u64 m = 0;; m++)
    if ((beta + m * gamma) % p == 0) return m;
}

void BM_DisallowedResidueAlphaSearch(benchmark::State& state) {
  auto seeds = first_survivors(6, 1024);
  WheelLevel level = make_level(6);
  u64 p = nth_small_prime(7);
  u64 gamma = (u64)(level.primorial % p);
  for (auto _ : state) {
    u64 acc = 0;
    for (u128 s : seeds) acc += alpha_search_m((u64)(s % p), gamma, p);
    benchmark::DoNotOptimize(acc);
  }
}
BENCHMARK(BM_DisallowedResidueAlphaSearch);

}  // namespace

BENCHMARK_MAIN();
