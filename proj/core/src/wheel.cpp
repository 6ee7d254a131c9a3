#include "primewheel/wheel.hpp"

#include <cmath>
#include <mutex>

#include "primewheel/errors.hpp"
#include "primewheel/prime_oracle.hpp"

namespace primewheel {

namespace {

std::vector<u64> g_small_primes;
std::mutex g_small_primes_mu;

void grow_small_primes_locked(size_t n) {
  u64 limit = 64;
  while (g_small_primes.size() < n) {
    limit *= 4;
    std::vector<bool> comp(limit + 1, false);
    g_small_primes.clear();
    for (u64 i = 2; i <= limit; i++) {
      if (comp[i]) continue;
      g_small_primes.push_back(i);
      for (u64 j = i * i; j <= limit; j += i) comp[j] = true;
    }
  }
}

}  // namespace

const std::vector<u64>& small_primes(int n) {
  if (n < 0) throw RangeError("negative prime count requested");
  std::lock_guard<std::mutex> lock(g_small_primes_mu);
  if (g_small_primes.size() < (size_t)n) grow_small_primes_locked((size_t)n);
  return g_small_primes;
}

u64 nth_small_prime(int n) {
  if (n < 1) throw RangeError("prime indices are 1-based");
  return small_primes(n)[n - 1];
}

int max_level() {
  static int cached = [] {
    int k = 0;
    u128 prod = 1;
    for (;;) {
      u64 p = nth_small_prime(k + 1);
      try {
        prod = checked_mul(prod, (u128)p);
      } catch (const RangeError&) {
        return k;
      }
      k++;
    }
  }();
  return cached;
}

WheelLevel make_level(int k) {
  if (k < 1) throw RangeError("wheel level must be >= 1");
  if (k > max_level())
    throw RangeError("primorial overflows 128 bits beyond level " + std::to_string(max_level()));
  WheelLevel lv;
  lv.k = k;
  const auto& ps = small_primes(k);
  lv.primes.assign(ps.begin(), ps.begin() + k);
  lv.primorial = 1;
  for (u64 p : lv.primes) lv.primorial *= p;  // fits by the max_level check
  lv.span_end = 4 + lv.primorial;
  return lv;
}

LevelCounts counts(const WheelLevel& level) {
  LevelCounts c;
  c.n_pp = 1;
  c.n_twin = 1;
  for (int i = 2; i <= level.k; i++) {
    u64 p = level.primes[i - 1];
    c.n_pp = checked_mul(c.n_pp, p - 1);
    c.n_twin = checked_mul(c.n_twin, p - 2);
  }
  BigInt prim = to_bigint(level.primorial);
  c.rho_pp = Rat(to_bigint(c.n_pp), prim);
  c.zeta_partial = Rat(prim, to_bigint(c.n_pp));
  c.rho_twin = Rat(to_bigint(c.n_twin), prim);
  c.sigma_twin = Rat(to_bigint(c.n_twin), to_bigint(c.n_pp));
  return c;
}

Rat actual_prime_ratio(const WheelLevel& level, PrimeOracle& oracle) {
  if (level.span_end > (u128)UINT64_MAX)
    throw RangeError("span end exceeds sieve range at level " + std::to_string(level.k));
  u64 pi = oracle.prime_pi((u64)level.span_end);
  LevelCounts c = counts(level);
  return Rat(BigInt(pi) - level.k, to_bigint(c.n_pp));
}

StepRatio ratio_step_approx(int k) {
  if (k < 2) throw RangeError("step ratio needs k >= 2");
  WheelLevel lv = make_level(k);
  double pk1 = (double)nth_small_prime(k + 1);
  double log_prim = 0;
  for (u64 p : lv.primes) log_prim += std::log((double)p);
  double alpha = log_prim / std::log(pk1);
  double step = (pk1 / (pk1 - 1)) * (alpha / (alpha + 1));
  return StepRatio{alpha, step};
}

std::pair<u128, u128> largest_prospective(const WheelLevel& level) {
  if (level.k < 2) throw RangeError("largest prospective slots need k >= 2");
  return {level.primorial - 1, level.primorial + 1};
}

}  // namespace primewheel
