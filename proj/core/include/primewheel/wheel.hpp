#pragma once

#include <utility>
#include <vector>

#include "primewheel/int128.hpp"
#include "primewheel/rational.hpp"

namespace primewheel {

class PrimeOracle;

// One full period of the level-k wheel: the interval S_k = [5, 4+primorial].
struct WheelLevel {
  int k = 0;
  std::vector<u64> primes;  // P_1..P_k
  u128 primorial = 0;
  u128 span_start = 5;
  u128 span_end = 0;  // 4 + primorial
};

struct LevelCounts {
  u128 n_pp = 0;     // prod_{i=2..k} (P_i - 1), with n = 1 at k = 1
  u128 n_twin = 0;   // prod_{i=2..k} (P_i - 2)
  Rat rho_pp;        // prod (1 - 1/P_i) = n_pp / primorial
  Rat zeta_partial;  // 1 / rho_pp
  Rat rho_twin;      // (1/2) prod_{i>=2} (1 - 2/P_i) = n_twin / primorial
  Rat sigma_twin;    // prod_{i>=2} (P_i-2)/(P_i-1) = n_twin / n_pp
};

// Largest k whose primorial fits the 128-bit value type (derived, not hard-coded).
int max_level();

// First n primes / the n-th prime (1-based, nth_small_prime(1) = 2). Backed by
// a grow-on-demand sieve; intended for the small P_1..P_k lists, not for bulk
// prime counting (that is the oracle's job).
const std::vector<u64>& small_primes(int n);
u64 nth_small_prime(int n);

WheelLevel make_level(int k);  // RangeError if k < 1 or primorial overflows
LevelCounts counts(const WheelLevel& level);

// (pi(4+primorial) - k) / n_pp as an exact rational.
Rat actual_prime_ratio(const WheelLevel& level, PrimeOracle& oracle);

struct StepRatio {
  double alpha;       // ln(primorial(k)) / ln(P_{k+1})
  double step_ratio;  // (P_{k+1}/(P_{k+1}-1)) * alpha/(alpha+1)
};
StepRatio ratio_step_approx(int k);  // k >= 2

// (primorial-1, primorial+1): the last coprime slots of the period.
std::pair<u128, u128> largest_prospective(const WheelLevel& level);

}  // namespace primewheel
