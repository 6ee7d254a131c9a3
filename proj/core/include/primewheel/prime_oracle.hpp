#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "primewheel/int128.hpp"

namespace primewheel {

struct OracleOptions {
  u64 ceiling = 10'000'000'000ULL;       // hard cap on any sieved N
  u64 segment_odds = 1ULL << 20;         // odd entries per segment
  u64 cache_threshold = 100'000'000ULL;  // pi() at or above this is persisted
  std::string cache_dir;                 // empty: no on-disk checkpoints
  unsigned threads = 0;                  // 0: hardware_concurrency
};

// Ground truth for everything the wheel machinery claims: a segmented sieve
// of Eratosthenes over odd numbers. All answers are exact.
class PrimeOracle {
 public:
  explicit PrimeOracle(OracleOptions opts = {});

  u64 prime_pi(u64 n);   // count of primes <= n
  bool is_prime(u64 n);
  u64 nth_prime(u64 i);  // 1-based: nth_prime(1) = 2

  // Pairs (p, p+2), both prime, with lo < p and p+2 < hi. Bounds are strict:
  // the interval question "between a and b" is calibrated so that
  // twin_pairs_between(13, 289) = 16.
  u64 twin_pairs_between(u64 lo, u64 hi);

  // Primes in [lo, hi] in ascending order, one callback each.
  void for_each_prime(u64 lo, u64 hi, const std::function<void(u64)>& fn);

  const OracleOptions& options() const { return opts_; }

 private:
  void ensure_base_primes(u64 up_to);
  void check_ceiling(u64 n, const char* what) const;
  u64 count_range(u64 lo, u64 hi);  // primes in [lo, hi], threaded over chunks
  // Odd-number primality bitmap for [lo, hi]; index (v - lo_odd) / 2.
  void sieve_segment(u64 lo, u64 hi, std::vector<std::uint8_t>& odd_is_prime) const;

  OracleOptions opts_;
  std::vector<u64> base_primes_;  // enough for sqrt of anything sieved so far
  u64 base_limit_ = 0;

  struct Checkpoint {
    u64 n;
    u64 pi;
  };
  // Every exact pi result is memoized here so ascending queries resume from
  // the nearest answer instead of recounting; only entries at or above
  // cache_threshold are written to disk.
  std::vector<Checkpoint> checkpoints_;  // sorted by n
  void load_checkpoints();
  void store_checkpoint(u64 n, u64 pi);
  std::string checkpoint_path() const;
};

// Test-only reference: straight trial division, no sieving, no caching.
bool trial_division_is_prime(u64 n);

}  // namespace primewheel
