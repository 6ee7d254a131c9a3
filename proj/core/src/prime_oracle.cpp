#include "primewheel/prime_oracle.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <thread>
#include <utility>

#include "primewheel/errors.hpp"

namespace primewheel {

namespace {

u64 isqrt64(u64 n) { return (u64)isqrt_u128((u128)n); }

}  // namespace

PrimeOracle::PrimeOracle(OracleOptions opts) : opts_(std::move(opts)) {
  if (opts_.segment_odds < 64) opts_.segment_odds = 64;
  ensure_base_primes(1 << 10);
  load_checkpoints();
}

void PrimeOracle::check_ceiling(u64 n, const char* what) const {
  if (n > opts_.ceiling)
    throw RangeError(std::string(what) + " " + std::to_string(n) +
                     " exceeds sieve ceiling " + std::to_string(opts_.ceiling));
}

void PrimeOracle::ensure_base_primes(u64 up_to) {
  if (up_to <= base_limit_) return;
  u64 limit = std::max<u64>(up_to, 1 << 10);
  std::vector<std::uint8_t> comp(limit + 1, 0);
  base_primes_.clear();
  for (u64 i = 2; i <= limit; i++) {
    if (comp[i]) continue;
    base_primes_.push_back(i);
    if (i <= limit / i)
      for (u64 j = i * i; j <= limit; j += i) comp[j] = 1;
  }
  base_limit_ = limit;
}

void PrimeOracle::sieve_segment(u64 lo, u64 hi, std::vector<std::uint8_t>& odd) const {
  u64 first = std::max<u64>(lo | 1, 3);  // first odd candidate
  if (hi < first) { odd.clear(); return; }
  size_t n = (size_t)((hi - first) / 2 + 1);
  odd.assign(n, 1);
  for (u64 p : base_primes_) {
    if (p == 2) continue;
    if (p > hi / p) break;  // p*p > hi
    u64 start = std::max(p * p, ((first + p - 1) / p) * p);
    if (start % 2 == 0) start += p;
    for (u64 j = start; j <= hi; j += 2 * p) odd[(size_t)((j - first) / 2)] = 0;
  }
}

u64 PrimeOracle::count_range(u64 lo, u64 hi) {
  // Odd primes only; the callers account for 2.
  lo = std::max<u64>(lo, 3);
  if (lo > hi) return 0;
  ensure_base_primes(isqrt64(hi) + 1);

  const u64 span = 2 * opts_.segment_odds;
  unsigned threads = opts_.threads ? opts_.threads : std::thread::hardware_concurrency();
  if (threads == 0) threads = 1;
  u64 segments = (hi - lo) / span + 1;
  threads = (unsigned)std::min<u64>(threads, segments);

  auto count_chunk = [&](u64 a, u64 b) {
    u64 cnt = 0;
    std::vector<std::uint8_t> odd;
    for (u64 base = a; base <= b; base += span) {
      u64 top = std::min(b, base + span - 1);
      sieve_segment(base, top, odd);
      for (std::uint8_t v : odd) cnt += v;
    }
    return cnt;
  };

  if (threads == 1) return count_chunk(lo, hi);

  u64 per = (hi - lo) / threads + 1;
  per = ((per + span - 1) / span) * span;  // segment-aligned chunk boundaries
  std::vector<u64> part(threads, 0);
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < threads; t++) {
    u64 a = lo + t * per;
    if (a > hi) break;
    u64 b = std::min(hi, a + per - 1);
    pool.emplace_back([&, t, a, b] { part[t] = count_chunk(a, b); });
  }
  u64 total = 0;
  for (auto& th : pool) th.join();
  for (u64 c : part) total += c;
  return total;
}

u64 PrimeOracle::prime_pi(u64 n) {
  check_ceiling(n, "prime_pi argument");
  if (n < 2) return 0;
  if (n < 3) return 1;

  u64 start = 3, base_count = 1;  // the prime 2
  auto it = std::upper_bound(checkpoints_.begin(), checkpoints_.end(), n,
                             [](u64 v, const Checkpoint& c) { return v < c.n; });
  if (it != checkpoints_.begin()) {
    const Checkpoint& c = *(it - 1);
    if (c.n == n) return c.pi;
    start = c.n + 1;
    base_count = c.pi;
  }
  u64 pi = base_count + count_range(start, n);
  store_checkpoint(n, pi);
  return pi;
}

bool PrimeOracle::is_prime(u64 n) {
  check_ceiling(n, "is_prime argument");
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  if (n <= base_limit_)
    return std::binary_search(base_primes_.begin(), base_primes_.end(), n);
  ensure_base_primes(isqrt64(n) + 1);
  std::vector<std::uint8_t> odd;
  sieve_segment(n, n, odd);
  return odd[0] != 0;
}

u64 PrimeOracle::nth_prime(u64 i) {
  if (i == 0) throw RangeError("nth_prime is 1-based");
  if (i == 1) return 2;
  u64 seen = 1;  // the prime 2
  u64 from = 3;
  // Checkpoints are sorted by n, and pi is nondecreasing along them, so the
  // last entry with pi < i gives the highest safe resume point.
  auto it = std::lower_bound(checkpoints_.begin(), checkpoints_.end(), i,
                             [](const Checkpoint& c, u64 v) { return c.pi < v; });
  if (it != checkpoints_.begin()) {
    const Checkpoint& c = *(it - 1);
    seen = c.pi;
    from = c.n + 1;
  }
  const u64 span = 2 * opts_.segment_odds;
  // Start with a slice sized to the primes still needed (gaps near the values
  // we handle stay well under 64) and double on a miss, so a query that
  // resumes next to its answer does not pay for a full segment.
  u64 need = i - seen;
  u64 slice = (need > span / 64) ? span : std::max<u64>(4096, 64 * need);
  std::vector<std::uint8_t> odd;
  for (u64 base = from | 1;;) {
    check_ceiling(base, "nth_prime scan");
    u64 top = std::min(opts_.ceiling, base + slice - 1);
    ensure_base_primes(isqrt64(top) + 1);
    sieve_segment(base, top, odd);
    for (size_t j = 0; j < odd.size(); j++) {
      if (odd[j] && ++seen == i) {
        u64 p = base + 2 * j;
        store_checkpoint(p, i);
        return p;
      }
    }
    if (top == opts_.ceiling)
      throw RangeError("nth_prime(" + std::to_string(i) + ") exceeds sieve ceiling");
    base = top + 1;
    slice = std::min(span, slice * 2);
  }
}

u64 PrimeOracle::twin_pairs_between(u64 lo, u64 hi) {
  if (lo >= hi) throw RangeError("twin interval is empty");
  check_ceiling(hi, "twin interval bound");
  if (hi <= 5) return 0;  // smallest admissible pair is (3,5), needing hi > 5
  u64 first = std::max<u64>(lo + 1, 3) | 1;  // smallest odd p with p > lo
  u64 last = hi - 3;                         // largest p with p + 2 < hi
  if (last < first) return 0;
  ensure_base_primes(isqrt64(hi) + 1);

  u64 cnt = 0;
  const u64 span = 2 * opts_.segment_odds;
  std::vector<std::uint8_t> odd;
  for (u64 base = first; base <= last; base += span) {
    u64 top = std::min(last, base + span - 1);
    sieve_segment(base, top + 2, odd);  // +2: partner of the last candidate
    size_t n_candidates = (size_t)((top - base) / 2 + 1);
    for (size_t j = 0; j + 1 < odd.size() && j < n_candidates; j++)
      if (odd[j] && odd[j + 1]) cnt++;
  }
  return cnt;
}

void PrimeOracle::for_each_prime(u64 lo, u64 hi, const std::function<void(u64)>& fn) {
  check_ceiling(hi, "prime range bound");
  if (lo > hi) return;
  if (lo <= 2 && hi >= 2) fn(2);
  u64 first = std::max<u64>(lo, 3) | 1;
  if (first > hi) return;
  ensure_base_primes(isqrt64(hi) + 1);
  const u64 span = 2 * opts_.segment_odds;
  std::vector<std::uint8_t> odd;
  for (u64 base = first; base <= hi; base += span) {
    u64 top = std::min(hi, base + span - 1);
    sieve_segment(base, top, odd);
    for (size_t j = 0; j < odd.size(); j++)
      if (odd[j]) fn(base + 2 * j);
  }
}

std::string PrimeOracle::checkpoint_path() const {
  return opts_.cache_dir + "/pi_checkpoints.tsv";
}

void PrimeOracle::load_checkpoints() {
  if (opts_.cache_dir.empty()) return;
  std::ifstream in(checkpoint_path());
  if (!in) return;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    lineno++;
    if (line.empty()) continue;
    size_t tab = line.find('\t');
    bool ok = tab != std::string::npos && tab > 0 && tab + 1 < line.size();
    u64 n = 0, pi = 0;
    if (ok) {
      try {
        u128 wn = parse_u128(line.substr(0, tab));
        u128 wp = parse_u128(line.substr(tab + 1));
        if (wn > UINT64_MAX || wp > UINT64_MAX) throw RangeError("checkpoint out of range");
        n = (u64)wn;
        pi = (u64)wp;
      } catch (const RangeError&) {
        ok = false;
      }
    }
    if (!ok) {
      std::cerr << "warning: ignoring corrupt checkpoint line " << lineno << " in "
                << checkpoint_path() << "\n";
      continue;
    }
    checkpoints_.push_back({n, pi});
  }
  std::sort(checkpoints_.begin(), checkpoints_.end(),
            [](const Checkpoint& a, const Checkpoint& b) { return a.n < b.n; });
  checkpoints_.erase(std::unique(checkpoints_.begin(), checkpoints_.end(),
                                 [](const Checkpoint& a, const Checkpoint& b) { return a.n == b.n; }),
                     checkpoints_.end());
}

void PrimeOracle::store_checkpoint(u64 n, u64 pi) {
  auto it = std::lower_bound(checkpoints_.begin(), checkpoints_.end(), n,
                             [](const Checkpoint& c, u64 v) { return c.n < v; });
  if (it != checkpoints_.end() && it->n == n) return;
  checkpoints_.insert(it, {n, pi});
  if (opts_.cache_dir.empty() || n < opts_.cache_threshold) return;
  std::error_code ec;
  std::filesystem::create_directories(opts_.cache_dir, ec);
  std::ofstream out(checkpoint_path(), std::ios::trunc);
  if (!out) {
    std::cerr << "warning: cannot write checkpoint file " << checkpoint_path() << "\n";
    return;
  }
  for (const Checkpoint& c : checkpoints_)
    if (c.n >= opts_.cache_threshold) out << c.n << "\t" << c.pi << "\n";
}

bool trial_division_is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 d = 2; d <= n / d; d++)
    if (n % d == 0) return false;
  return true;
}

}  // namespace primewheel
