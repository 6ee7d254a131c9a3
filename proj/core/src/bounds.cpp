#include "primewheel/bounds.hpp"

#include <cmath>
#include <vector>

#include "primewheel/errors.hpp"
#include "primewheel/prime_oracle.hpp"
#include "primewheel/wheel.hpp"

namespace primewheel {

namespace {

u64 sqrt_primorial(int l) {
  u128 prim = make_level(l).primorial;
  u128 s = isqrt_u128(prim);
  if (s > (u128)UINT64_MAX) throw RangeError("sqrt(primorial) exceeds 64 bits at l=" + std::to_string(l));
  return (u64)s;
}

u64 next_prime_after(u64 n, PrimeOracle& oracle) {
  for (u64 v = n + 1;; v++)
    if (oracle.is_prime(v)) return v;
}

}  // namespace

u64 k_for_l(int l, PrimeOracle& oracle) {
  if (l < 4) throw RangeError("bound levels start at l=4");
  return oracle.prime_pi(sqrt_primorial(l));
}

BoundReport twin_lower_bound(int l, PrimeOracle& oracle) {
  if (l < 4) throw RangeError("bound levels start at l=4");
  u64 s = sqrt_primorial(l);

  BoundReport rep;
  rep.l = l;

  // P_l .. P_k are exactly the primes up to sqrt(primorial(l)).
  std::vector<u64> primes;
  oracle.for_each_prime(2, s, [&](u64 p) { primes.push_back(p); });
  rep.k = primes.size();
  rep.p_k = primes.back();
  rep.p_k1 = next_prime_after(s, oracle);

  // Refuse unanswerable intervals before the exact product: at large l that
  // product has ~k factors and dominates the cost.
  u128 hi_sq = (u128)rep.p_k1 * rep.p_k1;
  if (hi_sq > (u128)oracle.options().ceiling)
    throw RangeError("interval end " + to_string(hi_sq) + " exceeds sieve ceiling at l=" +
                     std::to_string(l));

  BigInt num = to_bigint(counts(make_level(l)).n_twin);
  BigInt den = 1;
  for (u64 j = (u64)l; j <= rep.k - 1; j++) {  // P_j = primes[j-1]
    num *= primes[j - 1] - 4;
    den *= primes[j - 1] - 2;
  }
  rep.bound_exact = Rat(num, den);
  rep.bound_floor = floor_rat(rep.bound_exact);
  rep.actual = oracle.twin_pairs_between(rep.p_k, (u64)hi_sq);
  rep.ratio = rep.actual ? Rat(rep.bound_floor, BigInt(rep.actual)) : Rat(0);
  return rep;
}

GrowthCheck growth_check(int l, PrimeOracle& oracle) {
  BoundReport at_l = twin_lower_bound(l, oracle);
  BoundReport at_l1 = twin_lower_bound(l + 1, oracle);

  GrowthCheck g;
  g.l = l;
  u64 p_l = nth_small_prime(l), p_l1 = nth_small_prime(l + 1);
  BigInt num = BigInt(p_l - 2) * (p_l1 - 2);
  BigInt den = p_l - 4;
  std::vector<u64> primes;  // P_k .. P_{k'-1} live in (s_l, s_{l+1}]
  oracle.for_each_prime(at_l.p_k, at_l1.p_k - 1, [&](u64 p) { primes.push_back(p); });
  for (u64 p : primes) {
    num *= p - 4;
    den *= p - 2;
  }
  g.factor_exact = Rat(num, den);
  g.bracket_estimate =
      1.0 - 2.0 / ((double)at_l.p_k - 2) - 2.0 * std::sqrt((double)p_l1) / std::log((double)at_l.p_k);
  g.passes = at_l1.bound_floor > at_l.bound_floor;
  return g;
}

BoundReport find_twin_above(u128 n, PrimeOracle& oracle) {
  for (int l = 4; l <= max_level(); l++) {
    u64 s = sqrt_primorial(l);
    if (s > oracle.options().ceiling)
      throw RangeError("no evaluable interval starts above " + to_string(n) +
                       " within the sieve ceiling");
    u64 p_k = 0;
    oracle.for_each_prime(2, s, [&](u64 p) { p_k = p; });
    if ((u128)p_k > n) return twin_lower_bound(l, oracle);
  }
  throw RangeError("no interval starts above " + to_string(n) + " at any supported level");
}

}  // namespace primewheel
