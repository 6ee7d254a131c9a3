#pragma once

#include <vector>

#include "primewheel/int128.hpp"

// Deliberately naive reference implementations. Everything here is
// trial-division slow or worse; tests compare the library's fast paths
// against these.
namespace primewheel::brute {

bool is_prime(u64 n);

// Integers in [5, 4+primorial(k)] coprime to every prime <= P_k, by gcd scan.
std::vector<u64> prospective_primes(int k);

// Pairs (a, a+2), both coprime to primorial(k), as the low member a.
std::vector<u64> prospective_twins(int k);

// The quotient-form search for the disallowed residue: the smallest alpha
// for which (alpha*P_{k+1} - p_tilde mod P_{k+1}) is a non-negative multiple
// of primorial(k) mod P_{k+1} with quotient below P_{k+1}.
u64 alpha_search_m_hat(u64 p_tilde, int k);

u64 totient(u64 n);

u64 prime_pi(u64 n);

// Strict-interval twin count: pairs (p, p+2) with lo < p and p+2 < hi.
u64 twin_pairs_between(u64 lo, u64 hi);

}  // namespace primewheel::brute
