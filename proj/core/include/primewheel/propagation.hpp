#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "primewheel/int128.hpp"
#include "primewheel/sequence.hpp"

namespace primewheel {

class PrimeOracle;

struct ProspectivePrime {
  u128 value = 0;
  int level = 0;
  Progression cls = Progression::Prog1;
  u128 seq_n = 0;
  // Set when an oracle is attached to the enumeration; coprime composites
  // (121, 143, ... at level 4) come out false.
  std::optional<bool> is_actual_prime;
};

struct TwinPair {
  u128 low = 0;  // the pair is (low, low+2), low = 6n+5
  int level = 0;
  u128 seq_n = 0;
};

// The unique m in [0, P_{k+1}-1] with P_{k+1} | (p_tilde + m*primorial(k)),
// together with the quotient pieces it solves: alpha*P_{k+1} = beta + m*gamma.
struct DisallowedResidue {
  u64 m_hat = 0;
  u64 alpha = 0;  // smallest integer making the quotient integral; 0 iff P_{k+1} | p_tilde
  u64 beta = 0;   // p_tilde mod P_{k+1}
  u64 gamma = 0;  // primorial(k) mod P_{k+1}
};

struct EnumOptions {
  u128 cap = 100'000'000;         // refuse item counts beyond this
  PrimeOracle* oracle = nullptr;  // optional: mark actual primality
};

// a^-1 mod m via extended gcd; throws RangeError when gcd(a, m) != 1.
u64 mod_inverse(u64 a, u64 m);

DisallowedResidue disallowed_m(u128 p_tilde, int k);

// Children at level k+1: value + m*primorial(k) for every allowed m, ascending.
std::vector<ProspectivePrime> extend_prime(const ProspectivePrime& p);
std::vector<TwinPair> extend_twin(const TwinPair& t);

// Every integer in [5, 4+primorial(k)] coprime to primorial(k), ascending.
// Streams subset by subset; memory stays at the size of level k-1.
void for_each_prospective_prime(int k, const EnumOptions& opts,
                                const std::function<void(const ProspectivePrime&)>& fn);
// All pairs (a, a+2) with both members coprime to primorial(k), ascending by a.
void for_each_prospective_twin(int k, const EnumOptions& opts,
                               const std::function<void(const TwinPair&)>& fn);

std::vector<ProspectivePrime> enumerate_prospective_primes(int k, const EnumOptions& opts = {});
std::vector<TwinPair> enumerate_prospective_twins(int k, const EnumOptions& opts = {});

struct FamilyTree {
  TwinPair pair;
  std::vector<FamilyTree> children;
};

// Branching family from `seed` down to `to_level`; each node's children are
// its extend_twin outputs. Total node count is capped by opts.cap.
FamilyTree family_tree(const TwinPair& seed, int to_level, const EnumOptions& opts = {});

ProspectivePrime make_prospective(u128 value, int level);
TwinPair make_twin(u128 low, int level);

}  // namespace primewheel
