#pragma once

#include <optional>
#include <vector>

#include "primewheel/int128.hpp"
#include "primewheel/propagation.hpp"
#include "primewheel/rational.hpp"

namespace primewheel {

// Occupancy of the P_k subsets S_k^(m), each a block of length primorial(k-1),
// against the guaranteed minima (every subset keeps at least what a full
// parent block contributes minus what one extension step can remove).
struct SubsetStats {
  int k = 0;
  std::vector<u64> counts_pp;    // indexed by m = 0..P_k-1
  std::vector<u64> counts_twin;
  u128 min_pp_bound = 0;    // n_pp(k-1) - n_pp(k-2)
  u128 min_twin_bound = 0;  // n_twin(k-1) - 2*n_twin(k-2)
  u64 observed_min_pp = 0;
  u64 observed_min_twin = 0;
  bool pp_bound_holds = false;
  bool twin_bound_holds = false;
};

SubsetStats subset_stats(int k, const EnumOptions& opts = {});

// Two twin pairs from one parent family whose excluded subsets overlap in
// exactly one m value at the k -> k+1 extension.
struct SharedExclusion {
  u128 parent_low = 0;
  u128 low_a = 0;
  u128 low_b = 0;
  u64 shared_m = 0;
  u64 delta_m = 0;  // the pairs' m separation within the family
};

struct ExclusionPairReport {
  int k = 0;          // source level; the extension step is k -> k+1
  u64 p_next = 0;     // P_{k+1}
  u64 delta_m_hat = 0;  // (m_hat3 - m_hat1) mod P_{k+1}, constant across pairs
  bool delta_constant = false;
  // The only family separations that can produce a shared exclusion:
  // delta*primorial(k-1) = +2 or -2 (mod P_{k+1}). Either may be out of the
  // valid 1..P_k-1 window; when both exist they sum to P_{k+1}.
  std::optional<u64> delta_m_plus;
  std::optional<u64> delta_m_minus;
  bool delta_sum_ok = false;  // vacuously true unless both exist
  std::vector<SharedExclusion> shared_exclusions;
  bool no_double_share = false;  // no two pairs in a family share both subsets
  u64 twin_pairs_examined = 0;
};

ExclusionPairReport exclusion_analysis(int k, const EnumOptions& opts = {});

// Twin pairs of S_{k-1} with P_k dividing a component (counting a component
// equal to a smaller prime as "prime to itself", which admits (5,7)).
struct TwinFactorBound {
  u64 count = 0;
  u128 bound = 0;      // 2 * n_twin(k-2)
  Rat fraction_bound;  // 2 / (P_{k-1} - 2)
  bool holds = false;
  std::vector<u128> lows;  // the qualifying pairs, ascending
};

TwinFactorBound twin_factor_bound(int k, const EnumOptions& opts = {});

// P_k (P_{k-1} - 4) / ((P_k - 2)(P_{k-1} - 2)) for k >= 4.
Rat subset_ratio_trend(int k);
// Same formula on explicit operands (the published trend table includes rows
// whose operands are not consecutive primes).
Rat subset_ratio_trend_terms(u64 p_k, u64 p_k_minus_1);

}  // namespace primewheel
