#pragma once

#include "primewheel/int128.hpp"
#include "primewheel/rational.hpp"

namespace primewheel {

class PrimeOracle;

// One evaluation of the twin lower bound on the interval (P_k, P_{k+1}^2),
// where k = pi(floor(sqrt(primorial(l)))).
struct BoundReport {
  int l = 0;
  u64 k = 0;
  u64 p_k = 0;
  u64 p_k1 = 0;         // P_{k+1}
  Rat bound_exact;      // prod_{j=l}^{k-1} (P_j-4)/(P_j-2) * n_twin(l)
  BigInt bound_floor;
  u64 actual = 0;       // sieved twin pairs, strict interval
  Rat ratio;            // bound_floor / actual, the published convention
};

u64 k_for_l(int l, PrimeOracle& oracle);  // l >= 4

BoundReport twin_lower_bound(int l, PrimeOracle& oracle);

struct GrowthCheck {
  int l = 0;
  Rat factor_exact;         // ((P_l-2)(P_{l+1}-2)/(P_l-4)) * prod_{j=k}^{k'-1} (P_j-4)/(P_j-2)
  double bracket_estimate;  // 1 - 2/(P_k-2) - 2*sqrt(P_{l+1})/ln(P_k); heuristic, may be <= 0
  bool passes = false;      // bound_floor(l+1) > bound_floor(l)
};

// Step l -> l+1: the exact growth factor of the bound, the proof sketch's
// bracket estimate (diagnostic only), and whether the floored bound grew.
GrowthCheck growth_check(int l, PrimeOracle& oracle);

// Least l >= 4 whose interval start P_k exceeds n, with that interval's report.
BoundReport find_twin_above(u128 n, PrimeOracle& oracle);

}  // namespace primewheel
