#pragma once

#include <vector>

#include "primewheel/int128.hpp"

// The printed cells of the five published tables this project reproduces.
// Literals are stored digit-for-digit (minus thousands separators) so that
// computed values can be compared at the precision actually printed; known
// misprints stay here verbatim and surface as disagreement flags downstream.
namespace primewheel::published {

struct ProspectiveRatioRow {  // table 1: primes vs prospective primes
  int k;
  const char* pi_minus_k;
  const char* n_pp;
  const char* ratio;
};

struct StepRatioRow {  // table 2: the level-to-level ratio approximation
  int k;
  u64 p_k;
  u64 p_k1;
  const char* p_frac;      // P_{k+1}/(P_{k+1}-1)
  const char* primorial;
  const char* alpha;
  const char* alpha_frac;  // alpha/(alpha+1)
  const char* step;
};

struct TwinDensityRow {  // table 3: twin counts and densities
  int k;
  u64 p_k;
  const char* span_end;
  const char* n_twin;
  const char* rho;
  const char* sigma;
};

struct SubsetTrendRow {  // "mintp": trend of P_k(P_{k-1}-4)/((P_k-2)(P_{k-1}-2))
  u64 p_k;
  u64 p_k_minus_1;
  const char* trend;
};

struct TwinBoundRow {  // "bounds": minimum twin counts between P_k and P_{k+1}^2
  int l;
  u64 k;
  const char* bound_floor;
  const char* actual;
  const char* ratio;
};

const std::vector<ProspectiveRatioRow>& table1();  // k = 2..10
const std::vector<StepRatioRow>& table2();         // k = 2..9
const std::vector<TwinDensityRow>& table3();       // k = 3..12
const std::vector<SubsetTrendRow>& table_mintp();
const std::vector<TwinBoundRow>& table_bounds();   // l = 4..8

}  // namespace primewheel::published
