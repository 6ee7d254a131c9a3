#include "doctest.h"

#include <algorithm>
#include <numeric>
#include <set>
#include <vector>

#include "brute.hpp"
#include "primewheel/distribution.hpp"
#include "primewheel/errors.hpp"
#include "primewheel/propagation.hpp"
#include "primewheel/rational.hpp"
#include "primewheel/wheel.hpp"

using namespace primewheel;

TEST_CASE("subset occupancy at level 3 by hand") {
  SubsetStats st = subset_stats(3);
  CHECK(st.counts_pp == std::vector<u64>{1, 2, 2, 1, 2});
  CHECK(st.counts_twin == std::vector<u64>{0, 1, 1, 0, 1});
  CHECK(st.min_pp_bound == 1);
  CHECK(st.min_twin_bound == 0);  // 1 - 2*1 clamps to zero
  CHECK(st.pp_bound_holds);
  CHECK(st.twin_bound_holds);
  CHECK_THROWS_AS(subset_stats(2), RangeError);
}

TEST_CASE("subset minima at levels 4 to 6") {
  struct Expect {
    int k;
    u64 pp_bound, pp_min, twin_bound, twin_min;
  };
  for (Expect e : {Expect{4, 6, 6, 1, 1}, Expect{5, 40, 42, 9, 11}, Expect{6, 432, 442, 105, 112}}) {
    SubsetStats st = subset_stats(e.k);
    CHECK(st.counts_pp.size() == nth_small_prime(e.k));
    CHECK((u64)st.min_pp_bound == e.pp_bound);
    CHECK(st.observed_min_pp == e.pp_min);
    CHECK((u64)st.min_twin_bound == e.twin_bound);
    CHECK(st.observed_min_twin == e.twin_min);
    CHECK(st.pp_bound_holds);
    CHECK(st.twin_bound_holds);
    LevelCounts c = counts(make_level(e.k));
    CHECK(std::accumulate(st.counts_pp.begin(), st.counts_pp.end(), (u64)0) == (u64)c.n_pp);
    CHECK(std::accumulate(st.counts_twin.begin(), st.counts_twin.end(), (u64)0) == (u64)c.n_twin);
  }
}

TEST_CASE("subset zero counts the values that stay coprime") {
  // S_5^(0) keeps the level-4 values not divisible by 11: 48 less the five
  // multiples 11, 121, 143, 187, 209
  SubsetStats st = subset_stats(5);
  CHECK(st.counts_pp[0] == 43);
  u64 survivors = 0;
  for (const auto& pp : enumerate_prospective_primes(4))
    if (pp.value % 11 != 0) survivors++;
  CHECK(st.counts_pp[0] == survivors);
}

TEST_CASE("exclusion analysis at the seed level") {
  ExclusionPairReport rep = exclusion_analysis(2);
  CHECK(rep.p_next == 5);
  CHECK(rep.delta_m_hat == 3);
  CHECK(rep.delta_constant);
  CHECK(rep.twin_pairs_examined == 1);
  CHECK(rep.shared_exclusions.empty());
  // the lone seed family has a single member, so no separation is realizable
  CHECK_FALSE(rep.delta_m_plus.has_value());
  CHECK_FALSE(rep.delta_m_minus.has_value());
  CHECK(rep.delta_sum_ok);
  CHECK(rep.no_double_share);
  CHECK_THROWS_AS(exclusion_analysis(1), RangeError);
}

TEST_CASE("exclusion separation is constant and matches the closed form") {
  for (int k = 2; k <= 7; k++) {
    ExclusionPairReport rep = exclusion_analysis(k);
    CHECK(rep.delta_constant);
    CHECK(rep.no_double_share);
    u64 p = rep.p_next;
    u64 gamma = (u64)(make_level(k).primorial % p);
    CHECK(rep.delta_m_hat == (p - 2 * mod_inverse(gamma, p) % p) % p);
    CHECK(rep.twin_pairs_examined == (k == 2 ? 1 : (u64)counts(make_level(k)).n_twin));
  }
}

TEST_CASE("exclusion analysis at level 3 finds the one overlapping pair") {
  ExclusionPairReport rep = exclusion_analysis(3);
  CHECK(rep.p_next == 7);
  CHECK(rep.delta_m_hat == 6);
  CHECK_FALSE(rep.delta_m_plus.has_value());
  REQUIRE(rep.delta_m_minus.has_value());
  CHECK(*rep.delta_m_minus == 2);
  REQUIRE(rep.shared_exclusions.size() == 1);
  const SharedExclusion& sh = rep.shared_exclusions[0];
  CHECK(sh.parent_low == 5);
  CHECK(sh.low_a == 17);
  CHECK(sh.low_b == 29);
  CHECK(sh.shared_m == 2);
  CHECK(sh.delta_m == 2);
}

TEST_CASE("shared exclusions across the small levels") {
  struct Expect {
    int k;
    std::optional<u64> plus, minus;
    size_t shares;
  };
  std::vector<Expect> table = {
      {4, 3, std::nullopt, 5},
      {5, 1, std::nullopt, 93},
      {6, std::nullopt, 1, 1122},
  };
  for (const Expect& e : table) {
    ExclusionPairReport rep = exclusion_analysis(e.k);
    CHECK(rep.delta_m_plus == e.plus);
    CHECK(rep.delta_m_minus == e.minus);
    CHECK(rep.shared_exclusions.size() == e.shares);
    CHECK(rep.delta_sum_ok);
    // every cataloged overlap sits at one of the two admissible separations
    for (const SharedExclusion& sh : rep.shared_exclusions) {
      bool at_plus = e.plus && sh.delta_m == *e.plus;
      bool at_minus = e.minus && sh.delta_m == *e.minus;
      CHECK((at_plus || at_minus));
    }
  }
}

TEST_CASE("both separations exist at level 7 and sum to the next prime") {
  ExclusionPairReport rep = exclusion_analysis(7);
  REQUIRE(rep.delta_m_plus.has_value());
  REQUIRE(rep.delta_m_minus.has_value());
  CHECK(*rep.delta_m_plus == 4);
  CHECK(*rep.delta_m_minus == 15);
  CHECK(*rep.delta_m_plus + *rep.delta_m_minus == rep.p_next);
  CHECK(rep.delta_sum_ok);
}

TEST_CASE("disallowed residues within one family never repeat") {
  for (int k = 3; k <= 5; k++) {
    for_each_prospective_twin(k - 1, {}, [&](const TwinPair& parent) {
      std::set<u64> m1s, m3s;
      for (const TwinPair& child : extend_twin(parent)) {
        CHECK(m1s.insert(disallowed_m(child.low, k).m_hat).second);
        CHECK(m3s.insert(disallowed_m(child.low + 2, k).m_hat).second);
      }
    });
  }
}

TEST_CASE("twin factor bound counts pairs carrying the next prime") {
  TwinFactorBound tf4 = twin_factor_bound(4);
  CHECK(tf4.lows == std::vector<u128>{5});
  CHECK(tf4.count == 1);
  CHECK(tf4.bound == 2);
  CHECK(tf4.fraction_bound == Rat(2, 3));
  CHECK(tf4.holds);

  TwinFactorBound tf5 = twin_factor_bound(5);
  CHECK(tf5.lows == std::vector<u128>{11, 209});
  CHECK(tf5.bound == 6);
  CHECK(tf5.fraction_bound == Rat(2, 5));
  CHECK(tf5.holds);

  TwinFactorBound tf6 = twin_factor_bound(6);
  CHECK(tf6.count == 22);
  CHECK(tf6.bound == 30);
  CHECK(tf6.holds);
  CHECK(tf6.lows[0] == 11);
  CHECK(tf6.lows[1] == 167);

  CHECK_THROWS_AS(twin_factor_bound(3), RangeError);
}

TEST_CASE("twin factor bound agrees with a direct candidate scan") {
  // Candidates are pairs whose members are each coprime to the lower
  // primorial or equal to one of its primes (admitting the seed pair), with
  // the next prime dividing a member.
  for (int k = 4; k <= 6; k++) {
    WheelLevel lower = make_level(k - 1);
    u64 p_k = nth_small_prime(k);
    auto ok = [&](u64 v) {
      for (u64 q : lower.primes)
        if (v % q == 0 && v != q) return false;
      return true;
    };
    std::vector<u128> expect;
    for (u64 a = 5; a + 2 <= (u64)lower.span_end; a++)
      if (ok(a) && ok(a + 2) && (a % p_k == 0 || (a + 2) % p_k == 0)) expect.push_back(a);
    CHECK(twin_factor_bound(k).lows == expect);
  }
}

TEST_CASE("subset ratio trend") {
  CHECK(subset_ratio_trend(4) == Rat(7, 15));
  CHECK(subset_ratio_trend(5) == Rat(11, 15));
  CHECK(subset_ratio_trend(5) == subset_ratio_trend_terms(11, 7));
  CHECK(subset_ratio_trend_terms(23, 19) == Rat(23 * 15, 21 * 17));
  CHECK(matches_printed(subset_ratio_trend_terms(11, 7), ".73"));
  CHECK(matches_printed(subset_ratio_trend_terms(23, 19), ".966"));
  CHECK(matches_printed(subset_ratio_trend_terms(53, 47), ".993"));
  // the published .991 drops a digit of 9991/9999
  CHECK_FALSE(matches_printed(subset_ratio_trend_terms(103, 101), ".991"));
  CHECK(matches_printed(subset_ratio_trend_terms(103, 101), ".9992"));
  CHECK_THROWS_AS(subset_ratio_trend(3), RangeError);
  CHECK_THROWS_AS(subset_ratio_trend_terms(5, 3), RangeError);
  CHECK_THROWS_AS(subset_ratio_trend_terms(7, 11), RangeError);
}
