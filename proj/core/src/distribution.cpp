#include "primewheel/distribution.hpp"

#include <algorithm>

#include "primewheel/errors.hpp"
#include "primewheel/wheel.hpp"

namespace primewheel {

SubsetStats subset_stats(int k, const EnumOptions& opts) {
  if (k < 3) throw RangeError("subset stats need k >= 3 (bounds reference levels k-1, k-2)");
  WheelLevel lower = make_level(k - 1);
  u64 p = nth_small_prime(k);

  SubsetStats st;
  st.k = k;
  st.counts_pp.assign(p, 0);
  st.counts_twin.assign(p, 0);
  for_each_prospective_prime(k, opts, [&](const ProspectivePrime& pp) {
    st.counts_pp[(u64)((pp.value - 5) / lower.primorial)]++;
  });
  for_each_prospective_twin(k, opts, [&](const TwinPair& t) {
    st.counts_twin[(u64)((t.low - 5) / lower.primorial)]++;
  });

  LevelCounts c1 = counts(lower);
  LevelCounts c2 = counts(make_level(k - 2));
  st.min_pp_bound = c1.n_pp - c2.n_pp;
  st.min_twin_bound = c1.n_twin > 2 * c2.n_twin ? c1.n_twin - 2 * c2.n_twin : 0;
  st.observed_min_pp = *std::min_element(st.counts_pp.begin(), st.counts_pp.end());
  st.observed_min_twin = *std::min_element(st.counts_twin.begin(), st.counts_twin.end());
  st.pp_bound_holds = (u128)st.observed_min_pp >= st.min_pp_bound;
  st.twin_bound_holds = (u128)st.observed_min_twin >= st.min_twin_bound;
  return st;
}

ExclusionPairReport exclusion_analysis(int k, const EnumOptions& opts) {
  if (k < 2) throw RangeError("exclusion analysis starts at level 2");
  u64 p_next = nth_small_prime(k + 1);

  ExclusionPairReport rep;
  rep.k = k;
  rep.p_next = p_next;

  // Families: the level-k children of each level-(k-1) twin. Level 2 is the
  // lone seed (5,7) forming its own family.
  std::vector<std::vector<TwinPair>> families;
  if (k == 2) {
    families.push_back({make_twin(5, 2)});
  } else {
    for_each_prospective_twin(k - 1, opts, [&](const TwinPair& parent) {
      families.push_back(extend_twin(parent));
    });
  }

  bool first = true;
  rep.delta_constant = true;
  rep.no_double_share = true;
  u128 parent_primorial = k >= 3 ? make_level(k - 1).primorial : 0;

  for (const auto& family : families) {
    std::vector<std::pair<u64, u64>> excl;  // (m_hat1, m_hat3) per member
    excl.reserve(family.size());
    for (const TwinPair& t : family) {
      u64 m1 = disallowed_m(t.low, k).m_hat;
      u64 m3 = disallowed_m(t.low + 2, k).m_hat;
      u64 delta = (m3 + p_next - m1) % p_next;
      if (first) {
        rep.delta_m_hat = delta;
        first = false;
      } else if (delta != rep.delta_m_hat) {
        rep.delta_constant = false;
      }
      excl.emplace_back(m1, m3);
      rep.twin_pairs_examined++;
    }
    for (size_t a = 0; a < family.size(); a++) {
      for (size_t b = a + 1; b < family.size(); b++) {
        int shared = 0;
        u64 shared_m = 0;
        for (u64 ma : {excl[a].first, excl[a].second})
          for (u64 mb : {excl[b].first, excl[b].second})
            if (ma == mb) { shared++; shared_m = ma; }
        if (shared >= 2) rep.no_double_share = false;
        if (shared == 1) {
          u128 parent_low = k >= 3 ? family[a].low - ((family[a].low - 5) / parent_primorial) * parent_primorial
                                   : family[a].low;
          u64 dm = (u64)((family[b].low - family[a].low) / (k >= 3 ? parent_primorial : 1));
          rep.shared_exclusions.push_back(
              SharedExclusion{parent_low, family[a].low, family[b].low, shared_m, dm});
        }
      }
    }
  }

  // delta*Q = +-2 (mod P_{k+1}) with Q = primorial(k-1); representative must
  // fall inside the family width 1..P_k-1 to be realizable.
  u64 q_mod = k >= 3 ? (u64)(parent_primorial % p_next) : 1 % p_next;
  u64 inv = mod_inverse(q_mod, p_next);
  u64 plus = (u64)((u128)2 * inv % p_next);
  u64 minus = (p_next - plus) % p_next;
  u64 family_width = k >= 3 ? nth_small_prime(k) : 1;
  if (plus != 0 && plus < family_width) rep.delta_m_plus = plus;
  if (minus != 0 && minus < family_width) rep.delta_m_minus = minus;
  rep.delta_sum_ok = !(rep.delta_m_plus && rep.delta_m_minus) ||
                     *rep.delta_m_plus + *rep.delta_m_minus == p_next;
  return rep;
}

TwinFactorBound twin_factor_bound(int k, const EnumOptions& opts) {
  if (k < 4) throw RangeError("twin factor bound needs k >= 4");
  WheelLevel lower = make_level(k - 1);
  if (lower.primorial > opts.cap)
    throw RangeError("factor scan over " + to_string(lower.primorial) +
                     " values exceeds cap " + to_string(opts.cap));
  u64 p_k = nth_small_prime(k);

  // A component equal to one of P_1..P_{k-1} counts as coprime to itself;
  // everything else must avoid all of them. That convention is what lets the
  // seed pair (5,7) carry the factor 7 at the k=4 step.
  auto coprime_or_self = [&](u128 v) {
    for (u64 q : lower.primes)
      if (v % q == 0 && v != q) return false;
    return true;
  };

  TwinFactorBound out;
  u128 span_end = lower.span_end;
  for (u128 mult = p_k; mult <= span_end; mult += p_k) {
    for (u128 low : {mult, mult >= 2 ? mult - 2 : (u128)0}) {
      if (low < 5 || low + 2 > span_end) continue;
      if (coprime_or_self(low) && coprime_or_self(low + 2)) out.lows.push_back(low);
    }
  }
  std::sort(out.lows.begin(), out.lows.end());
  out.count = out.lows.size();
  out.bound = 2 * counts(make_level(k - 2)).n_twin;
  out.fraction_bound = Rat(2, nth_small_prime(k - 1) - 2);
  out.holds = (u128)out.count <= out.bound;
  return out;
}

Rat subset_ratio_trend(int k) {
  if (k < 4) throw RangeError("trend ratio needs k >= 4");
  return subset_ratio_trend_terms(nth_small_prime(k), nth_small_prime(k - 1));
}

Rat subset_ratio_trend_terms(u64 p_k, u64 p_k_minus_1) {
  if (p_k_minus_1 < 5 || p_k <= p_k_minus_1)
    throw RangeError("trend ratio operands out of range");
  return Rat(BigInt(p_k) * (p_k_minus_1 - 4), BigInt(p_k - 2) * (p_k_minus_1 - 2));
}

}  // namespace primewheel
