#include "primewheel/propagation.hpp"

#include "primewheel/errors.hpp"
#include "primewheel/prime_oracle.hpp"
#include "primewheel/wheel.hpp"

namespace primewheel {

u64 mod_inverse(u64 a, u64 m) {
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = (std::int64_t)m, new_r = (std::int64_t)(a % m);
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    std::int64_t tmp = t - q * new_t;
    t = new_t; new_t = tmp;
    tmp = r - q * new_r;
    r = new_r; new_r = tmp;
  }
  if (r != 1) throw RangeError("not invertible: gcd(" + std::to_string(a) + ", " + std::to_string(m) + ") != 1");
  if (t < 0) t += (std::int64_t)m;
  return (u64)t;
}

ProspectivePrime make_prospective(u128 value, int level) {
  Progression cls = progression_class(value);
  if (cls == Progression::NonCoprime)
    throw RangeError("not a coprime slot: " + to_string(value));
  return ProspectivePrime{value, level, cls, (value - 5) / 6, std::nullopt};
}

TwinPair make_twin(u128 low, int level) {
  if (low % 6 != 5) throw RangeError("twin low must be 6n+5, got " + to_string(low));
  return TwinPair{low, level, (low - 5) / 6};
}

DisallowedResidue disallowed_m(u128 p_tilde, int k) {
  WheelLevel lv = make_level(k);
  u64 p_next = nth_small_prime(k + 1);
  u64 beta = (u64)(p_tilde % p_next);
  u64 gamma = (u64)(lv.primorial % p_next);
  u64 m_hat = beta == 0 ? 0 : (u64)((u128)(p_next - beta) * mod_inverse(gamma, p_next) % p_next);
  // alpha makes the quotient integral: alpha*P = beta + m_hat*gamma.
  u64 alpha = (u64)(((u128)m_hat * gamma + beta) / p_next);
  return DisallowedResidue{m_hat, alpha, beta, gamma};
}

namespace {

// Closed-form stream sizes, for the cap guards.
u128 count_pp(int k) { return counts(make_level(k)).n_pp; }
u128 count_twin(int k) { return counts(make_level(k)).n_twin; }

void check_cap(u128 items, const EnumOptions& opts, const char* what) {
  if (items > opts.cap)
    throw RangeError(std::string(what) + " stream of " + to_string(items) +
                     " items exceeds cap " + to_string(opts.cap));
}

// Primality flags for odd values in [5, span_end], bit (v-5)/2.
std::vector<bool> primality_map(PrimeOracle& oracle, u128 span_end);

std::vector<u128> prospective_values(int k, const EnumOptions& opts) {
  if (k == 2) return {5, 7};
  std::vector<u128> prev = prospective_values(k - 1, opts);
  WheelLevel lower = make_level(k - 1);
  u64 p = nth_small_prime(k);
  u64 inv = mod_inverse((u64)(lower.primorial % p), p);
  std::vector<u128> out;
  out.reserve(prev.size() * (p - 1));
  for (u64 m = 0; m < p; m++) {
    u128 shift = (u128)m * lower.primorial;
    for (u128 v : prev) {
      u64 m_hat = (u64)((u128)(p - (u64)(v % p)) * inv % p) % p;
      if (m != m_hat) out.push_back(v + shift);
    }
  }
  return out;
}

}  // namespace

std::vector<ProspectivePrime> extend_prime(const ProspectivePrime& p) {
  WheelLevel lv = make_level(p.level);
  u64 p_next = nth_small_prime(p.level + 1);
  DisallowedResidue ex = disallowed_m(p.value, p.level);
  std::vector<ProspectivePrime> out;
  out.reserve(p_next - 1);
  for (u64 m = 0; m < p_next; m++) {
    if (m == ex.m_hat) continue;
    u128 v = checked_add(p.value, checked_mul((u128)m, lv.primorial));
    out.push_back(make_prospective(v, p.level + 1));
  }
  return out;
}

std::vector<TwinPair> extend_twin(const TwinPair& t) {
  WheelLevel lv = make_level(t.level);
  u64 p_next = nth_small_prime(t.level + 1);
  DisallowedResidue ex1 = disallowed_m(t.low, t.level);
  DisallowedResidue ex3 = disallowed_m(t.low + 2, t.level);
  std::vector<TwinPair> out;
  out.reserve(p_next - 2);
  for (u64 m = 0; m < p_next; m++) {
    if (m == ex1.m_hat || m == ex3.m_hat) continue;
    u128 low = checked_add(t.low, checked_mul((u128)m, lv.primorial));
    out.push_back(make_twin(low, t.level + 1));
  }
  return out;
}

namespace {

std::vector<bool> primality_map(PrimeOracle& oracle, u128 span_end) {
  if (span_end > (u128)oracle.options().ceiling)
    throw RangeError("primality marking needs sieve up to " + to_string(span_end) +
                     ", beyond the configured ceiling");
  u64 end = (u64)span_end;
  std::vector<bool> odd((end - 5) / 2 + 1, false);
  oracle.for_each_prime(5, end, [&](u64 q) {
    if (q % 2 == 1) odd[(q - 5) / 2] = true;
  });
  return odd;
}

}  // namespace

void for_each_prospective_prime(int k, const EnumOptions& opts,
                                const std::function<void(const ProspectivePrime&)>& fn) {
  if (k < 2) throw RangeError("enumeration starts at level 2");
  check_cap(count_pp(k), opts, "prospective-prime");

  std::vector<bool> primes;
  if (opts.oracle) primes = primality_map(*opts.oracle, make_level(k).span_end);

  auto emit = [&](u128 v) {
    ProspectivePrime pp = make_prospective(v, k);
    if (opts.oracle) pp.is_actual_prime = primes[(size_t)((v - 5) / 2)];
    fn(pp);
  };

  if (k == 2) {
    emit(5);
    emit(7);
    return;
  }
  std::vector<u128> prev = prospective_values(k - 1, opts);
  WheelLevel lower = make_level(k - 1);
  u64 p = nth_small_prime(k);
  u64 inv = mod_inverse((u64)(lower.primorial % p), p);
  for (u64 m = 0; m < p; m++) {
    u128 shift = (u128)m * lower.primorial;
    for (u128 v : prev) {
      u64 m_hat = (u64)((u128)(p - (u64)(v % p)) * inv % p) % p;
      if (m != m_hat) emit(v + shift);
    }
  }
}

void for_each_prospective_twin(int k, const EnumOptions& opts,
                               const std::function<void(const TwinPair&)>& fn) {
  if (k < 2) throw RangeError("enumeration starts at level 2");
  check_cap(count_twin(k), opts, "prospective-twin");
  if (k == 2) {
    fn(make_twin(5, 2));
    return;
  }

  // Same subset-streaming scheme as the prime enumeration, with two
  // excluded residues per parent.
  std::function<std::vector<u128>(int)> lows_at = [&](int level) -> std::vector<u128> {
    if (level == 2) return {5};
    std::vector<u128> prev = lows_at(level - 1);
    WheelLevel lower = make_level(level - 1);
    u64 p = nth_small_prime(level);
    u64 inv = mod_inverse((u64)(lower.primorial % p), p);
    std::vector<u128> out;
    out.reserve(prev.size() * (p - 2));
    for (u64 m = 0; m < p; m++) {
      u128 shift = (u128)m * lower.primorial;
      for (u128 low : prev) {
        u64 ex1 = (u64)((u128)(p - (u64)(low % p)) * inv % p) % p;
        u64 ex3 = (u64)((u128)(p - (u64)((low + 2) % p)) * inv % p) % p;
        if (m != ex1 && m != ex3) out.push_back(low + shift);
      }
    }
    return out;
  };

  std::vector<u128> prev = lows_at(k - 1);
  WheelLevel lower = make_level(k - 1);
  u64 p = nth_small_prime(k);
  u64 inv = mod_inverse((u64)(lower.primorial % p), p);
  for (u64 m = 0; m < p; m++) {
    u128 shift = (u128)m * lower.primorial;
    for (u128 low : prev) {
      u64 ex1 = (u64)((u128)(p - (u64)(low % p)) * inv % p) % p;
      u64 ex3 = (u64)((u128)(p - (u64)((low + 2) % p)) * inv % p) % p;
      if (m != ex1 && m != ex3) fn(make_twin(low + shift, k));
    }
  }
}

std::vector<ProspectivePrime> enumerate_prospective_primes(int k, const EnumOptions& opts) {
  std::vector<ProspectivePrime> out;
  for_each_prospective_prime(k, opts, [&](const ProspectivePrime& p) { out.push_back(p); });
  return out;
}

std::vector<TwinPair> enumerate_prospective_twins(int k, const EnumOptions& opts) {
  std::vector<TwinPair> out;
  for_each_prospective_twin(k, opts, [&](const TwinPair& t) { out.push_back(t); });
  return out;
}

FamilyTree family_tree(const TwinPair& seed, int to_level, const EnumOptions& opts) {
  if (to_level < seed.level) throw RangeError("family tree target level below seed level");
  u128 nodes = 1, width = 1;
  for (int j = seed.level + 1; j <= to_level; j++) {
    width = checked_mul(width, nth_small_prime(j) - 2);
    nodes = checked_add(nodes, width);
  }
  check_cap(nodes, opts, "family-tree");

  FamilyTree root{seed, {}};
  if (seed.level == to_level) return root;
  for (const TwinPair& child : extend_twin(seed)) {
    EnumOptions unlimited = opts;
    unlimited.cap = ~(u128)0;  // the root-level guard already covered the whole tree
    root.children.push_back(family_tree(child, to_level, unlimited));
  }
  return root;
}

}  // namespace primewheel
