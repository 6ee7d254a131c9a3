#include "primewheel/int128.hpp"

#include <algorithm>

#include "primewheel/errors.hpp"

namespace primewheel {

std::string to_string(u128 v) {
  if (v == 0) return "0";
  char buf[48];
  int pos = sizeof(buf);
  while (v > 0) {
    buf[--pos] = char('0' + (int)(v % 10));
    v /= 10;
  }
  return std::string(buf + pos, sizeof(buf) - pos);
}

u128 parse_u128(std::string_view s) {
  if (s.empty()) throw RangeError("empty integer literal");
  u128 v = 0;
  for (char c : s) {
    if (c < '0' || c > '9') throw RangeError("bad digit in integer literal: " + std::string(s));
    u128 next = v * 10 + (u128)(c - '0');
    if (next / 10 != v) throw RangeError("integer literal exceeds 128 bits: " + std::string(s));
    v = next;
  }
  return v;
}

u128 checked_add(u128 a, u128 b) {
  u128 r = a + b;
  if (r < a) throw RangeError("128-bit overflow in addition");
  return r;
}

u128 checked_mul(u128 a, u128 b) {
  if (a == 0 || b == 0) return 0;
  u128 r = a * b;
  if (r / a != b) throw RangeError("128-bit overflow in multiplication");
  return r;
}

u128 isqrt_u128(u128 n) {
  if (n < 2) return n;
  // Newton from a long-double seed, then settle exactly. The root fits in
  // 64 bits, so clamping the seed keeps every square below 2^128.
  u128 x = (u128)(__builtin_sqrtl((long double)n)) + 2;
  x = std::min(x, (u128)UINT64_MAX);
  while (x * x > n) x = (x + n / x) / 2;
  while (x < (u128)UINT64_MAX && (x + 1) * (x + 1) <= n) x++;
  return x;
}

u128 gcd_u128(u128 a, u128 b) {
  while (b != 0) {
    u128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

}  // namespace primewheel
