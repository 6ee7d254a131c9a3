#include "doctest.h"

#include <cstdint>
#include <random>

#include "primewheel/errors.hpp"
#include "primewheel/int128.hpp"

using namespace primewheel;

TEST_CASE("u128 decimal round-trip") {
  CHECK(to_string((u128)0) == "0");
  CHECK(to_string((u128)5) == "5");
  CHECK(to_string((u128)UINT64_MAX) == "18446744073709551615");
  u128 max = ~(u128)0;
  CHECK(to_string(max) == "340282366920938463463374607431768211455");
  CHECK(parse_u128("340282366920938463463374607431768211455") == max);
  CHECK(parse_u128("0") == 0);

  std::mt19937_64 rng(42);
  for (int i = 0; i < 1000; i++) {
    u128 v = ((u128)rng() << 64) | rng();
    CHECK(parse_u128(to_string(v)) == v);
  }
}

TEST_CASE("parse_u128 rejects junk and overflow") {
  CHECK_THROWS_AS(parse_u128(""), RangeError);
  CHECK_THROWS_AS(parse_u128("12x"), RangeError);
  CHECK_THROWS_AS(parse_u128("-3"), RangeError);
  CHECK_THROWS_AS(parse_u128("340282366920938463463374607431768211456"), RangeError);
}

TEST_CASE("checked arithmetic throws instead of wrapping") {
  u128 max = ~(u128)0;
  CHECK(checked_add(max - 1, 1) == max);
  CHECK_THROWS_AS(checked_add(max, 1), RangeError);
  CHECK(checked_mul((u128)1 << 64, (u128)1 << 63) == (u128)1 << 127);
  CHECK_THROWS_AS(checked_mul((u128)1 << 64, (u128)1 << 64), RangeError);
  CHECK(checked_mul(0, max) == 0);
  CHECK(checked_mul(1, max) == max);
}

TEST_CASE("isqrt_u128 floors exactly") {
  CHECK(isqrt_u128(0) == 0);
  CHECK(isqrt_u128(1) == 1);
  CHECK(isqrt_u128(24) == 4);
  CHECK(isqrt_u128(25) == 5);
  CHECK(isqrt_u128(26) == 5);
  CHECK(isqrt_u128(~(u128)0) == UINT64_MAX);

  std::mt19937_64 rng(7);
  for (int i = 0; i < 2000; i++) {
    u128 x = rng();
    if (x == 0) continue;
    u128 sq = x * x;
    CHECK(isqrt_u128(sq) == x);
    CHECK(isqrt_u128(sq - 1) == x - 1);
  }
}

TEST_CASE("gcd_u128") {
  CHECK(gcd_u128(0, 5) == 5);
  CHECK(gcd_u128(5, 0) == 5);
  CHECK(gcd_u128(30030, 77) == 77);
  CHECK(gcd_u128(510510, 121) == 11);
  CHECK(gcd_u128(7, 30) == 1);
  CHECK(gcd_u128((u128)1 << 100, (u128)1 << 64) == (u128)1 << 64);
}
