#include "primewheel/rational.hpp"

#include <cmath>

#include "primewheel/errors.hpp"

namespace primewheel {

BigInt to_bigint(u128 v) {
  BigInt hi = (u64)(v >> 64);
  return (hi << 64) | (u64)v;
}

u128 to_u128(const BigInt& v) {
  if (v < 0) throw RangeError("negative value where unsigned expected");
  if (v >> 128 != 0) throw RangeError("value exceeds 128 bits: " + v.str());
  u128 hi = (u64)(BigInt(v >> 64));
  u128 lo = (u64)(BigInt(v & BigInt(UINT64_MAX)));
  return (hi << 64) | lo;
}

BigInt floor_rat(const Rat& r) {
  BigInt n = numerator(r), d = denominator(r);
  BigInt q = n / d;
  if (n < 0 && q * d != n) q -= 1;
  return q;
}

namespace {

BigInt pow10(int e) {
  BigInt v = 1;
  for (int i = 0; i < e; i++) v *= 10;
  return v;
}

// Round n/d to the nearest integer, ties to even.
BigInt round_half_even(const BigInt& n, const BigInt& d) {
  BigInt q = n / d, r = n - q * d;  // n, d >= 0 here
  BigInt twice = r * 2;
  if (twice > d || (twice == d && q % 2 != 0)) q += 1;
  return q;
}

}  // namespace

std::string decimal(const Rat& r, int sig_digits) {
  if (sig_digits < 1) sig_digits = 1;
  bool neg = r < 0;
  Rat a = neg ? Rat(-r) : r;
  if (a == 0) return "0";

  // Decimal exponent e: largest with 10^e <= a.
  int e = 0;
  if (a >= 1) {
    while (Rat(pow10(e + 1)) <= a) e++;
  } else {
    e = -1;
    while (a * pow10(-e) < 1) e--;
  }

  // Scale so the rounded mantissa has sig_digits digits.
  int shift = sig_digits - 1 - e;
  BigInt n = numerator(a), d = denominator(a);
  if (shift >= 0) n *= pow10(shift); else d *= pow10(-shift);
  BigInt m = round_half_even(n, d);
  std::string digits = m.str();
  if ((int)digits.size() > sig_digits) {  // rounding carried: 999.5 -> 1000
    e++;
    digits.pop_back();
  }

  std::string out;
  if (e >= sig_digits - 1) {           // integer, maybe with trailing zeros
    out = digits + std::string(e - sig_digits + 1, '0');
  } else if (e >= 0) {                 // point inside the digits
    out = digits.substr(0, e + 1) + "." + digits.substr(e + 1);
  } else {                             // leading "0.00..." form
    out = "0." + std::string(-e - 1, '0') + digits;
  }
  return neg ? "-" + out : out;
}

std::string decimal_fixed(const Rat& r, int decimals) {
  bool neg = r < 0;
  Rat a = neg ? Rat(-r) : r;
  BigInt scaled = round_half_even(numerator(a) * pow10(decimals), denominator(a));
  std::string digits = scaled.str();
  if ((int)digits.size() <= decimals) digits.insert(0, decimals + 1 - digits.size(), '0');
  std::string out = decimals == 0
      ? digits
      : digits.substr(0, digits.size() - decimals) + "." + digits.substr(digits.size() - decimals);
  return neg ? "-" + out : out;
}

Rat parse_decimal(std::string_view s) {
  if (s.empty()) throw RangeError("empty decimal literal");
  bool neg = false;
  size_t i = 0;
  if (s[0] == '-' || s[0] == '+') { neg = s[0] == '-'; i = 1; }
  BigInt num = 0;
  int decimals = 0;
  bool seen_point = false, seen_digit = false;
  for (; i < s.size(); i++) {
    char c = s[i];
    if (c == '.') {
      if (seen_point) throw RangeError("bad decimal literal: " + std::string(s));
      seen_point = true;
    } else if (c >= '0' && c <= '9') {
      num = num * 10 + (c - '0');
      if (seen_point) decimals++;
      seen_digit = true;
    } else {
      throw RangeError("bad decimal literal: " + std::string(s));
    }
  }
  if (!seen_digit) throw RangeError("bad decimal literal: " + std::string(s));
  Rat r(num, pow10(decimals));
  return neg ? Rat(-r) : r;
}

namespace {

int decimals_of(std::string_view printed) {
  size_t p = printed.find('.');
  return p == std::string_view::npos ? 0 : (int)(printed.size() - p - 1);
}

}  // namespace

bool matches_printed(const Rat& computed, std::string_view printed) {
  Rat p = parse_decimal(printed);
  Rat half_ulp(1, 2 * pow10(decimals_of(printed)));
  Rat diff = computed - p;
  if (diff < 0) diff = -diff;
  return diff <= half_ulp;
}

bool matches_printed(double computed, std::string_view printed) {
  double p = std::stod(std::string(printed));
  double half_ulp = 0.5 * std::pow(10.0, -decimals_of(printed));
  // Small slack: `computed` came through doubles, the literal did not.
  return std::fabs(computed - p) <= half_ulp * (1 + 1e-9) + 1e-12;
}

}  // namespace primewheel
