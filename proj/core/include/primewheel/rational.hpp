#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <string_view>

#include "primewheel/int128.hpp"

namespace primewheel {

// Densities and bounds are kept as exact rationals end to end; rounding
// happens once, at the presentation layer.
using BigInt = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

BigInt to_bigint(u128 v);
u128 to_u128(const BigInt& v);  // throws RangeError if negative or too wide

BigInt floor_rat(const Rat& r);  // floor toward -infinity

// Decimal rendering with round-half-even at `sig_digits` significant digits,
// e.g. 135/2310 at 3 -> "0.0584". Exact: no doubles involved.
std::string decimal(const Rat& r, int sig_digits);

// Fixed decimals after the point (round-half-even), e.g. (43,48,3) -> "0.896".
std::string decimal_fixed(const Rat& r, int decimals);

// Parse a plain decimal literal like ".05834", "1.25", "43" into an exact Rat.
Rat parse_decimal(std::string_view s);

// True when `computed` rounds to the printed decimal: |computed - printed|
// is at most half an ulp of the printed literal's last digit.
bool matches_printed(const Rat& computed, std::string_view printed);
bool matches_printed(double computed, std::string_view printed);

}  // namespace primewheel
