#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace primewheel {

// Wide unsigned type for wheel values. Primorials outgrow 64 bits at the
// 16th prime level, so everything value-sized runs through u128.
using u128 = unsigned __int128;
using u64 = std::uint64_t;
using u32 = std::uint32_t;

std::string to_string(u128 v);
u128 parse_u128(std::string_view s);  // throws RangeError on junk or overflow

// Checked arithmetic: throws RangeError instead of wrapping.
u128 checked_add(u128 a, u128 b);
u128 checked_mul(u128 a, u128 b);

u128 isqrt_u128(u128 n);  // floor square root
u128 gcd_u128(u128 a, u128 b);

}  // namespace primewheel
