#pragma once

#include <stdexcept>
#include <string>

namespace primewheel {

// Out-of-range request: value overflows the 128-bit value type, exceeds the
// sieve ceiling, or exceeds the enumeration cap. CLI maps this to exit 3.
class RangeError : public std::runtime_error {
 public:
  explicit RangeError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace primewheel
