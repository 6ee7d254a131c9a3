#pragma once

#include "primewheel/int128.hpp"

namespace primewheel {

// Coordinates of N >= 5 in the repeating 6-number block: value = 5 + 6n + (i-1).
// Positions i=1 (6n+5) and i=3 (6n+7) are the only slots coprime to 6.
struct SequencePos {
  u128 n = 0;
  int i = 1;  // 1..6, 1-based as indexed throughout

  bool operator==(const SequencePos&) const = default;
};

enum class Progression {
  Prog1,       // N = 6n+5
  Prog2,       // N = 6n+7
  NonCoprime,  // divisible by 2 or 3
};

SequencePos to_sequence_pos(u128 value);     // value >= 5, else RangeError
u128 from_sequence_pos(const SequencePos& p);

// Closed-form position of value(a)*value(b); both inputs must sit at i=1 or
// i=3. Equals to_sequence_pos(value(a)*value(b)) by construction.
SequencePos product_pos(const SequencePos& a, const SequencePos& b);

Progression progression_class(u128 value);
const char* progression_name(Progression p);

}  // namespace primewheel
