#include "primewheel/sequence.hpp"

#include "primewheel/errors.hpp"

namespace primewheel {

SequencePos to_sequence_pos(u128 value) {
  if (value < 5) throw RangeError("sequence positions start at 5, got " + to_string(value));
  u128 off = value - 5;
  return SequencePos{off / 6, (int)(off % 6) + 1};
}

u128 from_sequence_pos(const SequencePos& p) {
  if (p.i < 1 || p.i > 6) throw RangeError("sequence position index out of 1..6");
  return checked_add(checked_add(5, checked_mul(6, p.n)), (u128)(p.i - 1));
}

SequencePos product_pos(const SequencePos& a, const SequencePos& b) {
  bool a1 = a.i == 1, b1 = b.i == 1;
  if ((a.i != 1 && a.i != 3) || (b.i != 1 && b.i != 3))
    throw RangeError("product rules cover positions 1 and 3 only");
  u128 cross = checked_mul(6, checked_mul(a.n, b.n));
  if (a1 && b1)  // (6n+5)(6m+5) = 6(6nm+5n+5m+3) + 7
    return SequencePos{checked_add(cross, checked_add(checked_mul(5, checked_add(a.n, b.n)), 3)), 3};
  if (!a1 && !b1)  // (6n+7)(6m+7) = 6(6nm+7n+7m+7) + 7
    return SequencePos{checked_add(cross, checked_add(checked_mul(7, checked_add(a.n, b.n)), 7)), 3};
  const SequencePos& p1 = a1 ? a : b;  // (6n+5)(6m+7) = 6(6nm+7n+5m+5) + 5
  const SequencePos& p3 = a1 ? b : a;
  u128 n = checked_add(cross, checked_add(checked_mul(7, p1.n), checked_add(checked_mul(5, p3.n), 5)));
  return SequencePos{n, 1};
}

Progression progression_class(u128 value) {
  switch ((int)(value % 6)) {
    case 5: return Progression::Prog1;
    case 1: return Progression::Prog2;
    default: return Progression::NonCoprime;
  }
}

const char* progression_name(Progression p) {
  switch (p) {
    case Progression::Prog1: return "prog1";
    case Progression::Prog2: return "prog2";
    default: return "noncoprime";
  }
}

}  // namespace primewheel
