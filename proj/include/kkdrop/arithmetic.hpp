#pragma once

#include <cstdint>

#include "kkdrop/errors.hpp"

namespace kkdrop {

using Int = std::int64_t;

// Machine-range integers only; these throw Errc::Overflow instead of wrapping.
Int checked_add(Int a, Int b);
Int checked_sub(Int a, Int b);
Int checked_mul(Int a, Int b);

// Non-negative gcd; gcd(0, 0) == 0.
Int gcd(Int a, Int b);
Int lcm(Int a, Int b);

// Floored quotient/remainder: floor_mod(v, mod) lies in [0, mod), mod >= 1.
Int floor_div(Int a, Int b);
Int floor_mod(Int v, Int mod);

// Representative of v mod p in [0, p); requires p >= 2.
Int canonical_residue(Int v, Int p);

struct BezoutPair {
  Int beta0;  // minimal >= 0
  Int beta1;  // <= 0

  friend bool operator==(const BezoutPair&, const BezoutPair&) = default;
};

// The unique pair with beta0*m0 + beta1*m1 == 1, beta0 >= 0 minimal and
// beta1 <= 0.  Requires m0, m1 positive and coprime.
BezoutPair bezout_canonical(Int m0, Int m1);

}  // namespace kkdrop
