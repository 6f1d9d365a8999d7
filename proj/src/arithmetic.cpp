#include "kkdrop/arithmetic.hpp"

#include <numeric>

namespace kkdrop {

const char* errc_name(Errc code) {
  switch (code) {
    case Errc::NotCoprime: return "NotCoprime";
    case Errc::BadModulus: return "BadModulus";
    case Errc::InvalidAlgebra: return "InvalidAlgebra";
    case Errc::AlgebraMismatch: return "AlgebraMismatch";
    case Errc::NotInGroup: return "NotInGroup";
    case Errc::ModulusNotMultiple: return "ModulusNotMultiple";
    case Errc::NotPositive: return "NotPositive";
    case Errc::NotDecomposable: return "NotDecomposable";
    case Errc::Mismatch: return "Mismatch";
    case Errc::NotTorsionForm: return "NotTorsionForm";
    case Errc::BadMultiplicity: return "BadMultiplicity";
    case Errc::NoSolution: return "NoSolution";
    case Errc::BadTorsionIndex: return "BadTorsionIndex";
    case Errc::Overflow: return "Overflow";
  }
  return "UnknownError";
}

Int checked_add(Int a, Int b) {
  Int r = 0;
  if (__builtin_add_overflow(a, b, &r))
    fail(Errc::Overflow, "integer addition out of range");
  return r;
}

Int checked_sub(Int a, Int b) {
  Int r = 0;
  if (__builtin_sub_overflow(a, b, &r))
    fail(Errc::Overflow, "integer subtraction out of range");
  return r;
}

Int checked_mul(Int a, Int b) {
  Int r = 0;
  if (__builtin_mul_overflow(a, b, &r))
    fail(Errc::Overflow, "integer multiplication out of range");
  return r;
}

Int gcd(Int a, Int b) { return std::gcd(a, b); }

Int lcm(Int a, Int b) {
  if (a == 0 || b == 0) return 0;
  Int aa = a < 0 ? -a : a;
  Int bb = b < 0 ? -b : b;
  return checked_mul(aa / gcd(aa, bb), bb);
}

Int floor_div(Int a, Int b) {
  Int q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

Int floor_mod(Int v, Int mod) {
  Int r = v % mod;
  if (r != 0 && ((r < 0) != (mod < 0))) r += mod;
  return r;
}

Int canonical_residue(Int v, Int p) {
  if (p < 2) fail(Errc::BadModulus, "modulus must be at least 2");
  return floor_mod(v, p);
}

namespace {

// Returns (g, x) with x*a == g (mod b), g = gcd(a, b), for a, b > 0.
std::pair<Int, Int> half_ext_gcd(Int a, Int b) {
  Int x0 = 1, x1 = 0;
  Int r0 = a, r1 = b;
  while (r1 != 0) {
    Int q = r0 / r1;
    Int r2 = r0 - q * r1;
    Int x2 = x0 - q * x1;
    r0 = r1; r1 = r2;
    x0 = x1; x1 = x2;
  }
  return {r0, x0};
}

}  // namespace

BezoutPair bezout_canonical(Int m0, Int m1) {
  if (m0 < 1 || m1 < 1)
    fail(Errc::NotCoprime, "bezout_canonical requires positive arguments");
  if (gcd(m0, m1) != 1)
    fail(Errc::NotCoprime, "endpoint sizes share a common factor");
  Int beta0;
  if (m1 == 1) {
    beta0 = 1;  // the least non-negative solution with beta1 <= 0
  } else {
    auto [g, inv] = half_ext_gcd(m0 % m1, m1);
    (void)g;
    beta0 = floor_mod(inv, m1);
  }
  Int beta1 = (1 - checked_mul(beta0, m0)) / m1;
  return {beta0, beta1};
}

}  // namespace kkdrop
