#include <doctest.h>

#include <cstdint>
#include <limits>
#include <numeric>

#include "kkdrop/arithmetic.hpp"
#include "kkdrop/errors.hpp"
#include "test_util.hpp"

using namespace kkdrop;
using test::error_code;

namespace {

// Reference search for the canonical Bezout pair: smallest beta0 >= 0 with
// beta0*m0 + beta1*m1 == 1 and beta1 <= 0.  Used as an independent oracle.
BezoutPair bezout_by_scan(Int m0, Int m1) {
  for (Int b0 = 0;; ++b0) {
    Int rest = 1 - b0 * m0;
    if (rest % m1 == 0 && rest / m1 <= 0) return {b0, rest / m1};
  }
}

}  // namespace

TEST_CASE("checked arithmetic") {
  CHECK(checked_add(2, 3) == 5);
  CHECK(checked_sub(2, 3) == -1);
  CHECK(checked_mul(-4, 5) == -20);

  const Int big = std::numeric_limits<Int>::max();
  CHECK(error_code([&] { checked_add(big, 1); }) == Errc::Overflow);
  CHECK(error_code([&] { checked_sub(-big, 2); }) == Errc::Overflow);
  CHECK(error_code([&] { checked_mul(big, 2); }) == Errc::Overflow);
}

TEST_CASE("gcd and lcm") {
  CHECK(gcd(12, 12) == 12);
  CHECK(gcd(36, 6) == 6);
  CHECK(gcd(12, 2) == 2);
  CHECK(gcd(0, 5) == 5);
  CHECK(gcd(-4, 6) == 2);

  CHECK(lcm(4, 6) == 12);
  CHECK(lcm(12, 24) == 24);
  CHECK(lcm(0, 7) == 0);
  CHECK(lcm(-4, 6) == 12);
}

TEST_CASE("floor division and remainder") {
  CHECK(floor_div(7, 2) == 3);
  CHECK(floor_div(-7, 2) == -4);
  CHECK(floor_div(7, -2) == -4);
  CHECK(floor_mod(-7, 2) == 1);
  CHECK(floor_mod(7, 2) == 1);
  CHECK(floor_mod(7, -2) == -1);

  // remainder carries the divisor's sign, so q pairs with floor_div
  for (Int a = -25; a <= 25; ++a)
    for (Int b : {-7, -3, -2, 2, 3, 7}) {
      const Int q = floor_div(a, b);
      const Int r = floor_mod(a, b);
      CHECK(q * b + r == a);
      if (b > 0) {
        CHECK(r >= 0);
        CHECK(r < b);
      } else {
        CHECK(r <= 0);
        CHECK(r > b);
      }
    }
}

TEST_CASE("canonical residues") {
  CHECK(canonical_residue(-4, 12) == 8);
  CHECK(canonical_residue(0, 5) == 0);
  CHECK(canonical_residue(24, 12) == 0);

  CHECK(error_code([] { canonical_residue(3, 1); }) == Errc::BadModulus);
  CHECK(error_code([] { canonical_residue(3, 0); }) == Errc::BadModulus);
  CHECK(error_code([] { canonical_residue(3, -5); }) == Errc::BadModulus);

  for (Int a = -30; a <= 30; ++a)
    for (Int p : {2, 3, 12, 17}) {
      const Int r = canonical_residue(a, p);
      CHECK(r >= 0);
      CHECK(r < p);
      CHECK((a - r) % p == 0);
      CHECK(canonical_residue(r, p) == r);
    }
}

TEST_CASE("canonical Bezout pairs") {
  CHECK(bezout_canonical(2, 3) == BezoutPair{2, -1});
  CHECK(bezout_canonical(1, 1) == BezoutPair{1, 0});
  CHECK(bezout_canonical(3, 4) == BezoutPair{3, -2});
  CHECK(bezout_canonical(5, 1) == BezoutPair{1, -4});

  CHECK(error_code([] { bezout_canonical(2, 4); }) == Errc::NotCoprime);
  CHECK(error_code([] { bezout_canonical(0, 3); }) == Errc::NotCoprime);
  CHECK(error_code([] { bezout_canonical(2, -3); }) == Errc::NotCoprime);

  for (Int m0 = 1; m0 <= 50; ++m0)
    for (Int m1 = 1; m1 <= 50; ++m1) {
      if (std::gcd(m0, m1) != 1) continue;
      const BezoutPair b = bezout_canonical(m0, m1);
      CHECK(b.beta0 * m0 + b.beta1 * m1 == 1);
      CHECK(b.beta0 >= 0);
      CHECK(b.beta1 <= 0);
      CHECK(b == bezout_by_scan(m0, m1));
    }
}
