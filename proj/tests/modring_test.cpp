#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "quadcong/base.hpp"
#include "quadcong/modring.hpp"

#include <cstdint>

using namespace quadcong;

TEST_CASE("mulmod and powmod near the modulus cap") {
    u64 m = kMaxModulus;  // 2^62
    u64 a = m - 1;
    CHECK(mulmod(a, a, m) == 1);  // (-1)^2
    CHECK(powmod(a, 3, m) == m - 1);
    CHECK(powmod(2, 62, m) == 0);
    CHECK(powmod(7, 0, m) == 1);
}

TEST_CASE("invmod agrees with Fermat on a prime modulus") {
    u64 p = 1000003;
    for (u64 a : {u64(1), u64(2), u64(12345), p - 1}) {
        u64 inv = invmod(a, p);
        CHECK(mulmod(a, inv, p) == 1);
        CHECK(inv == powmod(a, p - 2, p));
    }
    CHECK_THROWS_AS(invmod(0, p), NotInvertible);
    CHECK_THROWS_AS(invmod(6, 9), NotInvertible);
}

TEST_CASE("ModInt canonicalizes and round-trips negatives") {
    ModInt x(-3, 25);
    CHECK(x.value() == 22);
    CHECK(x.signed_value() == -3);
    CHECK((-x).value() == 3);
    CHECK(ModInt(50, 25).value() == 0);
    CHECK(ModInt(-50, 25).value() == 0);

    // signed_value picks the representative in (-m/2, m/2]
    CHECK(ModInt(13, 25).signed_value() == -12);
    CHECK(ModInt(12, 25).signed_value() == 12);
    CHECK(ModInt(5, 10).signed_value() == 5);  // m/2 itself stays positive
}

TEST_CASE("ModInt arithmetic") {
    u64 m = 49;
    ModInt a(30, m), b(25, m);
    CHECK((a + b).value() == 6);
    CHECK((a - b).value() == 5);
    CHECK((b - a).value() == 44);
    CHECK((a * b).value() == (30 * 25) % 49);
    CHECK(a.pow(0).value() == 1);
    CHECK(a.pow(42).value() == 1);  // ord divides phi(49) = 42
    CHECK((a.inv() * a).value() == 1);
}

TEST_CASE("mixing moduli throws") {
    ModInt a(1, 25), b(1, 49);
    CHECK_THROWS_AS(a + b, ModulusMismatch);
    CHECK_THROWS_AS(a - b, ModulusMismatch);
    CHECK_THROWS_AS(a * b, ModulusMismatch);
}

TEST_CASE("modulus bounds enforced") {
    CHECK_THROWS_AS(ModInt(0, 1), Error);
    CHECK_THROWS_AS(ModInt(0, kMaxModulus + 1), Error);
    CHECK_NOTHROW(ModInt(0, kMaxModulus));
    CHECK_NOTHROW(ModInt(0, 2));
}

TEST_CASE("reduce is the ring homomorphism Z/p^2 -> Z/p") {
    u64 p = 13, p2 = 169;
    for (i64 v = -5; v < 30; ++v) {
        ModInt lift(v, p2);
        CHECK(lift.reduce(p) == ModInt(v, p));
    }
    // compatible with multiplication
    ModInt a(47, p2), b(150, p2);
    CHECK((a * b).reduce(p) == a.reduce(p) * b.reduce(p));
    CHECK_THROWS_AS(ModInt(1, p2).reduce(5), Error);  // 5 does not divide 169
}

TEST_CASE("residue skips reduction but stays consistent") {
    ModInt r = ModInt::residue(7, 25);
    CHECK(r == ModInt(7, 25));
}

TEST_CASE("Rational normalizes sign and gcd") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(-2, -4) == Rational(1, 2));
    CHECK(Rational(2, -4) == Rational(-1, 2));
    CHECK(Rational(0, 7) == Rational(0, 1));
    CHECK_THROWS_AS(Rational(1, 0), Error);
}

TEST_CASE("Rational arithmetic identities") {
    Rational a(3, 4), b(-1, 4), c(1, 2);
    CHECK(a + b == c);
    CHECK(a - a == Rational(0, 1));
    CHECK(a * b == Rational(-3, 16));
    CHECK(-(a + b) == -c);
    // associativity spot check
    CHECK((a + b) + c == a + (b + c));
    // no overflow from the unreduced-product trap
    Rational big(1, i64(3) << 40);
    CHECK(big + big == Rational(2, i64(3) << 40));
}

TEST_CASE("rat_to_mod embeds small rationals") {
    CHECK(rat_to_mod(Rational(13, 4), 25).value() == 22);
    CHECK(rat_to_mod(Rational(-1, 2), 49).value() == 24);
    CHECK(rat_to_mod(Rational(-1, 4), 25) ==
          -rat_to_mod(Rational(1, 4), 25));
    CHECK_THROWS_AS(rat_to_mod(Rational(1, 5), 25), NotInvertible);
}

TEST_CASE("Verdict-style comparisons reduce correctly mod p") {
    // inverse of 4 mod 25 and mod 49, frozen
    CHECK(invmod(4, 25) == 19);
    CHECK(invmod(4, 49) == 37);
}
