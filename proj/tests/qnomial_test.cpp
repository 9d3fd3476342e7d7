#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "quadcong/base.hpp"
#include "quadcong/qnomial.hpp"

#include <vector>

using namespace quadcong;

TEST_CASE("qnomial_exact anchors") {
    CHECK(qnomial_exact(0, 0) == 1);
    CHECK(qnomial_exact(2, 3) == 4);
    CHECK(qnomial_exact(6, 3) == 56);
    CHECK(qnomial_exact(6, 6) == 336);
    CHECK(qnomial_exact(10, 5) == 1902);
    CHECK(qnomial_exact(12, 2) == 78);
    CHECK(qnomial_exact(24, 1) == 24);
    CHECK(qnomial_exact(24, 2) == 300);
    // zero outside the row
    CHECK(qnomial_exact(4, -1) == 0);
    CHECK(qnomial_exact(4, 13) == 0);
    CHECK_THROWS_AS(qnomial_exact(1000, 5, 100), SizeBudgetExceeded);
}

TEST_CASE("row helpers reduce the oracle rows") {
    CHECK(qnomial_row_mod(2, 1000) ==
          std::vector<u64>{1, 2, 3, 4, 3, 2, 1});
    CHECK(trinomial_row_mod(4, 1000) ==
          std::vector<u64>{1, 4, 10, 16, 19, 16, 10, 4, 1});
    // C(6,3)_2 = 50, C(6,6)_2 = 141
    std::vector<u64> tri6 = trinomial_row_mod(6, 49);
    CHECK(tri6[3] == 50 % 49);
    CHECK(tri6[6] == 141 % 49);
    std::vector<u64> tri10 = trinomial_row_mod(10, 121);
    CHECK(tri10[5] == 1452 % 121);  // = 0, a zero coefficient mod p^2
}

TEST_CASE("binomial fast row against the exact binomial") {
    for (u64 p : {u64(7), u64(13)}) {
        PrimeCase pc(p);
        for (u64 n : {u64(1), u64(2), u64(p)}) {
            CoeffVector pascal = poly_pow(CoeffVector{1, 1}, n * p - 1);
            for (u64 k = 0; k <= p - 1; ++k) {
                BigInt want = pascal.at(k) % BigInt(p * p);
                CHECK(binom_row_np_minus_1(k, pc, n).value() ==
                      want.get_ui());
            }
        }
    }
    CHECK_THROWS_AS(binom_row_np_minus_1(7, PrimeCase(7), 1), IndexTooLarge);
}

TEST_CASE("qnomial_mod_p2 equals the exact coefficient, all k") {
    for (u64 p : {u64(5), u64(7), u64(11), u64(13)}) {
        PrimeCase pc(p);
        for (u64 n : {u64(1), u64(2), u64(3)}) {
            CoeffVector row = poly_pow(CoeffVector{1, 1, 1, 1}, n * p - 1);
            FastRow fast(pc, n, p - 1);
            for (u64 k = 0; k <= p - 1; ++k) {
                BigInt want = row.at(k) % BigInt(p * p);
                CHECK(fast.coeff(k).value() == want.get_ui());
            }
        }
    }
}

TEST_CASE("qnomial_mod_p2 anchors") {
    CHECK(qnomial_mod_p2(5, PrimeCase(11), 1) == ModInt(87, 121));  // 1902
    CHECK(qnomial_mod_p2(3, PrimeCase(7), 1) == ModInt(7, 49));     // 56
    CHECK(qnomial_mod_p2(6, PrimeCase(7), 1) == ModInt(42, 49));    // 336
    // n a multiple of p: np = 0 mod p^2, row collapses to +-1, 0
    CHECK(qnomial_mod_p2(4, PrimeCase(5), 5) == ModInt(1, 25));
    CHECK(qnomial_mod_p2(1, PrimeCase(5), 5) == ModInt(-1, 25));
    CHECK_THROWS_AS(qnomial_mod_p2(11, PrimeCase(11), 1), IndexTooLarge);
}

TEST_CASE("FastRow accessors") {
    PrimeCase pc(13);
    FastRow fr(pc, 2, 12);
    CHECK(fr.kmax() == 12);
    CHECK(fr.modulus() == 169);
    CHECK(fr.coeff(0) == ModInt(1, 169));
    CHECK(fr.binom(0) == ModInt(1, 169));
    CHECK(fr.binom(1) == ModInt(25, 169));  // C(25,1)

    // prefix sums match direct accumulation
    ModInt acc(0, 169);
    for (u64 k = 0; k <= 12; ++k) {
        acc += fr.coeff(k);
        CHECK(fr.prefix_sum(k) == acc);
    }
    CHECK_THROWS_AS(fr.coeff(13), IndexTooLarge);
    CHECK_THROWS_AS(fr.prefix_sum(13), IndexTooLarge);
    CHECK_THROWS_AS(FastRow(pc, 1, 13), IndexTooLarge);
}

TEST_CASE("Prop2Class classification and side conditions") {
    Prop2Class c7 = Prop2Class::classify(7);
    CHECK(c7.c == 3);
    CHECK(c7.k4 == 1);
    CHECK(c7.k == 7);
    CHECK(Prop2Class::classify(0).c == 0);
    CHECK(Prop2Class::classify(13).k4 == 3);

    u64 p = 7;
    CHECK(Prop2Class::classify(6).within(p));
    CHECK_FALSE(Prop2Class::classify(7).within(p));
    // the printed class-3 bound also admits k = p itself
    CHECK(Prop2Class::classify(7).printed_within(p));
    CHECK_FALSE(Prop2Class::classify(8).printed_within(p));
    CHECK_FALSE(Prop2Class::classify(15).printed_within(11));  // 15 > 11
}

TEST_CASE("prop2_rhs closed forms match the coefficients") {
    CHECK(prop2_rhs(Prop2Class::classify(4), PrimeCase(5), 1) ==
          ModInt(6, 25));  // C(4,4)_3 = 31
    CHECK(prop2_rhs(Prop2Class::classify(3), PrimeCase(7), 1) ==
          ModInt(7, 49));  // C(6,3)_3 = 56
    CHECK(prop2_rhs(Prop2Class::classify(2), PrimeCase(13), 1) ==
          ModInt(78, 169));  // C(12,2)_3 = 78 on the nose

    // every class, against the fast row (itself tied to the oracle above)
    for (u64 p : {u64(11), u64(17), u64(19)}) {
        PrimeCase pc(p);
        for (u64 n : {u64(1), u64(4)}) {
            FastRow fast(pc, n, p - 1);
            for (u64 k = 0; k <= p - 1; ++k) {
                CHECK(prop2_rhs(Prop2Class::classify(k), pc, n) ==
                      fast.coeff(k));
            }
        }
    }
    CHECK_THROWS_AS(prop2_rhs(Prop2Class::classify(7), PrimeCase(7), 1),
                    SideConditionViolated);
}

TEST_CASE("block_sum_rhs") {
    CHECK(block_sum_rhs(0, PrimeCase(5), 1) == ModInt(10, 25));  // 5/3
    CHECK(block_sum_rhs(1, PrimeCase(13), 2) == ModInt(52, 169));  // 26/7

    // four consecutive coefficients collapse to np/(4k+3)
    for (u64 p : {u64(13), u64(29)}) {
        PrimeCase pc(p);
        FastRow fast(pc, 3, p - 1);
        for (u64 k4 = 0; 4 * k4 + 3 <= p - 1; ++k4) {
            ModInt sum(0, pc.p2());
            for (u64 j = 0; j < 4; ++j) sum += fast.coeff(4 * k4 + j);
            CHECK(sum == block_sum_rhs(k4, pc, 3));
        }
    }
    CHECK_THROWS_AS(block_sum_rhs(1, PrimeCase(7), 1), TermDivisibleByP);
}

TEST_CASE("the block identity fails just past its side condition") {
    // p = 5, k4 = 1: 4k+3 = 7 > p-1, coefficients wrap into the next
    // period and the collapse no longer happens
    PrimeCase pc(5);
    CoeffVector row = poly_pow(CoeffVector{1, 1, 1, 1}, 4);
    BigInt sum = row.at(4) + row.at(5) + row.at(6) + row.at(7);
    ModInt lhs(sum.get_si(), 25);
    CHECK(lhs == ModInt(5, 25));
    CHECK(block_sum_rhs(1, pc, 1) == ModInt(15, 25));
    CHECK(lhs != block_sum_rhs(1, pc, 1));
}
