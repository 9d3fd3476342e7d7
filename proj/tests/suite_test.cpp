#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "quadcong/base.hpp"
#include "quadcong/suite.hpp"

using namespace quadcong;

TEST_CASE("QRow carries both routes and they agree") {
    PrimeCase pc(13);
    QRow row(pc, 2);
    CHECK(row.n() == 2);
    REQUIRE(row.has_exact());
    for (u64 k = 0; k <= 12; ++k) {
        CHECK(*row.exact_coeff(k) == row.fast_coeff(k));
    }
    CHECK(*row.exact_sum(12) == row.fast_sum(12));

    QRow plain(pc, 2, SuiteOptions{.size_budget = kSizeBudgetDefault,
                                   .cross_check = false});
    CHECK_FALSE(plain.has_exact());
    CHECK_FALSE(plain.exact_coeff(0).has_value());
    CHECK(plain.fast_coeff(5) == row.fast_coeff(5));

    CHECK_THROWS_AS(QRow(pc, 0), Error);
}

TEST_CASE("headline coefficient anchors, n = 1") {
    PrimeCase p5(5), p7(7), p11(11);

    Verdict a1 = check_theorem_A1(p5, 1);
    CHECK(a1.holds);
    CHECK(a1.lhs == ModInt(6, 25));  // C(4,4)_3 = 31
    CHECK(a1.claim == ClaimId::THM_A_EQ1);
    CHECK(a1.p == 5);
    CHECK(a1.n == 1);
    CHECK(a1.k == 4);
    CHECK(a1.note.empty());
    CHECK(check_theorem_A1(p7, 1).lhs == ModInt(42, 49));  // C(6,6)_3 = 336

    Verdict a2 = check_theorem_A2(p5, 1);
    CHECK(a2.holds);
    CHECK(a2.lhs == ModInt(10, 25));  // C(4,2)_3
    CHECK(a2.k == 2);
    CHECK(check_theorem_A2(p7, 1).lhs == ModInt(7, 49));     // 56
    CHECK(check_theorem_A2(p11, 1).lhs == ModInt(87, 121));  // 1902
}

TEST_CASE("headline sum anchors, n = 1") {
    PrimeCase p5(5), p7(7);

    Verdict b1 = check_prop_B1(p5, 1);
    CHECK(b1.holds);
    CHECK(b1.lhs == ModInt(66, 25));  // 1+4+10+20+31
    CHECK(b1.lhs.value() == 16);
    CHECK_FALSE(b1.k.has_value());
    CHECK(check_prop_B1(p7, 1).lhs == ModInt(21, 49));  // 756

    Verdict b2 = check_prop_B2(p5, 1);
    CHECK(b2.holds);
    CHECK(b2.lhs == ModInt(15, 25));  // 1+4+10
    CHECK(check_prop_B2(p7, 1).lhs == ModInt(35, 49));  // 84
}

TEST_CASE("headline claims hold with the exact route engaged") {
    for (u64 p : primes_in_range(5, 60)) {
        PrimeCase pc(p);
        for (u64 n = 1; n <= 3; ++n) {
            QRow row(pc, n);
            REQUIRE(row.has_exact());
            for (const Verdict& v :
                 {check_theorem_A1(row), check_theorem_A2(row),
                  check_prop_B1(row), check_prop_B2(row)}) {
                CHECK(v.holds);
                CHECK(v.note.empty());  // routes agreed
                CHECK(v.lhs.modulus() == p * p);
            }
        }
    }
}

TEST_CASE("closed forms per residue class") {
    PrimeCase pc(13);
    QRow row(pc, 1);
    std::vector<Verdict> vs = check_prop2(row);
    REQUIRE(vs.size() == 13);
    for (u64 k = 0; k < vs.size(); ++k) {
        CHECK(vs[k].holds);
        CHECK(vs[k].k == k);
        static const ClaimId wheel[4] = {ClaimId::PROP2_4K, ClaimId::PROP2_4K1,
                                         ClaimId::PROP2_4K2,
                                         ClaimId::PROP2_4K3};
        CHECK(vs[k].claim == wheel[k % 4]);
    }
    // single-index form matches the sweep
    Verdict v2 = check_prop2(row, 2);
    CHECK(v2.lhs == vs[2].lhs);
    CHECK(v2.lhs == ModInt(78, 169));  // C(12,2)_3
}

TEST_CASE("block sums") {
    PrimeCase pc(13);
    QRow row(pc, 2);
    std::vector<Verdict> vs = check_block_sum(row);
    REQUIRE(vs.size() == 3);  // 4k+3 <= 12 admits k = 0, 1, 2
    for (const Verdict& v : vs) {
        CHECK(v.holds);
        CHECK(v.claim == ClaimId::BLOCK_SUM);
    }
    CHECK(vs[1].rhs == ModInt(52, 169));  // 26/7
    CHECK(vs[1].k == 1);
    CHECK_THROWS_AS(check_block_sum(row, 3), SideConditionViolated);

    QRow r5(PrimeCase(5), 1);
    CHECK(check_block_sum(r5).size() == 1);
    CHECK(check_block_sum(r5, 0).rhs == ModInt(10, 25));  // 5/3
}

TEST_CASE("the 1,-1,0,0 pattern on rows at n*p^2-1") {
    PrimeCase p5(5);
    std::vector<Verdict> vs = check_cor_C(p5, 1);
    REQUIRE(vs.size() == 5);
    static const i64 want[5] = {1, -1, 0, 0, 1};
    for (u64 k = 0; k < 5; ++k) {
        CHECK(vs[k].holds);
        CHECK(vs[k].lhs == ModInt(want[k], 25));
        CHECK(vs[k].claim == ClaimId::COR_C);
    }
    // C(24,1)_3 = 24 and C(24,4)_3 = 1 mod 25 on the nose
    CHECK(vs[1].lhs.value() == 24);

    CHECK(check_cor_C(p5, 1, 4).lhs == ModInt(1, 25));
    CHECK_THROWS_AS(check_cor_C(p5, 1, 5), IndexTooLarge);

    for (u64 p : primes_in_range(5, 31)) {
        for (const Verdict& v : check_cor_C(PrimeCase(p), 1)) CHECK(v.holds);
    }
}

TEST_CASE("budget gates the p^2 rows hard") {
    SuiteOptions tight{.size_budget = 50, .cross_check = true};
    CHECK_THROWS_AS(check_cor_C(PrimeCase(5), 1, tight), SizeBudgetExceeded);
    CHECK_THROWS_AS(check_EM_trinomial(PrimeCase(29), 1, tight),
                    SizeBudgetExceeded);
    // 3*24+1 = 73 coefficients
    CHECK_NOTHROW(check_cor_C(PrimeCase(5), 1,
                              SuiteOptions{.size_budget = 73,
                                           .cross_check = true}));
}

TEST_CASE("trinomial analogues") {
    PrimeCase p5(5), p7(7);
    auto [row5, half5] = check_EM_trinomial(p5, 1);
    CHECK(row5.holds);
    CHECK(row5.lhs == ModInt(19, 25));  // C(4,4)_2
    CHECK(row5.claim == ClaimId::EM_TRI_ROW);
    CHECK(row5.k == 4);
    CHECK(half5.holds);
    CHECK(half5.lhs == ModInt(10, 25));  // C(4,2)_2
    CHECK(half5.claim == ClaimId::EM_TRI_HALF);

    auto [row7, half7] = check_EM_trinomial(p7, 1);
    CHECK(row7.holds);
    CHECK(half7.holds);
    CHECK(half7.lhs == ModInt(1, 49));  // C(6,3)_2 = 50

    for (u64 p : primes_in_range(5, 60)) {
        for (u64 n = 1; n <= 3; ++n) {
            auto [a, b] = check_EM_trinomial(PrimeCase(p), n);
            CHECK(a.holds);
            CHECK(b.holds);
        }
    }
}

TEST_CASE("verdict comparison rejects mixed moduli") {
    CHECK_THROWS_AS(Verdict::compare(ClaimId::COR_C, 5, 1, 0, ModInt(1, 25),
                                     ModInt(1, 49)),
                    ModulusMismatch);
}
