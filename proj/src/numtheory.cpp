#include "quadcong/numtheory.hpp"

namespace quadcong {

namespace {

// 128-bit modular product; m may exceed 2^64 (needed for p^3 moduli).
u128 mulmod128(u128 a, u128 b, u128 m) {
    if (m <= ~u64(0)) return u128(u64(a % m)) * u64(b % m) % m;
    a %= m;
    b %= m;
    u128 r = 0;
    while (b) {
        if (b & 1) {
            r += a;
            if (r >= m) r -= m;
        }
        a += a;
        if (a >= m) a -= m;
        b >>= 1;
    }
    return r;
}

u128 powmod128(u128 a, u64 e, u128 m) {
    u128 r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod128(r, a, m);
        a = mulmod128(a, a, m);
        e >>= 1;
    }
    return r;
}

// (P_n, P_{n+1}) mod m by fast doubling on the pair:
//   P_{2n}   = 2 P_n (P_{n+1} - P_n)
//   P_{2n+1} = P_n^2 + P_{n+1}^2
std::pair<u128, u128> pell_pair_mod(u64 n, u128 m) {
    u128 a = 0, b = 1 % m;  // (P_0, P_1)
    if (n == 0) return {a, b};
    int bit = 63;
    while (!((n >> bit) & 1)) bit--;
    for (; bit >= 0; bit--) {
        u128 aa = mulmod128(a, a, m);
        u128 bb = mulmod128(b, b, m);
        u128 ab = mulmod128(a, b, m);
        u128 even = (ab + m - aa) % m;  // P_n (P_{n+1} - P_n)
        even = (even + even) % m;       // P_{2n}
        u128 odd = (aa + bb) % m;       // P_{2n+1}
        if ((n >> bit) & 1) {
            a = odd;
            b = (odd + odd + even) % m;  // P_{2n+2} = 2 P_{2n+1} + P_{2n}
        } else {
            a = even;
            b = odd;
        }
    }
    return {a, b};
}

}  // namespace

bool is_prime(u64 n) {
    if (n < 2) return false;
    for (u64 q : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        if (n == q) return true;
        if (n % q == 0) return false;
    }
    u64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        s++;
    }
    // this witness set decides primality for all n < 3.3 * 10^24
    for (u64 a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        u64 x = powmod(a % n, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < s; i++) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

std::vector<u64> primes_in_range(u64 lo, u64 hi) {
    std::vector<u64> out;
    if (lo < 5) lo = 5;
    if (lo > hi) return out;
    for (u64 n = lo | 1; n <= hi; n += 2)
        if (is_prime(n)) out.push_back(n);
    return out;
}

PrimeCase::PrimeCase(u64 p) : p_(p) {
    if (p < 5 || !is_prime(p))
        throw InvalidPrime("PrimeCase: " + std::to_string(p) +
                           " is not a prime >= 5");
    if (p >= (u64(1) << 31))
        throw InvalidPrime("PrimeCase: p^2 would exceed the modulus range");
    r3_ = unsigned(p % 3);
    r4_ = unsigned(p % 4);
    r6_ = unsigned(p % 6);
    r8_ = unsigned(p % 8);
    eps2_ = (r8_ == 1 || r8_ == 7) ? 1 : -1;
    // second supplement cross-checked against Euler's criterion
    u64 e = powmod(2, (p - 1) / 2, p);
    u64 want = eps2_ == 1 ? 1 : p - 1;
    if (e != want)
        throw Error("PrimeCase: quadratic character of 2 inconsistent at p=" +
                    std::to_string(p));
}

static u128 fermat_base(u64 p, i64 a) {
    // canonical representative mod p^3 serves both quotient variants
    u128 p3 = u128(p) * p * p;
    i128 r = i128(a) % i128(p3);
    if (r < 0) r += i128(p3);
    if (u128(r) % p == 0)
        throw NotCoprime("fermat quotient: base " + std::to_string(a) +
                         " shares a factor with p=" + std::to_string(p));
    return u128(r);
}

ModInt fermat_quotient(u64 p, i64 a) {
    u64 p2 = p * p;
    u64 r = powmod(u64(fermat_base(p, a) % p2), p - 1, p2);
    // r = 1 + p q_p(a) mod p^2
    return ModInt::residue((r - 1) / p, p);
}

ModInt fermat_quotient_lift(u64 p, i64 a) {
    u128 p3 = u128(p) * p * p;
    u128 r = powmod128(fermat_base(p, a), p - 1, p3);
    return ModInt::residue(u64((r - 1) / p), p * p);
}

BigInt pell(u64 n) {
    BigInt a = 0, b = 1;
    for (u64 i = 0; i < n; i++) {
        BigInt next = 2 * b + a;
        a = b;
        b = next;
    }
    return a;
}

static u64 pell_quotient_mod(const PrimeCase& pc, u128 modulus_times_p) {
    u64 p = pc.p();
    u64 idx = pc.eps2() == 1 ? p - 1 : p + 1;
    u128 v = pell_pair_mod(idx, modulus_times_p).first;
    if (v % p != 0)
        throw IntegralityViolation("p=" + std::to_string(p) +
                                   " does not divide P_" + std::to_string(idx));
    return u64(v / p);
}

ModInt pell_quotient(const PrimeCase& pc) {
    u64 p = pc.p();
    return ModInt::residue(pell_quotient_mod(pc, u128(p) * p), p);
}

ModInt pell_quotient_lift(const PrimeCase& pc) {
    u64 p = pc.p();
    return ModInt::residue(pell_quotient_mod(pc, u128(p) * p * p), p * p);
}

ModInt harmonic_sum_mod(u64 m, u64 modulus) {
    ModInt acc(0, modulus);
    for (u64 j = 1; j <= m; j++)
        acc += ModInt::residue(invmod(j % modulus, modulus), modulus);
    return acc;
}

ModInt harmonic_mod(u64 m, u64 p) {
    if (m >= p)
        throw IndexTooLarge("harmonic_mod: m=" + std::to_string(m) +
                            " must be < p=" + std::to_string(p));
    return harmonic_sum_mod(m, p);
}

QuarterSumSpec::QuarterSumSpec(unsigned c_, i64 m_, u64 p_)
    : c(c_), m(m_), p(p_) {
    if (c < 1 || c > 3)
        throw Error("QuarterSumSpec: c must be 1, 2 or 3");
    if (p < 5 || !is_prime(p))
        throw InvalidPrime("QuarterSumSpec: p=" + std::to_string(p));
    if (m < -1) throw Error("QuarterSumSpec: m < -1");
}

ModInt quarter_sum(const QuarterSumSpec& s, u64 modulus) {
    if (modulus != s.p && modulus != s.p * s.p)
        throw Error("quarter_sum: modulus must be p or p^2");
    ModInt acc(0, modulus);
    for (i64 k = 0; k <= s.m; k++) {
        u64 d = u64(4 * k) + s.c;
        if (d % s.p == 0)
            throw TermDivisibleByP("quarter_sum: term 1/" + std::to_string(d) +
                                   " undefined mod powers of p=" +
                                   std::to_string(s.p));
        acc += ModInt::residue(invmod(d % modulus, modulus), modulus);
    }
    return acc;
}

ModInt quarter_sum(const QuarterSumSpec& s) { return quarter_sum(s, s.p); }

std::array<Verdict, 3> check_lemma1(const PrimeCase& pc) {
    u64 p = pc.p();
    ModInt q = fermat_quotient(p, 2);
    ModInt chi = pell_quotient(pc);
    ModInt two(2, p), three(3, p), four(4, p);
    return {
        Verdict::compare(ClaimId::LEMMA1_H2, p, {}, {}, harmonic_mod(p / 2, p),
                         -(two * q)),
        Verdict::compare(ClaimId::LEMMA1_H4, p, {}, {}, harmonic_mod(p / 4, p),
                         -(three * q)),
        Verdict::compare(ClaimId::LEMMA1_H8, p, {}, {}, harmonic_mod(p / 8, p),
                         -(four * q) - (two * chi)),
    };
}

namespace {

// limit numerators: the c-th quarter sum runs to (p - off[c-1]) / 4 resp. 8
struct Lemma2Row {
    int off[3];
    Rational con[3];  // constant term
    Rational qco[3];  // coefficient of q_p(2)
};

// p = 1 (mod 4): S(1,(p-5)/4), S(2,(p-1)/4), S(3,(p-1)/4)
const Lemma2Row kLemma2R1 = {
    {5, 1, 1},
    {{0, 1}, {1, 1}, {1, 2}},
    {{3, 4}, {-1, 4}, {1, 4}},
};
// p = 3 (mod 4): S(1,(p-3)/4), S(2,(p-3)/4), S(3,(p-7)/4)
const Lemma2Row kLemma2R3 = {
    {3, 3, 7},
    {{0, 1}, {0, 1}, {0, 1}},
    {{1, 4}, {-1, 4}, {3, 4}},
};

struct Lemma3Row {
    Rational con[3];
    Rational qco[3];
    Rational xco[3];  // coefficient of chi_p
};

const Lemma3Row kLemma3R1 = {
    {{2, 1}, {2, 3}, {2, 5}},
    {{-1, 4}, {-1, 2}, {-1, 4}},
    {{-1, 2}, {1, 2}, {1, 2}},
};
const Lemma3Row kLemma3R3 = {
    {{0, 1}, {2, 1}, {2, 3}},
    {{-1, 4}, {-1, 2}, {-1, 4}},
    {{1, 2}, {1, 2}, {-1, 2}},
};
const Lemma3Row kLemma3R5 = {
    {{0, 1}, {0, 1}, {2, 1}},
    {{-1, 4}, {-1, 2}, {-1, 4}},
    {{-1, 2}, {1, 2}, {1, 2}},
};
const Lemma3Row kLemma3R7 = {
    {{0, 1}, {0, 1}, {0, 1}},
    {{-1, 4}, {-1, 2}, {-1, 4}},
    {{1, 2}, {1, 2}, {-1, 2}},
};

ClaimId lemma2_claim(unsigned r4, unsigned c) {
    static const ClaimId ids[2][3] = {
        {ClaimId::LEMMA2_R4_1_C1, ClaimId::LEMMA2_R4_1_C2,
         ClaimId::LEMMA2_R4_1_C3},
        {ClaimId::LEMMA2_R4_3_C1, ClaimId::LEMMA2_R4_3_C2,
         ClaimId::LEMMA2_R4_3_C3},
    };
    return ids[r4 == 1 ? 0 : 1][c - 1];
}

ClaimId lemma3_claim(unsigned r8, unsigned c) {
    static const ClaimId ids[4][3] = {
        {ClaimId::LEMMA3_R8_1_C1, ClaimId::LEMMA3_R8_1_C2,
         ClaimId::LEMMA3_R8_1_C3},
        {ClaimId::LEMMA3_R8_3_C1, ClaimId::LEMMA3_R8_3_C2,
         ClaimId::LEMMA3_R8_3_C3},
        {ClaimId::LEMMA3_R8_5_C1, ClaimId::LEMMA3_R8_5_C2,
         ClaimId::LEMMA3_R8_5_C3},
        {ClaimId::LEMMA3_R8_7_C1, ClaimId::LEMMA3_R8_7_C2,
         ClaimId::LEMMA3_R8_7_C3},
    };
    return ids[r8 / 2][c - 1];
}

}  // namespace

std::array<Verdict, 3> check_lemma2(const PrimeCase& pc) {
    u64 p = pc.p();
    const Lemma2Row& row = pc.r4() == 1 ? kLemma2R1 : kLemma2R3;
    ModInt q = fermat_quotient(p, 2);
    auto one = [&](unsigned c) {
        i64 lim = (i64(p) - row.off[c - 1]) / 4;
        ModInt lhs = quarter_sum(QuarterSumSpec(c, lim, p));
        ModInt rhs = rat_to_mod(row.con[c - 1], p) +
                     rat_to_mod(row.qco[c - 1], p) * q;
        return Verdict::compare(lemma2_claim(pc.r4(), c), p, {}, {}, lhs, rhs);
    };
    return {one(1), one(2), one(3)};
}

std::array<Verdict, 3> check_lemma3(const PrimeCase& pc) {
    u64 p = pc.p();
    const Lemma3Row* row = nullptr;
    switch (pc.r8()) {
        case 1: row = &kLemma3R1; break;
        case 3: row = &kLemma3R3; break;
        case 5: row = &kLemma3R5; break;
        case 7: row = &kLemma3R7; break;
    }
    ModInt q = fermat_quotient(p, 2);
    ModInt chi = pell_quotient(pc);
    i64 lim = i64((p - pc.r8()) / 8);
    auto one = [&](unsigned c) {
        ModInt lhs = quarter_sum(QuarterSumSpec(c, lim, p));
        ModInt rhs = rat_to_mod(row->con[c - 1], p) +
                     rat_to_mod(row->qco[c - 1], p) * q +
                     rat_to_mod(row->xco[c - 1], p) * chi;
        return Verdict::compare(lemma3_claim(pc.r8(), c), p, {}, {}, lhs, rhs);
    };
    return {one(1), one(2), one(3)};
}

}  // namespace quadcong
