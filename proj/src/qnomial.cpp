#include "quadcong/qnomial.hpp"

namespace quadcong {

BigInt qnomial_exact(u64 n, i64 k, u64 size_budget) {
    if (k < 0 || u64(k) > 3 * n) return BigInt(0);
    CoeffVector row = poly_pow(CoeffVector{1, 1, 1, 1}, n, size_budget);
    return row.c[size_t(k)];
}

std::vector<u64> qnomial_row_mod(u64 n, u64 modulus, u64 size_budget) {
    return poly_pow_mod({1, 1, 1, 1}, n, modulus, size_budget);
}

std::vector<u64> trinomial_row_mod(u64 n, u64 modulus, u64 size_budget) {
    return poly_pow_mod({1, 1, 1}, n, modulus, size_budget);
}

// n*p mod p^2 as a residue (only n mod p survives the factor p).
static u64 np_mod_p2(const PrimeCase& pc, u64 n) {
    return (n % pc.p()) * pc.p();
}

ModInt binom_row_np_minus_1(u64 k, const PrimeCase& pc, u64 n) {
    u64 p = pc.p(), p2 = pc.p2();
    if (k > p - 1)
        throw IndexTooLarge("binom_row_np_minus_1: k=" + std::to_string(k) +
                            " exceeds p-1");
    u64 h = harmonic_mod(k, p).value();
    u64 v = (1 + p2 - mulmod(np_mod_p2(pc, n), h, p2)) % p2;
    return ModInt::residue(k & 1 ? p2 - v : v, p2);
}

FastRow::FastRow(const PrimeCase& pc, u64 n, u64 kmax) : p2_(pc.p2()) {
    u64 p = pc.p();
    if (kmax > p - 1)
        throw IndexTooLarge("FastRow: kmax=" + std::to_string(kmax) +
                            " exceeds p-1");
    u64 np = np_mod_p2(pc, n);
    bin_.resize(kmax + 1);
    bin_[0] = 1;
    u64 h = 0;  // H_j mod p
    for (u64 j = 1; j <= kmax; j++) {
        h = (h + invmod(j, p)) % p;
        u64 v = (1 + p2_ - mulmod(np, h, p2_)) % p2_;
        bin_[j] = j & 1 ? (p2_ - v) % p2_ : v;
    }
    qno_.resize(kmax + 1);
    for (u64 k = 0; k <= kmax; k++) {
        u128 acc = 0;  // p^2 < 2^62, so (k/2+1) products fit easily
        for (u64 j = 0; 2 * j <= k; j++)
            acc += u128(bin_[j]) * bin_[k - 2 * j] % p2_;
        qno_[k] = u64(acc % p2_);
    }
}

ModInt FastRow::binom(u64 k) const {
    if (k >= bin_.size()) throw IndexTooLarge("FastRow::binom");
    return ModInt::residue(bin_[k], p2_);
}

ModInt FastRow::coeff(u64 k) const {
    if (k >= qno_.size()) throw IndexTooLarge("FastRow::coeff");
    return ModInt::residue(qno_[k], p2_);
}

ModInt FastRow::prefix_sum(u64 k_hi) const {
    if (k_hi >= qno_.size()) throw IndexTooLarge("FastRow::prefix_sum");
    u128 acc = 0;
    for (u64 k = 0; k <= k_hi; k++) acc += qno_[k];
    return ModInt::residue(u64(acc % p2_), p2_);
}

ModInt qnomial_mod_p2(u64 k, const PrimeCase& pc, u64 n) {
    if (k > pc.p() - 1)
        throw IndexTooLarge("qnomial_mod_p2: k=" + std::to_string(k) +
                            " exceeds p-1");
    return FastRow(pc, n, k).coeff(k);
}

Prop2Class Prop2Class::classify(u64 k) {
    return Prop2Class{unsigned(k % 4), k / 4, k};
}

ModInt prop2_rhs(const Prop2Class& cls, const PrimeCase& pc, u64 n) {
    u64 p = pc.p(), p2 = pc.p2();
    if (!cls.within(p))
        throw SideConditionViolated("prop2_rhs: k=" + std::to_string(cls.k) +
                                    " outside k <= p-1 for p=" +
                                    std::to_string(p));
    ModInt np = ModInt::residue(np_mod_p2(pc, n), p2);
    ModInt one(1, p2);
    auto qs = [&](unsigned c, i64 m) {
        return quarter_sum(QuarterSumSpec(c, m, p), p2);
    };
    switch (cls.c) {
        case 0: {
            ModInt inner = rat_to_mod(Rational(3, 4), p2) *
                               harmonic_sum_mod(cls.k4, p2) +
                           qs(3, i64(cls.k4) - 1);
            return one - np * inner;
        }
        case 1: {
            ModInt inner = rat_to_mod(Rational(3, 4), p2) *
                               harmonic_sum_mod(cls.k4, p2) +
                           qs(1, i64(cls.k4));
            return -one + np * inner;
        }
        case 2:
            return np * (qs(2, i64(cls.k4)) - qs(1, i64(cls.k4)));
        default:
            return np * (qs(3, i64(cls.k4)) - qs(2, i64(cls.k4)));
    }
}

ModInt block_sum_rhs(u64 k4, const PrimeCase& pc, u64 n) {
    u64 p = pc.p(), p2 = pc.p2();
    u64 d = 4 * k4 + 3;
    if (d % p == 0)
        throw TermDivisibleByP("block_sum_rhs: 4k+3=" + std::to_string(d) +
                               " divisible by p=" + std::to_string(p));
    ModInt np = ModInt::residue(np_mod_p2(pc, n), p2);
    return np * ModInt::residue(invmod(d % p2, p2), p2);
}

}  // namespace quadcong
