#include "quadcong/oracle.hpp"

#include <algorithm>

namespace quadcong {

CoeffVector::CoeffVector(std::initializer_list<long> init) {
    c.reserve(init.size());
    for (long v : init) c.emplace_back(v);
}

static void check_result_size(size_t base_len, u64 n, u64 budget) {
    if (base_len == 0) throw Error("poly_pow: empty base");
    u128 len = u128(base_len - 1) * n + 1;
    if (len > budget) {
        std::string shown = len <= u128(UINT64_MAX)
                                ? std::to_string(u64(len))
                                : std::string("over 2^64");
        throw SizeBudgetExceeded("poly_pow: result needs " + shown +
                                 " coefficients, budget is " +
                                 std::to_string(budget));
    }
}

static std::vector<BigInt> conv(const std::vector<BigInt>& a,
                                const std::vector<BigInt>& b) {
    std::vector<BigInt> out(a.size() + b.size() - 1);
    for (size_t i = 0; i < a.size(); i++) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); j++)
            mpz_addmul(out[i + j].get_mpz_t(), a[i].get_mpz_t(),
                       b[j].get_mpz_t());
    }
    return out;
}

CoeffVector poly_pow(const CoeffVector& base, u64 n, u64 size_budget) {
    check_result_size(base.c.size(), n, size_budget);
    std::vector<BigInt> result = {BigInt(1)};
    if (n == 0) return CoeffVector{std::move(result)};
    int bit = 63;
    while (!((n >> bit) & 1)) bit--;
    for (; bit >= 0; bit--) {
        result = conv(result, result);
        if ((n >> bit) & 1) result = conv(result, base.c);
    }
    return CoeffVector{std::move(result)};
}

namespace {

// Convolution mod m.  For m < 2^32 whole columns are accumulated in
// unsigned __int128 with one reduction per output coefficient; a column of
// length L adds at most L * (2^32-1)^2 < 2^128 for any feasible L, so the
// accumulator cannot wrap.  Larger moduli reduce every product.
std::vector<u64> conv_mod(const std::vector<u64>& a, const std::vector<u64>& b,
                          u64 m) {
    std::vector<u64> out(a.size() + b.size() - 1, 0);
    if (m < (u64(1) << 32)) {
        for (size_t k = 0; k < out.size(); k++) {
            size_t lo = k >= b.size() - 1 ? k - (b.size() - 1) : 0;
            size_t hi = std::min(k, a.size() - 1);
            u128 acc = 0;
            for (size_t i = lo; i <= hi; i++)
                acc += u128(a[i]) * b[k - i];
            out[k] = u64(acc % m);
        }
    } else {
        for (size_t i = 0; i < a.size(); i++) {
            if (a[i] == 0) continue;
            for (size_t j = 0; j < b.size(); j++) {
                u64 t = out[i + j] + mulmod(a[i], b[j], m);
                out[i + j] = t >= m ? t - m : t;
            }
        }
    }
    return out;
}

}  // namespace

std::vector<u64> poly_pow_mod(const std::vector<u64>& base, u64 n, u64 modulus,
                              u64 size_budget) {
    if (modulus < 2 || modulus > kMaxModulus)
        throw Error("poly_pow_mod: modulus out of range");
    check_result_size(base.size(), n, size_budget);
    std::vector<u64> b = base;
    for (u64& v : b) v %= modulus;
    std::vector<u64> result = {1 % modulus};
    if (n == 0) return result;
    int bit = 63;
    while (!((n >> bit) & 1)) bit--;
    for (; bit >= 0; bit--) {
        result = conv_mod(result, result, modulus);
        if ((n >> bit) & 1) result = conv_mod(result, b, modulus);
    }
    return result;
}

BigRat exact_harmonic(u64 m) {
    BigRat h = 0;
    for (u64 j = 1; j <= m; j++) {
        h += BigRat(1, j);
    }
    h.canonicalize();
    return h;
}

BigRat exact_quarter_sum(unsigned c, i64 m) {
    if (c < 1 || c > 3) throw Error("exact_quarter_sum: c must be 1, 2 or 3");
    BigRat s = 0;
    for (i64 k = 0; k <= m; k++) {
        s += BigRat(1, 4 * k + c);
    }
    s.canonicalize();
    return s;
}

ModInt rat_to_mod(const BigRat& q, u64 modulus) {
    BigInt num = q.get_num();
    BigInt den = q.get_den();
    u64 n = mpz_fdiv_ui(num.get_mpz_t(), modulus);
    u64 d = mpz_fdiv_ui(den.get_mpz_t(), modulus);
    return ModInt::residue(mulmod(n, invmod(d, modulus), modulus), modulus);
}

}  // namespace quadcong
