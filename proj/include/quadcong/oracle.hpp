#pragma once

// Exact reference computations.  Everything here is deliberately plain:
// schoolbook convolution, square-and-multiply on whole coefficient rows,
// GMP integers and rationals.  The fast congruence paths elsewhere never
// call into this file, so the two routes can cross-check each other.

#include "quadcong/base.hpp"
#include "quadcong/modring.hpp"

#include <gmpxx.h>

#include <vector>

namespace quadcong {

using BigInt = mpz_class;
using BigRat = mpq_class;

// Default cap on the length of any computed coefficient row.
inline constexpr u64 kSizeBudgetDefault = 200000;

// Dense coefficient vector: c[i] is the coefficient of x^i.
struct CoeffVector {
    std::vector<BigInt> c;

    CoeffVector() = default;
    CoeffVector(std::initializer_list<long> init);
    explicit CoeffVector(std::vector<BigInt> coeffs) : c(std::move(coeffs)) {}

    u64 degree() const { return c.empty() ? 0 : u64(c.size()) - 1; }
    // Coefficient access with zero outside the stored range.
    BigInt at(u64 i) const { return i < c.size() ? c[i] : BigInt(0); }
};

// base^n by square-and-multiply over exact integer convolutions.  Throws
// SizeBudgetExceeded if the result would hold more than size_budget
// coefficients.
CoeffVector poly_pow(const CoeffVector& base, u64 n,
                     u64 size_budget = kSizeBudgetDefault);

// Same powering with every coefficient reduced mod modulus (2 <= modulus
// < 2^62).  Kept separate from the exact route on purpose; a property
// test ties the two together.
std::vector<u64> poly_pow_mod(const std::vector<u64>& base, u64 n,
                              u64 modulus, u64 size_budget = kSizeBudgetDefault);

// H_m as an exact rational.
BigRat exact_harmonic(u64 m);

// sum_{k=0..m} 1/(4k+c) as an exact rational; m = -1 gives 0.
BigRat exact_quarter_sum(unsigned c, i64 m);

// Embedding of an exact rational into Z/m (denominator must be coprime).
ModInt rat_to_mod(const BigRat& q, u64 modulus);

}  // namespace quadcong
