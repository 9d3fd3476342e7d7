#pragma once

// Quadrinomial coefficients C(n,k)_3: the coefficient of x^k in
// (1 + x + x^2 + x^3)^n, so rows have length 3n+1 and sum to 4^n.
//
// Fast route for rows at n*p - 1, everything mod p^2:
//
//   C(np-1, k)    =  (-1)^k (1 - np H_k)            plain binomial
//   C(np-1, k)_3  =  sum_j C(np-1, j) C(np-1, k-2j)
//
// using (1+x+x^2+x^3)^m = (1+x)^m (1+x^2)^m.  The exact route lives in
// oracle.hpp and shares nothing with this file.
//
// Closed forms for C(np-1, k)_3 split by k mod 4, k = 4k' + c:
//
//   c=0:  1 - np( (3/4) H_k' + S(3, k'-1) )
//   c=1: -1 + np( (3/4) H_k' + S(1, k')   )
//   c=2:      np( S(2, k') - S(1, k') )
//   c=3:      np( S(3, k') - S(2, k') )
//
// valid while k <= p-1, and the block identity
//
//   sum_{j=0..3} C(np-1, 4k'+j)_3 = np / (4k'+3)    while 4k'+3 <= p-1.

#include "quadcong/base.hpp"
#include "quadcong/modring.hpp"
#include "quadcong/numtheory.hpp"
#include "quadcong/oracle.hpp"

#include <vector>

namespace quadcong {

// Exact C(n,k)_3 through the oracle row; 0 outside [0, 3n].
BigInt qnomial_exact(u64 n, i64 k, u64 size_budget = kSizeBudgetDefault);

// Full row of (1+x+x^2+x^3)^n mod modulus, oracle route.
std::vector<u64> qnomial_row_mod(u64 n, u64 modulus,
                                 u64 size_budget = kSizeBudgetDefault);

// Full row of (1+x+x^2)^n mod modulus, oracle route.
std::vector<u64> trinomial_row_mod(u64 n, u64 modulus,
                                   u64 size_budget = kSizeBudgetDefault);

// C(np-1, k) mod p^2 via the harmonic form; requires k <= p-1.
ModInt binom_row_np_minus_1(u64 k, const PrimeCase& pc, u64 n);

// C(np-1, k)_3 mod p^2 via the binomial convolution; requires k <= p-1.
ModInt qnomial_mod_p2(u64 k, const PrimeCase& pc, u64 n);

// Shared prefix of the fast route: binomials and quadrinomials
// C(np-1, 0..kmax) mod p^2 in one pass.  Sweeps build one per (p, n).
class FastRow {
  public:
    FastRow(const PrimeCase& pc, u64 n, u64 kmax);

    u64 kmax() const { return u64(qno_.size()) - 1; }
    u64 modulus() const { return p2_; }
    ModInt binom(u64 k) const;
    ModInt coeff(u64 k) const;
    // sum of coefficients 0..k_hi mod p^2
    ModInt prefix_sum(u64 k_hi) const;

  private:
    u64 p2_;
    std::vector<u64> bin_;
    std::vector<u64> qno_;
};

// Residue class of a coefficient index k = 4*k4 + c.
struct Prop2Class {
    unsigned c;  // k mod 4
    u64 k4;      // k div 4
    u64 k;

    static Prop2Class classify(u64 k);

    // Side condition of the matching closed form, i.e. k <= p-1.
    bool within(u64 p) const { return k <= p - 1; }
    // The class-3 form is printed with 4k4+2 <= p-1, which also admits
    // k = p when p = 3 (mod 4); there the right side has a 1/p term.
    bool printed_within(u64 p) const {
        return c == 3 ? k <= p : k <= p - 1;
    }
};

// Closed form for C(np-1, k)_3 mod p^2 per the table above; throws
// SideConditionViolated outside k <= p-1.
ModInt prop2_rhs(const Prop2Class& cls, const PrimeCase& pc, u64 n);

// np * (4k4+3)^-1 mod p^2; throws TermDivisibleByP when p | 4k4+3.
ModInt block_sum_rhs(u64 k4, const PrimeCase& pc, u64 n);

}  // namespace quadcong
