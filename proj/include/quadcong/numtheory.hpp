#pragma once

// Prime-indexed ingredients of the congruence right-hand sides:
//
//   q_p(a)  = (a^(p-1) - 1)/p          Fermat quotient, a coprime to p
//   chi_p   = P_{p - (2|p)} / p        Pell quotient; P is the Pell
//                                      sequence 0, 1, 2, 5, 12, 29, ...
//   H_m     = 1 + 1/2 + ... + 1/m      harmonic number mod p
//   S(c,m)  = sum_{k=0..m} 1/(4k+c)    quarter sum mod p (or p^2)
//
// (2|p) is the Legendre symbol of 2: +1 iff p = +-1 (mod 8).  Both
// quotients are also available as lifts mod p^2, computed from the
// defining power/Pell value mod p^3.

#include "quadcong/base.hpp"
#include "quadcong/modring.hpp"
#include "quadcong/verdict.hpp"

#include <gmpxx.h>

#include <array>
#include <vector>

namespace quadcong {

using BigInt = mpz_class;

// Deterministic Miller-Rabin, valid for every n < 2^64.
bool is_prime(u64 n);

// Primes p with max(lo, 5) <= p <= hi, ascending.
std::vector<u64> primes_in_range(u64 lo, u64 hi);

// A prime p >= 5 together with its residue classes mod 3, 4, 6, 8 and the
// quadratic character of 2.  Construction runs the primality test and
// verifies eps2 against Euler's criterion.
class PrimeCase {
  public:
    explicit PrimeCase(u64 p);

    u64 p() const { return p_; }
    u64 p2() const { return p_ * p_; }
    unsigned r3() const { return r3_; }
    unsigned r4() const { return r4_; }
    unsigned r6() const { return r6_; }
    unsigned r8() const { return r8_; }
    int eps2() const { return eps2_; }

  private:
    u64 p_;
    unsigned r3_, r4_, r6_, r8_;
    int eps2_;
};

ModInt fermat_quotient(u64 p, i64 a);       // q_p(a) mod p
ModInt fermat_quotient_lift(u64 p, i64 a);  // q_p(a) mod p^2

// Exact Pell number P_n.
BigInt pell(u64 n);

ModInt pell_quotient(const PrimeCase& pc);       // chi_p mod p
ModInt pell_quotient_lift(const PrimeCase& pc);  // chi_p mod p^2

// sum_{j=1..m} j^-1 mod modulus; every j must be invertible.
ModInt harmonic_sum_mod(u64 m, u64 modulus);

// H_m mod p, requires m < p.
ModInt harmonic_mod(u64 m, u64 p);

// Quarter sum sum_{k=0..m} (4k+c)^-1.  m = -1 denotes the empty sum.
struct QuarterSumSpec {
    unsigned c;  // 1, 2 or 3
    i64 m;
    u64 p;
    QuarterSumSpec(unsigned c, i64 m, u64 p);
};

// modulus must be p or p^2; throws TermDivisibleByP when p | 4k+c.
ModInt quarter_sum(const QuarterSumSpec& s, u64 modulus);
ModInt quarter_sum(const QuarterSumSpec& s);  // mod p

// Harmonic numbers at p/2, p/4, p/8 against their q/chi closed forms,
// everything mod p.
std::array<Verdict, 3> check_lemma1(const PrimeCase& pc);

// Quarter sums S(c, limit) for c = 1, 2, 3 with limits and constants
// depending on p mod 4.
std::array<Verdict, 3> check_lemma2(const PrimeCase& pc);

// Same with limits (p - r8)/8 and constants depending on p mod 8.
std::array<Verdict, 3> check_lemma3(const PrimeCase& pc);

}  // namespace quadcong
