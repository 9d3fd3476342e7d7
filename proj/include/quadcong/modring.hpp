#pragma once

// Residue arithmetic with a runtime modulus, plus exact small rationals.
//
// Moduli up to 2^62 are supported, which covers p^2 for every prime
// p < 2^31.  Products are formed in unsigned __int128, so no operation
// here can overflow.  Negative inputs are canonicalized to [0, m).

#include "quadcong/base.hpp"

namespace quadcong {

inline constexpr u64 kMaxModulus = u64(1) << 62;

inline u64 mulmod(u64 a, u64 b, u64 m) { return u64(u128(a) * b % m); }

u64 powmod(u64 a, u64 e, u64 m);

// Inverse of a mod m via extended Euclid; throws NotInvertible when gcd > 1.
u64 invmod(u64 a, u64 m);

class ModInt {
  public:
    ModInt(i64 value, u64 modulus);

    // Wraps an already-canonical residue without reduction.
    static ModInt residue(u64 value, u64 modulus);

    u64 value() const { return v_; }
    u64 modulus() const { return m_; }

    // Representative in (-m/2, m/2].
    i64 signed_value() const;

    ModInt operator-() const { return residue(v_ ? m_ - v_ : 0, m_); }
    ModInt& operator+=(const ModInt& o);
    ModInt& operator-=(const ModInt& o);
    ModInt& operator*=(const ModInt& o);
    friend ModInt operator+(ModInt a, const ModInt& b) { return a += b; }
    friend ModInt operator-(ModInt a, const ModInt& b) { return a -= b; }
    friend ModInt operator*(ModInt a, const ModInt& b) { return a *= b; }

    ModInt pow(u64 e) const { return residue(powmod(v_, e, m_), m_); }
    ModInt inv() const { return residue(invmod(v_, m_), m_); }

    // Reduction to a divisor of the modulus (e.g. p^2 -> p).
    ModInt reduce(u64 new_modulus) const;

    bool operator==(const ModInt&) const = default;

  private:
    ModInt() = default;
    u64 v_ = 0;
    u64 m_ = 1;
};

inline ModInt mod_inv(const ModInt& x) { return x.inv(); }

// Exact rational with i64 parts, normalized (den > 0, gcd = 1).  Only the
// small constants appearing in right-hand sides pass through here, but the
// arithmetic is overflow-checked anyway.
struct Rational {
    i64 num = 0;
    i64 den = 1;

    Rational() = default;
    Rational(i64 n, i64 d);

    Rational operator+(const Rational& o) const;
    Rational operator-(const Rational& o) const;
    Rational operator*(const Rational& o) const;
    Rational operator-() const { return Rational(-num, den); }
    bool operator==(const Rational&) const = default;
};

// num * den^-1 mod m; throws NotInvertible when gcd(den, m) > 1.
ModInt rat_to_mod(const Rational& q, u64 modulus);

}  // namespace quadcong
