#include "quadcong/modring.hpp"

#include <numeric>

namespace quadcong {

u64 powmod(u64 a, u64 e, u64 m) {
    u64 r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod(r, a, m);
        a = mulmod(a, a, m);
        e >>= 1;
    }
    return r;
}

u64 invmod(u64 a, u64 m) {
    a %= m;
    i128 t = 0, nt = 1;
    i128 r = m, nr = a;
    while (nr != 0) {
        i128 q = r / nr;
        i128 tmp = t - q * nt;
        t = nt;
        nt = tmp;
        tmp = r - q * nr;
        r = nr;
        nr = tmp;
    }
    if (r != 1)
        throw NotInvertible("invmod: gcd(" + std::to_string(a) + ", " +
                            std::to_string(m) + ") != 1");
    if (t < 0) t += m;
    return u64(t);
}

static void check_modulus(u64 m) {
    if (m < 2 || m > kMaxModulus)
        throw Error("modulus out of range: " + std::to_string(m));
}

ModInt::ModInt(i64 value, u64 modulus) {
    check_modulus(modulus);
    i64 r = value % i64(modulus);
    if (r < 0) r += i64(modulus);
    v_ = u64(r);
    m_ = modulus;
}

ModInt ModInt::residue(u64 value, u64 modulus) {
    check_modulus(modulus);
    ModInt x;
    x.v_ = value % modulus;
    x.m_ = modulus;
    return x;
}

i64 ModInt::signed_value() const {
    return 2 * v_ > m_ ? i64(v_) - i64(m_) : i64(v_);
}

static void same_modulus(const ModInt& a, const ModInt& b) {
    if (a.modulus() != b.modulus())
        throw ModulusMismatch("mixed moduli " + std::to_string(a.modulus()) +
                              " and " + std::to_string(b.modulus()));
}

ModInt& ModInt::operator+=(const ModInt& o) {
    same_modulus(*this, o);
    v_ += o.v_;
    if (v_ >= m_) v_ -= m_;
    return *this;
}

ModInt& ModInt::operator-=(const ModInt& o) {
    same_modulus(*this, o);
    v_ = v_ >= o.v_ ? v_ - o.v_ : v_ + m_ - o.v_;
    return *this;
}

ModInt& ModInt::operator*=(const ModInt& o) {
    same_modulus(*this, o);
    v_ = mulmod(v_, o.v_, m_);
    return *this;
}

ModInt ModInt::reduce(u64 new_modulus) const {
    check_modulus(new_modulus);
    if (m_ % new_modulus != 0)
        throw ModulusMismatch("reduce: " + std::to_string(new_modulus) +
                              " does not divide " + std::to_string(m_));
    return residue(v_ % new_modulus, new_modulus);
}

Rational::Rational(i64 n, i64 d) {
    if (d == 0) throw Error("Rational: zero denominator");
    if (d < 0) {
        n = -n;
        d = -d;
    }
    i64 g = std::gcd(n, d);
    if (g > 1) {
        n /= g;
        d /= g;
    }
    num = n;
    den = d;
}

static i64 checked(i128 v, const char* what) {
    if (v > i128(INT64_MAX) || v < i128(INT64_MIN))
        throw Error(std::string("Rational overflow in ") + what);
    return i64(v);
}

Rational Rational::operator+(const Rational& o) const {
    i64 g = std::gcd(den, o.den);
    i128 n = i128(num) * (o.den / g) + i128(o.num) * (den / g);
    i128 d = i128(den / g) * o.den;
    return Rational(checked(n, "+"), checked(d, "+"));
}

Rational Rational::operator-(const Rational& o) const {
    return *this + Rational(-o.num, o.den);
}

Rational Rational::operator*(const Rational& o) const {
    // cross-reduce before multiplying to keep intermediates small
    i64 g1 = std::gcd(num, o.den);
    i64 g2 = std::gcd(o.num, den);
    i128 n = i128(num / g1) * (o.num / g2);
    i128 d = i128(den / g2) * (o.den / g1);
    return Rational(checked(n, "*"), checked(d, "*"));
}

ModInt rat_to_mod(const Rational& q, u64 modulus) {
    ModInt n(q.num, modulus);
    u64 d = u64(q.den) % modulus;
    return ModInt::residue(mulmod(n.value(), invmod(d, modulus), modulus),
                           modulus);
}

}  // namespace quadcong
