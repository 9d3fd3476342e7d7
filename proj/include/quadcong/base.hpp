#pragma once

// Common integer typedefs and the error taxonomy shared by all modules.

#include <cstdint>
#include <stdexcept>
#include <string>

namespace quadcong {

using u32 = std::uint32_t;
using u64 = std::uint64_t;
using i64 = std::int64_t;
using u128 = unsigned __int128;
using i128 = __int128;

struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Mixing residues with different moduli in one expression.
struct ModulusMismatch : Error { using Error::Error; };

// gcd(a, m) > 1 when an inverse mod m was requested.
struct NotInvertible : Error { using Error::Error; };

// Base of a Fermat quotient shares a factor with p.
struct NotCoprime : Error { using Error::Error; };

// Coefficient or harmonic index outside the supported range.
struct IndexTooLarge : Error { using Error::Error; };

// A quarter-sum denominator 4k+c hit a multiple of p.
struct TermDivisibleByP : Error { using Error::Error; };

// p does not divide the Pell number it always should divide.
struct IntegralityViolation : Error { using Error::Error; };

// A closed form was requested outside its stated range of validity.
struct SideConditionViolated : Error { using Error::Error; };

// A coefficient row would exceed the configured size budget.
struct SizeBudgetExceeded : Error { using Error::Error; };

// PrimeCase construction on a composite or p < 5.
struct InvalidPrime : Error { using Error::Error; };

// Bad sweep configuration (CLI maps this to exit code 2).
struct UsageError : Error { using Error::Error; };

}  // namespace quadcong
