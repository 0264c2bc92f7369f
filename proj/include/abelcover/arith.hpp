#pragma once

// Exact scalar types and the error type shared by every module.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace abelcover {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

enum class ErrorCode {
    // input / usage
    ParseError,
    UnknownVertex,
    ModeMismatch,
    InvalidParameters,
    InvalidFamilyIndex,
    ValidationFailed,
    // algebraic misuse
    SingularMatrix,
    GroupMismatch,
    IncompatibleSeries,
    ZeroExponentVector,
    FractionalExponentUnderSubstitution,
    Overflow,
    // internal consistency; never valid input
    OrderMismatch,
    OrderDisagreement,
    IllDefinedCharacter,
    NonIntegralEquivariantExponent,
    DeterminantMismatch,
    NonIntegralValuationOnInvariantMonomial,
    DecompositionCheckFailed,
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code)
    {
    }

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

// Floor division and nonnegative remainder for a positive modulus.
std::int64_t floor_mod(std::int64_t a, std::int64_t n);
Integer floor_mod(const Integer& a, const Integer& n);

// r - floor(r), in [0, 1).
/// num/den with den != 0 of either sign. Boost's two-argument constructor
/// rejects negative denominators for unbounded integers.
Rational make_rational(const Integer& num, const Integer& den);

Rational frac(const Rational& r);

Integer gcd(const Integer& a, const Integer& b);
Integer lcm(const Integer& a, const Integer& b);

// Narrowing that throws Overflow instead of wrapping.
std::int64_t to_int64(const Integer& x);

bool is_integral(const Rational& r);

// "p/q" in lowest terms, or "p" when the denominator is 1.
std::string fraction_string(const Rational& r);
std::string fraction_string(std::int64_t num, std::int64_t den);

} // namespace abelcover
