#include "abelcover/arith.hpp"

#include <limits>
#include <numeric>

namespace abelcover {

std::string_view to_string(ErrorCode code)
{
    switch (code) {
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::UnknownVertex: return "UnknownVertex";
    case ErrorCode::ModeMismatch: return "ModeMismatch";
    case ErrorCode::InvalidParameters: return "InvalidParameters";
    case ErrorCode::InvalidFamilyIndex: return "InvalidFamilyIndex";
    case ErrorCode::ValidationFailed: return "ValidationFailed";
    case ErrorCode::SingularMatrix: return "SingularMatrix";
    case ErrorCode::GroupMismatch: return "GroupMismatch";
    case ErrorCode::IncompatibleSeries: return "IncompatibleSeries";
    case ErrorCode::ZeroExponentVector: return "ZeroExponentVector";
    case ErrorCode::FractionalExponentUnderSubstitution: return "FractionalExponentUnderSubstitution";
    case ErrorCode::Overflow: return "Overflow";
    case ErrorCode::OrderMismatch: return "OrderMismatch";
    case ErrorCode::OrderDisagreement: return "OrderDisagreement";
    case ErrorCode::IllDefinedCharacter: return "IllDefinedCharacter";
    case ErrorCode::NonIntegralEquivariantExponent: return "NonIntegralEquivariantExponent";
    case ErrorCode::DeterminantMismatch: return "DeterminantMismatch";
    case ErrorCode::NonIntegralValuationOnInvariantMonomial: return "NonIntegralValuationOnInvariantMonomial";
    case ErrorCode::DecompositionCheckFailed: return "DecompositionCheckFailed";
    }
    return "UnknownError";
}

std::int64_t floor_mod(std::int64_t a, std::int64_t n)
{
    std::int64_t r = a % n;
    return r < 0 ? r + n : r;
}

Integer floor_mod(const Integer& a, const Integer& n)
{
    Integer r = a % n;
    return r < 0 ? Integer(r + n) : r;
}

Rational make_rational(const Integer& num, const Integer& den)
{
    if (den == 0)
        throw Error(ErrorCode::InvalidParameters, "zero denominator");
    return den < 0 ? Rational(Integer(-num), Integer(-den)) : Rational(num, den);
}

Rational frac(const Rational& r)
{
    const Integer num = numerator(r);
    const Integer den = denominator(r);
    return Rational(floor_mod(num, den), den);
}

Integer gcd(const Integer& a, const Integer& b)
{
    return boost::multiprecision::gcd(a, b);
}

Integer lcm(const Integer& a, const Integer& b)
{
    if (a == 0 || b == 0)
        return 0;
    return boost::multiprecision::abs(a / gcd(a, b) * b);
}

std::int64_t to_int64(const Integer& x)
{
    if (x > std::numeric_limits<std::int64_t>::max() || x < std::numeric_limits<std::int64_t>::min())
        throw Error(ErrorCode::Overflow, "value " + x.str() + " does not fit in 64 bits");
    return static_cast<std::int64_t>(x);
}

bool is_integral(const Rational& r)
{
    return denominator(r) == 1;
}

std::string fraction_string(const Rational& r)
{
    if (denominator(r) == 1)
        return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

std::string fraction_string(std::int64_t num, std::int64_t den)
{
    return fraction_string(make_rational(num, den));
}

} // namespace abelcover
