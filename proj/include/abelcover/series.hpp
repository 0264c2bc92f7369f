#pragma once

// Sparse truncated power series in s variables whose exponents lie in the
// lattice (1/scale) Z^s. Exponents are stored as integer numerators over one
// scale per series. Truncation is by total degree: a term survives iff the
// sum of its numerators is at most bound * scale.

#include <cstddef>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "abelcover/arith.hpp"
#include "abelcover/characters.hpp"

namespace abelcover {

using Exponent = std::vector<std::int64_t>;

/// Exponent vector with its denominator: t_i has exponent numerators[i] / scale.
struct ExponentVector {
    Exponent numerators;
    std::int64_t scale = 1;
};

inline std::int64_t total_degree(const Exponent& e)
{
    return std::accumulate(e.begin(), e.end(), std::int64_t{0});
}

/// Terms ordered by total degree, then lexicographically.
struct GradedLexLess {
    bool operator()(const Exponent& a, const Exponent& b) const
    {
        const auto da = total_degree(a);
        const auto db = total_degree(b);
        if (da != db)
            return da < db;
        return a < b;
    }
};

inline bool is_zero(const Integer& x) { return x == 0; }

template <typename Coeff>
class TruncatedSeries {
public:
    using coefficient_type = Coeff;
    using TermMap = std::map<Exponent, Coeff, GradedLexLess>;

    TruncatedSeries(std::size_t num_vars, std::int64_t scale, std::int64_t bound)
        : num_vars_(num_vars), scale_(scale), bound_(bound)
    {
        if (scale < 1 || bound < 0)
            throw Error(ErrorCode::InvalidParameters, "series needs scale >= 1 and bound >= 0");
    }

    std::size_t num_vars() const noexcept { return num_vars_; }
    std::int64_t scale() const noexcept { return scale_; }
    std::int64_t bound() const noexcept { return bound_; }
    const TermMap& terms() const noexcept { return terms_; }
    std::size_t size() const noexcept { return terms_.size(); }

    bool within_bound(const Exponent& e) const { return total_degree(e) <= bound_ * scale_; }

    /// Adds c * t^e. Terms beyond the bound are dropped; cancellations erase
    /// the term.
    void add_term(const Exponent& e, const Coeff& c)
    {
        if (e.size() != num_vars_)
            throw Error(ErrorCode::IncompatibleSeries, "exponent has wrong number of variables");
        if (is_zero(c) || !within_bound(e))
            return;
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            terms_.emplace(e, c);
            return;
        }
        it->second += c;
        if (is_zero(it->second))
            terms_.erase(it);
    }

    /// Coefficient of t^e, or nullptr when it is zero.
    const Coeff* find(const Exponent& e) const
    {
        auto it = terms_.find(e);
        return it == terms_.end() ? nullptr : &it->second;
    }

    friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b)
    {
        return a.num_vars_ == b.num_vars_ && a.scale_ == b.scale_ && a.bound_ == b.bound_ && a.terms_ == b.terms_;
    }

private:
    std::size_t num_vars_;
    std::int64_t scale_;
    std::int64_t bound_;
    TermMap terms_;
};

using IntSeries = TruncatedSeries<Integer>;
using EquivSeries = TruncatedSeries<GroupRingElement>;

namespace detail {

template <typename Coeff>
void require_compatible(const TruncatedSeries<Coeff>& a, const TruncatedSeries<Coeff>& b)
{
    if (a.num_vars() != b.num_vars() || a.scale() != b.scale() || a.bound() != b.bound())
        throw Error(ErrorCode::IncompatibleSeries, "series differ in variables, scale or bound");
}

inline Exponent add(const Exponent& a, const Exponent& b)
{
    Exponent c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        c[i] = a[i] + b[i];
    return c;
}

// Coefficients of (1 - x)^power for k = 0, 1, ...: C(k - power - 1, k) when
// power < 0, and (-1)^k C(power, k) otherwise.
class BinomialSequence {
public:
    explicit BinomialSequence(std::int64_t power) : power_(power) {}

    const Integer& current() const { return value_; }
    bool exhausted() const { return power_ >= 0 && k_ > power_; }

    void advance()
    {
        ++k_;
        if (power_ < 0)
            value_ = value_ * (k_ - power_ - 1) / k_;
        else
            value_ = -value_ * (power_ - k_ + 1) / k_;
    }

private:
    std::int64_t power_;
    std::int64_t k_ = 0;
    Integer value_ = 1;
};

template <typename Coeff, typename CoeffAt>
TruncatedSeries<Coeff> expand_binomial(const ExponentVector& base, std::int64_t power, std::int64_t bound,
                                       CoeffAt coeff_at)
{
    const auto step = total_degree(base.numerators);
    for (auto x : base.numerators)
        if (x < 0)
            throw Error(ErrorCode::InvalidParameters, "negative exponent in factor base");
    if (step == 0)
        throw Error(ErrorCode::ZeroExponentVector, "factor (1 - c)^e with constant base");

    TruncatedSeries<Coeff> out(base.numerators.size(), base.scale, bound);
    Exponent e(base.numerators.size(), 0);
    BinomialSequence binom(power);
    for (std::int64_t k = 0; !binom.exhausted() && k * step <= bound * base.scale; ++k) {
        out.add_term(e, coeff_at(k, binom.current()));
        for (std::size_t i = 0; i < e.size(); ++i)
            e[i] += base.numerators[i];
        binom.advance();
    }
    return out;
}

} // namespace detail

/// (1 - t^m)^power truncated at total degree `bound`.
inline IntSeries expand_factor(const ExponentVector& m, std::int64_t power, std::int64_t bound)
{
    return detail::expand_binomial<Integer>(m, power, bound,
                                            [](std::int64_t, const Integer& b) { return b; });
}

/// (1 - chi t^m)^power truncated at total degree `bound`; the k-th term
/// carries chi^k.
inline EquivSeries expand_factor(const Character& chi, const ExponentVector& m, std::int64_t power,
                                 std::int64_t bound)
{
    return detail::expand_binomial<GroupRingElement>(
        m, power, bound, [&chi](std::int64_t k, const Integer& b) { return GroupRingElement(chi.pow(k), b); });
}

/// The constant series 1.
inline IntSeries unit_series(std::size_t num_vars, std::int64_t scale, std::int64_t bound)
{
    IntSeries one(num_vars, scale, bound);
    one.add_term(Exponent(num_vars, 0), Integer(1));
    return one;
}

inline EquivSeries unit_series(const CharacterGroupPtr& group, std::size_t num_vars, std::int64_t scale,
                               std::int64_t bound)
{
    EquivSeries one(num_vars, scale, bound);
    one.add_term(Exponent(num_vars, 0), GroupRingElement::one(group));
    return one;
}

/// Truncated Cauchy product. Throws IncompatibleSeries.
template <typename Coeff>
TruncatedSeries<Coeff> mul(const TruncatedSeries<Coeff>& a, const TruncatedSeries<Coeff>& b)
{
    detail::require_compatible(a, b);
    TruncatedSeries<Coeff> out(a.num_vars(), a.scale(), a.bound());
    const std::int64_t limit = a.bound() * a.scale();
    for (const auto& [ea, ca] : a.terms()) {
        const auto da = total_degree(ea);
        for (const auto& [eb, cb] : b.terms()) {
            // Terms of b come in increasing total degree.
            if (da + total_degree(eb) > limit)
                break;
            out.add_term(detail::add(ea, eb), ca * cb);
        }
    }
    return out;
}

template <typename Coeff>
TruncatedSeries<Coeff> add(const TruncatedSeries<Coeff>& a, const TruncatedSeries<Coeff>& b)
{
    detail::require_compatible(a, b);
    TruncatedSeries<Coeff> out = a;
    for (const auto& [e, c] : b.terms())
        out.add_term(e, c);
    return out;
}

/// Sum of the monomials with integer exponents, returned at scale 1.
inline IntSeries int_part(const IntSeries& a)
{
    IntSeries out(a.num_vars(), 1, a.bound());
    for (const auto& [e, c] : a.terms()) {
        bool integral = true;
        for (auto x : e)
            integral = integral && x % a.scale() == 0;
        if (!integral)
            continue;
        Exponent reduced(e.size());
        for (std::size_t i = 0; i < e.size(); ++i)
            reduced[i] = e[i] / a.scale();
        out.add_term(reduced, c);
    }
    return out;
}

/// t_i -> t_i^{factors[i]}, re-truncated at the same bound.
template <typename Coeff>
TruncatedSeries<Coeff> rescale_variables(const TruncatedSeries<Coeff>& a, const std::vector<std::int64_t>& factors)
{
    if (factors.size() != a.num_vars())
        throw Error(ErrorCode::IncompatibleSeries, "one factor per variable required");
    for (auto k : factors)
        if (k < 1)
            throw Error(ErrorCode::InvalidParameters, "rescale factors must be positive");
    TruncatedSeries<Coeff> out(a.num_vars(), a.scale(), a.bound());
    for (const auto& [e, c] : a.terms()) {
        Exponent f(e.size());
        for (std::size_t i = 0; i < e.size(); ++i)
            f[i] = e[i] * factors[i];
        out.add_term(f, c);
    }
    return out;
}

/// Re-expresses the exponents over a different denominator. Throws
/// InvalidParameters if some exponent is not representable.
template <typename Coeff>
TruncatedSeries<Coeff> with_scale(const TruncatedSeries<Coeff>& a, std::int64_t scale)
{
    TruncatedSeries<Coeff> out(a.num_vars(), scale, a.bound());
    for (const auto& [e, c] : a.terms()) {
        Exponent f(e.size());
        for (std::size_t i = 0; i < e.size(); ++i) {
            const Integer num = Integer(e[i]) * scale;
            if (num % a.scale() != 0)
                throw Error(ErrorCode::InvalidParameters, "exponent not representable at scale " +
                                                              std::to_string(scale));
            f[i] = to_int64(num / a.scale());
        }
        out.add_term(f, c);
    }
    return out;
}

/// Target exponent of T^source under T_i -> prod_{j in images[i]} t_j.
/// Throws FractionalExponentUnderSubstitution on a non-integral source exponent.
inline Exponent substitute_exponent(const ExponentVector& source, const std::vector<std::vector<std::size_t>>& images,
                                    std::size_t target_vars)
{
    if (images.size() != source.numerators.size())
        throw Error(ErrorCode::IncompatibleSeries, "one image set per source variable required");
    Exponent out(target_vars, 0);
    for (std::size_t i = 0; i < images.size(); ++i) {
        if (source.numerators[i] % source.scale != 0)
            throw Error(ErrorCode::FractionalExponentUnderSubstitution,
                        "T" + std::to_string(i + 1) + "^{" + fraction_string(source.numerators[i], source.scale) +
                            "}");
        const auto power = source.numerators[i] / source.scale;
        for (std::size_t j : images[i]) {
            if (j >= target_vars)
                throw Error(ErrorCode::InvalidParameters, "image variable out of range");
            out[j] += power;
        }
    }
    return out;
}

/// Substitutes T_i -> prod_{j in images[i]} t_j; an empty image is the empty
/// product 1. The result has scale 1 and is re-truncated at the source bound.
template <typename Coeff>
TruncatedSeries<Coeff> substitute_monomials(const TruncatedSeries<Coeff>& a,
                                            const std::vector<std::vector<std::size_t>>& images,
                                            std::size_t target_vars)
{
    TruncatedSeries<Coeff> out(target_vars, 1, a.bound());
    for (const auto& [e, c] : a.terms())
        out.add_term(substitute_exponent({e, a.scale()}, images, target_vars), c);
    return out;
}

/// Applies reduce_dim to every coefficient.
inline IntSeries reduce_coefficients(const EquivSeries& a)
{
    IntSeries out(a.num_vars(), a.scale(), a.bound());
    for (const auto& [e, c] : a.terms())
        out.add_term(e, reduce_dim(c));
    return out;
}

/// Tags every coefficient with the trivial character.
inline EquivSeries lift_trivial(const IntSeries& a, const CharacterGroupPtr& group)
{
    EquivSeries out(a.num_vars(), a.scale(), a.bound());
    for (const auto& [e, c] : a.terms())
        out.add_term(e, Integer(c) * GroupRingElement::one(group));
    return out;
}

template <typename Coeff>
struct SeriesDiscrepancy {
    Exponent exponent;  // numerators over `scale`
    std::int64_t scale;
    std::optional<Coeff> lhs;
    std::optional<Coeff> rhs;
};

/// First exponent (in graded-lex order at the common scale) where the two
/// series differ, truncating both at the smaller bound.
template <typename Coeff>
std::optional<SeriesDiscrepancy<Coeff>> first_difference(const TruncatedSeries<Coeff>& a,
                                                         const TruncatedSeries<Coeff>& b)
{
    if (a.num_vars() != b.num_vars())
        throw Error(ErrorCode::IncompatibleSeries, "series have different numbers of variables");
    const std::int64_t scale = std::lcm(a.scale(), b.scale());
    const std::int64_t bound = std::min(a.bound(), b.bound());
    auto truncate_to_common = [&](const TruncatedSeries<Coeff>& s) {
        TruncatedSeries<Coeff> r(s.num_vars(), scale, bound);
        const auto rescaled = with_scale(s, scale);
        for (const auto& [e, c] : rescaled.terms())
            r.add_term(e, c);
        return r;
    };
    const auto ra = truncate_to_common(a);
    const auto rb = truncate_to_common(b);

    std::optional<SeriesDiscrepancy<Coeff>> first;
    auto consider = [&](const Exponent& e) {
        if (first && !GradedLexLess{}(e, first->exponent))
            return;
        const Coeff* x = ra.find(e);
        const Coeff* y = rb.find(e);
        if (x && y && *x == *y)
            return;
        first = SeriesDiscrepancy<Coeff>{e, scale, x ? std::optional<Coeff>(*x) : std::nullopt,
                                         y ? std::optional<Coeff>(*y) : std::nullopt};
    };
    for (const auto& [e, c] : ra.terms())
        consider(e);
    for (const auto& [e, c] : rb.terms())
        consider(e);
    return first;
}

} // namespace abelcover
