#include "abelcover/poincare.hpp"

#include <algorithm>

namespace abelcover {

namespace {

void require_mode(const FiltrationSpec& spec, FiltrationMode mode)
{
    if (spec.mode != mode)
        throw Error(ErrorCode::ModeMismatch, mode == FiltrationMode::Divisorial ? "divisorial series requested"
                                                                                 : "curve series requested");
    if (mode == FiltrationMode::Divisorial && spec.graph.marked.empty())
        throw Error(ErrorCode::ModeMismatch, "divisorial series need at least one marked component");
    if (mode == FiltrationMode::Curve && spec.graph.branches.empty())
        throw Error(ErrorCode::ModeMismatch, "curve series need at least one branch");
}

template <typename Coeff, typename Factor>
TruncatedSeries<Coeff> product_over_components(TruncatedSeries<Coeff> acc, std::size_t count, Factor factor)
{
    for (std::size_t sigma = 0; sigma < count; ++sigma)
        if (auto f = factor(sigma))
            acc = mul(acc, *f);
    return acc;
}

} // namespace

GraphInvariants compute_invariants(const ResolutionGraph& graph)
{
    GraphInvariants inv;
    inv.neg_intersection = neg_intersection_matrix(graph);
    inv.determinant = determinant(inv.neg_intersection);
    inv.m = m_matrix(inv.neg_intersection);
    inv.smith = smith_normal_form(intersection_matrix(graph));
    inv.group = group_structure(inv.smith, inv.determinant);
    for (std::size_t s = 0; s < graph.size(); ++s) {
        inv.orders.push_back(element_order(inv.group, inv.m, s));
        inv.alphas.push_back(alpha_character(inv.m, inv.group, s));
    }
    return inv;
}

std::int64_t equivariant_exponent(const GraphInvariants& inv, std::size_t i, std::size_t sigma)
{
    const Rational e = Rational(inv.orders[i]) * inv.m(i, sigma);
    if (!is_integral(e))
        throw Error(ErrorCode::NonIntegralEquivariantExponent,
                    "d_" + std::to_string(i) + " m_" + std::to_string(i) + "," + std::to_string(sigma) + " = " +
                        fraction_string(e));
    return to_int64(numerator(e));
}

IntSeries compute_Q(const FiltrationSpec& spec)
{
    return compute_Q(spec, compute_invariants(spec.graph));
}

IntSeries compute_Q(const FiltrationSpec& spec, const GraphInvariants& inv)
{
    require_mode(spec, FiltrationMode::Divisorial);
    const auto& marked = spec.graph.marked;
    const std::int64_t d = to_int64(inv.determinant);
    return product_over_components(
        unit_series(marked.size(), d, spec.bound), spec.graph.size(), [&](std::size_t sigma) -> std::optional<IntSeries> {
            const auto chi = euler_smooth_part(spec.graph, sigma, FiltrationMode::Divisorial);
            if (chi == 0)
                return std::nullopt;
            ExponentVector base{Exponent(marked.size()), d};
            for (std::size_t i = 0; i < marked.size(); ++i) {
                const Rational scaled = inv.m(sigma, marked[i]) * d;
                if (!is_integral(scaled))
                    throw Error(ErrorCode::DecompositionCheckFailed, "m entry outside (1/d)Z");
                base.numerators[i] = to_int64(numerator(scaled));
            }
            return expand_factor(base, -chi, spec.bound);
        });
}

IntSeries compute_P(const FiltrationSpec& spec)
{
    return compute_P(spec, compute_invariants(spec.graph));
}

IntSeries compute_P(const FiltrationSpec& spec, const GraphInvariants& inv)
{
    return int_part(compute_Q(spec, inv));
}

EquivSeries compute_PG(const FiltrationSpec& spec)
{
    return compute_PG(spec, compute_invariants(spec.graph));
}

EquivSeries compute_PG(const FiltrationSpec& spec, const GraphInvariants& inv)
{
    require_mode(spec, FiltrationMode::Divisorial);
    const auto& marked = spec.graph.marked;

    // Integrality of every exponent is checked up front, including factors
    // with chi = 0 that do not enter the product.
    std::vector<ExponentVector> bases;
    for (std::size_t sigma = 0; sigma < spec.graph.size(); ++sigma) {
        ExponentVector base{Exponent(marked.size()), 1};
        for (std::size_t i = 0; i < marked.size(); ++i)
            base.numerators[i] = equivariant_exponent(inv, marked[i], sigma);
        bases.push_back(std::move(base));
    }

    return product_over_components(
        unit_series(inv.group.group, marked.size(), 1, spec.bound), spec.graph.size(),
        [&](std::size_t sigma) -> std::optional<EquivSeries> {
            const auto chi = euler_smooth_part(spec.graph, sigma, FiltrationMode::Divisorial);
            if (chi == 0)
                return std::nullopt;
            return expand_factor(inv.alphas[sigma], bases[sigma], -chi, spec.bound);
        });
}

std::vector<std::vector<std::size_t>> branch_images(const ResolutionGraph& graph)
{
    std::vector<std::vector<std::size_t>> images(graph.size());
    for (std::size_t b = 0; b < graph.branches.size(); ++b)
        images[graph.branches[b].attached_to].push_back(b);
    return images;
}

std::vector<CurveFactor> curve_factors(const ResolutionGraph& graph, const GraphInvariants& inv)
{
    std::vector<CurveFactor> factors;
    for (std::size_t i = 0; i < graph.size(); ++i) {
        CurveFactor f{i, euler_smooth_part(graph, i, FiltrationMode::Curve), {Exponent(graph.size()), 1}};
        for (std::size_t j = 0; j < graph.size(); ++j)
            f.t_exponent.numerators[j] = equivariant_exponent(inv, j, i);
        factors.push_back(std::move(f));
    }
    return factors;
}

EquivSeries compute_PG_curve(const FiltrationSpec& spec)
{
    return compute_PG_curve(spec, compute_invariants(spec.graph));
}

EquivSeries compute_PG_curve(const FiltrationSpec& spec, const GraphInvariants& inv)
{
    require_mode(spec, FiltrationMode::Curve);
    const std::size_t r = spec.graph.branches.size();
    const auto images = branch_images(spec.graph);
    const auto factors = curve_factors(spec.graph, inv);

    // The substitution is a ring map, so it is applied to each factor's base
    // before expansion. Truncating in the T-variables first would be wrong:
    // T_j -> 1 lowers degrees.
    EquivSeries acc = unit_series(inv.group.group, r, 1, spec.bound);
    for (const auto& f : factors) {
        if (f.euler == 0)
            continue;
        ExponentVector base{substitute_exponent(f.t_exponent, images, r), 1};
        acc = mul(acc, expand_factor(inv.alphas[f.component], base, -f.euler, spec.bound));
    }
    return acc;
}

CorollaryVerdict check_corollary(const FiltrationSpec& spec)
{
    const auto inv = compute_invariants(spec.graph);
    const auto lhs = reduce_coefficients(compute_PG(spec, inv));

    // t_i -> t_i^{d_i} never lowers total degree, so Q truncated at the same
    // bound already holds every term needed on the right-hand side.
    std::vector<std::int64_t> factors;
    for (std::size_t i : spec.graph.marked)
        factors.push_back(inv.orders[i]);
    const auto rhs = rescale_variables(compute_Q(spec, inv), factors);

    CorollaryVerdict verdict;
    verdict.bound = spec.bound;
    verdict.first_difference = first_difference(lhs, rhs);
    verdict.equal = !verdict.first_difference;
    return verdict;
}

Lemma1Verdict check_lemma1(const ResolutionGraph& graph)
{
    const IntMatrix neg = neg_intersection_matrix(graph);
    const Integer d = determinant(neg);
    const RatMatrix m = m_matrix(neg);
    const auto group = group_structure(smith_normal_form(intersection_matrix(graph)), d);

    Lemma1Verdict verdict;
    for (std::size_t s = 0; s < graph.size(); ++s) {
        OrderPair pair{1, coords_order(*group.group, group.generator_coords[s])};
        for (std::size_t delta = 0; delta < graph.size(); ++delta)
            pair.by_denominators = lcm(pair.by_denominators, denominator(m(delta, s)));
        verdict.agree = verdict.agree && pair.by_denominators == pair.by_cokernel;
        verdict.divides_determinant = verdict.divides_determinant && d % pair.by_cokernel == 0;
        verdict.orders.push_back(pair);
    }
    return verdict;
}

} // namespace abelcover
