#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "abelcover/characters.hpp"
#include "abelcover/graph.hpp"
#include "abelcover/linalg.hpp"
#include "abelcover/series.hpp"

namespace abelcover {

struct FiltrationSpec {
    ResolutionGraph graph;
    FiltrationMode mode = FiltrationMode::Divisorial;
    /// Truncation degree N (total degree in the t-variables).
    std::int64_t bound = 10;
};

/// Everything derived from the intersection matrix that the series need.
struct GraphInvariants {
    IntMatrix neg_intersection;
    Integer determinant;  // d
    RatMatrix m;          // (-I)^{-1}
    SmithDecomposition smith;  // of I
    AbelianGroupStructure group;
    std::vector<std::int64_t> orders;  // d_s, both routes checked
    std::vector<Character> alphas;
};

/// Assumes a validated, negative-definite graph. Throws on any internal
/// inconsistency (OrderDisagreement, IllDefinedCharacter, ...).
GraphInvariants compute_invariants(const ResolutionGraph& graph);

/// d_i * m_{i sigma} as an integer; throws NonIntegralEquivariantExponent.
std::int64_t equivariant_exponent(const GraphInvariants& inv, std::size_t i, std::size_t sigma);

/// Q(t) = prod over all sigma of (1 - t^{m_sigma})^{-chi(E_sigma smooth)},
/// m_sigma = (m_{sigma,i}) over the marked components. Scale d.
IntSeries compute_Q(const FiltrationSpec& spec);
IntSeries compute_Q(const FiltrationSpec& spec, const GraphInvariants& inv);

/// P = Int Q.
IntSeries compute_P(const FiltrationSpec& spec);
IntSeries compute_P(const FiltrationSpec& spec, const GraphInvariants& inv);

/// Equivariant series prod_sigma (1 - alpha_sigma t^{(d_i m_{i sigma})_i})^{-chi}.
EquivSeries compute_PG(const FiltrationSpec& spec);
EquivSeries compute_PG(const FiltrationSpec& spec, const GraphInvariants& inv);

/// Curve-branch version: one factor per exceptional component with curve-mode
/// Euler characteristic, T_j -> product of the t_b over branches b on E_j.
EquivSeries compute_PG_curve(const FiltrationSpec& spec);
EquivSeries compute_PG_curve(const FiltrationSpec& spec, const GraphInvariants& inv);

/// Image sets for the curve substitution: images[j] lists the branches on E_j.
std::vector<std::vector<std::size_t>> branch_images(const ResolutionGraph& graph);

/// Per-component factor data of the curve product before substitution.
struct CurveFactor {
    std::size_t component;
    std::int64_t euler;
    ExponentVector t_exponent;  // over T_1..T_|Gamma|, scale 1
};
std::vector<CurveFactor> curve_factors(const ResolutionGraph& graph, const GraphInvariants& inv);

struct CorollaryVerdict {
    bool equal = false;
    std::int64_t bound = 0;
    std::optional<SeriesDiscrepancy<Integer>> first_difference;
};

/// red P^G(t) against Q(t_1^{d_1}, ..., t_s^{d_s}), term by term to the bound.
CorollaryVerdict check_corollary(const FiltrationSpec& spec);

struct OrderPair {
    Integer by_denominators;
    std::int64_t by_cokernel;
};

struct Lemma1Verdict {
    bool agree = true;
    bool divides_determinant = true;
    std::vector<OrderPair> orders;
};

/// Recomputes d_s by both routes for every component.
Lemma1Verdict check_lemma1(const ResolutionGraph& graph);

} // namespace abelcover
