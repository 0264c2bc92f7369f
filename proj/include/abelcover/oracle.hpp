#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "abelcover/graph.hpp"
#include "abelcover/series.hpp"

namespace abelcover {

/// The cyclic quotient C^2 / (Z/n), generator acting by (x, y) -> (z x, z^q y)
/// with z a primitive n-th root of unity.
struct CyclicQuotientSpec {
    std::int64_t n = 2;
    std::int64_t q = 1;
    std::size_t component_index = 0;  // chain vertex carrying the valuation, 0-based
    std::int64_t degree_bound = 10;
};

/// Hirzebruch-Jung expansion n/q = b_1 - 1/(b_2 - ... - 1/b_k), all b_i >= 2.
/// Throws InvalidParameters unless 1 <= q < n and gcd(n, q) = 1.
std::vector<std::int64_t> hj_expansion(std::int64_t n, std::int64_t q);

/// Evaluates b_1 - 1/(b_2 - ...) exactly.
Rational hj_value(const std::vector<std::int64_t>& bs);

/// Chain with self-intersections -b_i, vertices "E1".."Ek", nothing marked.
ResolutionGraph build_chain_graph(const std::vector<std::int64_t>& bs);

/// Chain for (n, q), checked against det(-I) = n (DeterminantMismatch).
ResolutionGraph cyclic_quotient_graph(std::int64_t n, std::int64_t q);

/// Where the strict transform of {x = 0} meets the chain; {y = 0} meets the
/// opposite end.
enum class EndpointConvention { XMeetsFirst, XMeetsLast };

/// Convention fixed by the (2,1) and (5,3) checks: the other one yields
/// non-integral valuations on invariant monomials.
inline constexpr EndpointConvention kEndpointConvention = EndpointConvention::XMeetsLast;

/// Counts invariant monomials x^a y^b by their valuation
/// a m_{i,x-end} + b m_{i,y-end} along the chosen chain vertex. Throws
/// NonIntegralValuationOnInvariantMonomial if the convention is wrong.
IntSeries monomial_poincare_s1(const CyclicQuotientSpec& spec,
                               EndpointConvention convention = kEndpointConvention);

struct OracleVerdict {
    bool equal = false;
    std::optional<std::int64_t> first_degree;
    Integer oracle_coefficient;
    Integer formula_coefficient;
};

/// Monomial count against Int Q on the chain with the single marked vertex.
OracleVerdict compare_with_formula(const CyclicQuotientSpec& spec);

enum class AdeFamily { A, D, E };

/// A_n (n >= 1), D_n (n >= 4), E_6, E_7, E_8; all curves -2, nothing marked.
/// Throws InvalidFamilyIndex.
ResolutionGraph ade_family(AdeFamily family, int n);

/// Parses "A5", "D4", "E8" (case-insensitive).
ResolutionGraph ade_family(std::string_view name);

} // namespace abelcover
