#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "abelcover/graph.hpp"
#include "abelcover/poincare.hpp"
#include "abelcover/series.hpp"

namespace abelcover {

class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t line = 0, std::size_t column = 0)
        : Error(ErrorCode::ParseError, line ? what + " at line " + std::to_string(line) + ", column " +
                                                  std::to_string(column)
                                            : what),
          line_(line), column_(column)
    {
    }
    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

/// On-disk graph:
///   {"vertices": [{"id": "E1", "self_intersection": -2}, ...],
///    "edges": [["E1", "E2"], ...],
///    "marked": ["E1", ...],
///    "branches": [{"id": "C1", "attached_to": "E1"}, ...]}
/// "edges", "marked" and "branches" are optional. Throws ParseError.
ResolutionGraph parse_graph_json(std::string_view text);
ResolutionGraph load_graph_file(const std::string& path);
std::string graph_to_json(const ResolutionGraph& graph);

/// "t1^{1/2} t2", "t1^2"; empty for the constant monomial.
std::string monomial_string(const Exponent& e, std::int64_t scale);

/// Terms in graded-lex order: "1 + 2 t1^{1/2} - t1", "0" when empty.
std::string series_to_text(const IntSeries& s);

/// Group-ring coefficients written as c·[a_1/n_1,...]; a lone 1·[trivial]
/// constant term prints as "1".
std::string series_to_text(const EquivSeries& s);

std::string group_ring_to_text(const GroupRingElement& x);

/// {"coefficients": "integer" | "group_ring", "degree_bound": N,
///  "invariant_factors": [...], "scale": d, "variables": ["t1", ...],
///  "terms": [{"exponents": [...], "scale": d, "coefficient": c}, ...]}
/// Group-ring coefficients are lists of [coords, coefficient] pairs; integers
/// that do not fit in 64 bits are written as decimal strings.
std::string series_to_json(const IntSeries& s);
std::string series_to_json(const EquivSeries& s);

using AnySeries = std::variant<IntSeries, EquivSeries>;

/// Inverse of series_to_json. Throws ParseError.
AnySeries parse_series_json(std::string_view text);
std::string series_to_json(const AnySeries& s);

/// Human-readable report of d, m, G, d_s and alpha_s.
std::string invariants_to_text(const ResolutionGraph& graph, const GraphInvariants& inv);

std::string group_to_text(const CharacterGroup& group);

} // namespace abelcover
