#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "abelcover/arith.hpp"

namespace abelcover {

enum class FiltrationMode { Divisorial, Curve };

struct Vertex {
    std::string id;
    std::int64_t self_intersection = -2;
};

/// Strict transform of a curve branch, meeting one exceptional component
/// transversally at a smooth point.
struct Branch {
    std::string id;
    std::size_t attached_to = 0;
};

/// Resolution dual graph. Vertex order is input order and fixes the row/column
/// order of every matrix derived from the graph. Holds unvalidated data; run
/// validate() before computing with it.
class ResolutionGraph {
public:
    std::vector<Vertex> vertices;
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    std::vector<std::size_t> marked;
    std::vector<Branch> branches;

    std::size_t size() const noexcept { return vertices.size(); }

    std::size_t add_vertex(std::string id, std::int64_t self_intersection);
    void add_edge(std::string_view a, std::string_view b);
    void mark(std::string_view id);
    void add_branch(std::string id, std::string_view attached_to);

    /// Throws UnknownVertex.
    std::size_t index_of(std::string_view id) const;
    std::optional<std::size_t> find(std::string_view id) const;

    std::size_t degree(std::size_t vertex) const;
    std::size_t branch_count(std::size_t vertex) const;
};

enum class IssueKind {
    NotATree,
    NonNegativeSelfIntersection,
    NotNegativeDefinite,
    NotRational,
    DuplicateMark,
    EmptyMarkSet,
    DuplicateBranch,
    EmptyBranchSet,
    UnknownVertex,
};

std::string_view to_string(IssueKind kind);

struct ValidationIssue {
    IssueKind kind;
    std::vector<std::string> vertices;
    std::string detail;
};

struct ValidationReport {
    std::vector<ValidationIssue> issues;

    bool ok() const noexcept { return issues.empty(); }
    bool has(IssueKind kind) const;
    std::string to_string() const;
};

class ValidationError : public Error {
public:
    explicit ValidationError(ValidationReport report)
        : Error(ErrorCode::ValidationFailed, report.to_string()), report_(std::move(report))
    {
    }
    const ValidationReport& report() const noexcept { return report_; }

private:
    ValidationReport report_;
};

struct ValidationOptions {
    /// Divisorial needs marks, curve needs branches; unset needs either.
    std::optional<FiltrationMode> mode;
    bool check_rationality = true;
};

/// Collects every violated invariant instead of stopping at the first.
ValidationReport validate(const ResolutionGraph& graph, const ValidationOptions& options = {});

/// validate() and throw ValidationError on any issue.
void require_valid(const ResolutionGraph& graph, const ValidationOptions& options = {});

/// Euler characteristic of the smooth part of E_vertex: 2 minus the number of
/// intersection points with the other exceptional components, and in curve
/// mode also minus the number of attached branches. Throws UnknownVertex.
std::int64_t euler_smooth_part(const ResolutionGraph& graph, std::size_t vertex, FiltrationMode mode);

/// Exceptional cycle with integer coefficients indexed by vertex.
struct CycleVector {
    std::vector<std::int64_t> coefficients;

    friend bool operator==(const CycleVector&, const CycleVector&) = default;
};

/// Intersection number Z . E_vertex.
Integer cycle_dot_component(const ResolutionGraph& graph, const CycleVector& z, std::size_t vertex);

/// Rational cycle K with K.E_s = -E_s^2 - 2 for all s.
std::vector<Rational> canonical_cycle(const ResolutionGraph& graph);

/// Laufer's iteration from the reduced cycle sum E_s.
CycleVector fundamental_cycle(const ResolutionGraph& graph);

struct RationalityVerdict {
    CycleVector fundamental_cycle;
    Integer arithmetic_genus;
    bool rational = false;
};

/// Artin's criterion: rational iff p_a(Z) = 1 + (Z.Z + Z.K)/2 vanishes.
RationalityVerdict is_rational(const ResolutionGraph& graph);

} // namespace abelcover
