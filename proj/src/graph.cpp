#include "abelcover/graph.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "abelcover/linalg.hpp"

namespace abelcover {

std::size_t ResolutionGraph::add_vertex(std::string id, std::int64_t self_intersection)
{
    vertices.push_back({std::move(id), self_intersection});
    return vertices.size() - 1;
}

void ResolutionGraph::add_edge(std::string_view a, std::string_view b)
{
    edges.emplace_back(index_of(a), index_of(b));
}

void ResolutionGraph::mark(std::string_view id)
{
    marked.push_back(index_of(id));
}

void ResolutionGraph::add_branch(std::string id, std::string_view attached_to)
{
    branches.push_back({std::move(id), index_of(attached_to)});
}

std::optional<std::size_t> ResolutionGraph::find(std::string_view id) const
{
    for (std::size_t i = 0; i < vertices.size(); ++i)
        if (vertices[i].id == id)
            return i;
    return std::nullopt;
}

std::size_t ResolutionGraph::index_of(std::string_view id) const
{
    if (auto i = find(id))
        return *i;
    throw Error(ErrorCode::UnknownVertex, "no vertex with id '" + std::string(id) + "'");
}

std::size_t ResolutionGraph::degree(std::size_t vertex) const
{
    return std::count_if(edges.begin(), edges.end(),
                         [vertex](const auto& e) { return e.first == vertex || e.second == vertex; });
}

std::size_t ResolutionGraph::branch_count(std::size_t vertex) const
{
    return std::count_if(branches.begin(), branches.end(),
                         [vertex](const Branch& b) { return b.attached_to == vertex; });
}

std::string_view to_string(IssueKind kind)
{
    switch (kind) {
    case IssueKind::NotATree: return "NotATree";
    case IssueKind::NonNegativeSelfIntersection: return "NonNegativeSelfIntersection";
    case IssueKind::NotNegativeDefinite: return "NotNegativeDefinite";
    case IssueKind::NotRational: return "NotRational";
    case IssueKind::DuplicateMark: return "DuplicateMark";
    case IssueKind::EmptyMarkSet: return "EmptyMarkSet";
    case IssueKind::DuplicateBranch: return "DuplicateBranch";
    case IssueKind::EmptyBranchSet: return "EmptyBranchSet";
    case IssueKind::UnknownVertex: return "UnknownVertex";
    }
    return "Unknown";
}

bool ValidationReport::has(IssueKind kind) const
{
    return std::any_of(issues.begin(), issues.end(), [kind](const auto& i) { return i.kind == kind; });
}

std::string ValidationReport::to_string() const
{
    std::ostringstream out;
    for (std::size_t k = 0; k < issues.size(); ++k) {
        const auto& issue = issues[k];
        if (k)
            out << "; ";
        out << abelcover::to_string(issue.kind);
        if (!issue.vertices.empty()) {
            out << " [";
            for (std::size_t i = 0; i < issue.vertices.size(); ++i)
                out << (i ? "," : "") << issue.vertices[i];
            out << "]";
        }
        if (!issue.detail.empty())
            out << " (" << issue.detail << ")";
    }
    return out.str();
}

namespace {

class IssueCollector {
public:
    IssueCollector(const ResolutionGraph& graph, ValidationReport& report) : graph_(graph), report_(report) {}

    void add(IssueKind kind, const std::vector<std::size_t>& vertices, std::string detail = {})
    {
        ValidationIssue issue{kind, {}, std::move(detail)};
        for (std::size_t v : vertices)
            issue.vertices.push_back(v < graph_.size() ? graph_.vertices[v].id : "#" + std::to_string(v));
        report_.issues.push_back(std::move(issue));
    }

private:
    const ResolutionGraph& graph_;
    ValidationReport& report_;
};

// Returns true when the structural checks passed (valid indices, a tree).
bool check_tree(const ResolutionGraph& graph, IssueCollector& issues)
{
    const std::size_t n = graph.size();
    if (n == 0) {
        issues.add(IssueKind::NotATree, {}, "graph has no vertices");
        return false;
    }

    bool ok = true;
    std::set<std::pair<std::size_t, std::size_t>> seen;
    for (auto [a, b] : graph.edges) {
        if (a >= n || b >= n) {
            issues.add(IssueKind::UnknownVertex, {a, b}, "edge endpoint out of range");
            ok = false;
            continue;
        }
        if (a == b) {
            issues.add(IssueKind::NotATree, {a}, "self-loop");
            ok = false;
            continue;
        }
        if (!seen.insert(std::minmax(a, b)).second) {
            issues.add(IssueKind::NotATree, {a, b}, "multiple edge");
            ok = false;
        }
    }
    if (!ok)
        return false;

    if (graph.edges.size() != n - 1) {
        issues.add(IssueKind::NotATree, {},
                   std::to_string(graph.edges.size()) + " edges on " + std::to_string(n) + " vertices");
        ok = false;
    }

    // Connectivity from vertex 0.
    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), std::size_t{0});
    auto root = [&](std::size_t x) {
        while (parent[x] != x)
            x = parent[x] = parent[parent[x]];
        return x;
    };
    for (auto [a, b] : graph.edges)
        parent[root(a)] = root(b);
    std::vector<std::size_t> detached;
    for (std::size_t v = 0; v < n; ++v)
        if (root(v) != root(0))
            detached.push_back(v);
    if (!detached.empty()) {
        issues.add(IssueKind::NotATree, detached, "not connected to " + graph.vertices[0].id);
        ok = false;
    }
    return ok;
}

} // namespace

ValidationReport validate(const ResolutionGraph& graph, const ValidationOptions& options)
{
    ValidationReport report;
    IssueCollector issues(graph, report);
    const std::size_t n = graph.size();

    const bool tree = check_tree(graph, issues);

    bool negative_weights = true;
    for (std::size_t v = 0; v < n; ++v)
        if (graph.vertices[v].self_intersection >= 0) {
            issues.add(IssueKind::NonNegativeSelfIntersection, {v},
                       "E.E = " + std::to_string(graph.vertices[v].self_intersection));
            negative_weights = false;
        }

    std::set<std::size_t> marks;
    for (std::size_t v : graph.marked) {
        if (v >= n)
            issues.add(IssueKind::UnknownVertex, {v}, "marked vertex out of range");
        else if (!marks.insert(v).second)
            issues.add(IssueKind::DuplicateMark, {v});
    }

    std::set<std::string> branch_ids;
    for (const Branch& b : graph.branches) {
        if (b.attached_to >= n)
            issues.add(IssueKind::UnknownVertex, {b.attached_to}, "branch '" + b.id + "' attached out of range");
        if (!branch_ids.insert(b.id).second)
            issues.add(IssueKind::DuplicateBranch, {}, "branch id '" + b.id + "'");
    }

    if (options.mode == FiltrationMode::Divisorial && graph.marked.empty())
        issues.add(IssueKind::EmptyMarkSet, {});
    else if (options.mode == FiltrationMode::Curve && graph.branches.empty())
        issues.add(IssueKind::EmptyBranchSet, {});
    else if (!options.mode && graph.marked.empty() && graph.branches.empty())
        issues.add(IssueKind::EmptyMarkSet, {}, "no marked components and no branches");

    // Definiteness needs only valid edge indices; a tree is not required.
    bool indices_ok = n > 0 && std::all_of(graph.edges.begin(), graph.edges.end(), [n](const auto& e) {
                          return e.first < n && e.second < n && e.first != e.second;
                      });
    bool definite = false;
    if (indices_ok) {
        const auto minors = leading_principal_minors(neg_intersection_matrix(graph));
        auto bad = std::find_if(minors.begin(), minors.end(), [](const Integer& m) { return m <= 0; });
        definite = bad == minors.end();
        if (!definite) {
            const std::size_t k = static_cast<std::size_t>(bad - minors.begin()) + 1;
            std::vector<std::size_t> block(k);
            std::iota(block.begin(), block.end(), std::size_t{0});
            issues.add(IssueKind::NotNegativeDefinite, block,
                       "leading minor of order " + std::to_string(k) + " of -I is " + bad->str());
        }
    }

    if (options.check_rationality && tree && negative_weights && definite) {
        const auto verdict = is_rational(graph);
        if (!verdict.rational) {
            std::vector<std::size_t> all(n);
            std::iota(all.begin(), all.end(), std::size_t{0});
            issues.add(IssueKind::NotRational, all, "p_a(Z) = " + verdict.arithmetic_genus.str());
        }
    }
    return report;
}

void require_valid(const ResolutionGraph& graph, const ValidationOptions& options)
{
    auto report = validate(graph, options);
    if (!report.ok())
        throw ValidationError(std::move(report));
}

std::int64_t euler_smooth_part(const ResolutionGraph& graph, std::size_t vertex, FiltrationMode mode)
{
    if (vertex >= graph.size())
        throw Error(ErrorCode::UnknownVertex, "vertex index " + std::to_string(vertex));
    auto chi = 2 - static_cast<std::int64_t>(graph.degree(vertex));
    if (mode == FiltrationMode::Curve)
        chi -= static_cast<std::int64_t>(graph.branch_count(vertex));
    return chi;
}

Integer cycle_dot_component(const ResolutionGraph& graph, const CycleVector& z, std::size_t vertex)
{
    Integer dot = Integer(z.coefficients[vertex]) * graph.vertices[vertex].self_intersection;
    for (auto [a, b] : graph.edges) {
        if (a == vertex)
            dot += z.coefficients[b];
        else if (b == vertex)
            dot += z.coefficients[a];
    }
    return dot;
}

std::vector<Rational> canonical_cycle(const ResolutionGraph& graph)
{
    // I K = b  =>  K = I^{-1} b = -m b with m = (-I)^{-1}.
    const RatMatrix m = m_matrix(neg_intersection_matrix(graph));
    const std::size_t n = graph.size();
    std::vector<Rational> k(n);
    for (std::size_t s = 0; s < n; ++s)
        for (std::size_t t = 0; t < n; ++t)
            k[s] -= m(s, t) * Rational(-graph.vertices[t].self_intersection - 2);
    return k;
}

CycleVector fundamental_cycle(const ResolutionGraph& graph)
{
    CycleVector z{std::vector<std::int64_t>(graph.size(), 1)};
    for (bool changed = true; changed;) {
        changed = false;
        for (std::size_t v = 0; v < graph.size(); ++v)
            if (cycle_dot_component(graph, z, v) > 0) {
                ++z.coefficients[v];
                changed = true;
                break;
            }
    }
    return z;
}

RationalityVerdict is_rational(const ResolutionGraph& graph)
{
    RationalityVerdict verdict;
    verdict.fundamental_cycle = fundamental_cycle(graph);
    const auto& z = verdict.fundamental_cycle;
    const auto k = canonical_cycle(graph);
    const IntMatrix inter = intersection_matrix(graph);

    Integer zz = 0;
    Rational zk = 0;
    for (std::size_t s = 0; s < graph.size(); ++s)
        for (std::size_t t = 0; t < graph.size(); ++t) {
            zz += inter(s, t) * z.coefficients[s] * z.coefficients[t];
            zk += Rational(inter(s, t) * z.coefficients[s]) * k[t];
        }
    if (!is_integral(zk))
        throw Error(ErrorCode::DecompositionCheckFailed, "Z.K is not an integer");
    // Z.Z + Z.K is even by adjunction.
    verdict.arithmetic_genus = 1 + (zz + numerator(zk)) / 2;
    verdict.rational = verdict.arithmetic_genus == 0;
    return verdict;
}

} // namespace abelcover
