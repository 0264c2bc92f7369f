#pragma once

// Helpers shared by the unit tests and the acceptance runner. The oracles in
// here deliberately avoid the library's own algorithms.

#include <cstdint>
#include <numeric>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "abelcover/graph.hpp"
#include "abelcover/linalg.hpp"
#include "abelcover/oracle.hpp"
#include "abelcover/series.hpp"

namespace testing_support {

using namespace abelcover;

inline ResolutionGraph chain(const std::vector<std::int64_t>& weights)
{
    ResolutionGraph g;
    for (std::size_t i = 0; i < weights.size(); ++i) {
        g.add_vertex("E" + std::to_string(i + 1), weights[i]);
        if (i > 0)
            g.edges.emplace_back(i - 1, i);
    }
    return g;
}

inline ResolutionGraph a_n(std::size_t n) { return chain(std::vector<std::int64_t>(n, -2)); }

inline ResolutionGraph with_all_marked(ResolutionGraph g)
{
    g.marked.clear();
    for (std::size_t i = 0; i < g.size(); ++i)
        g.marked.push_back(i);
    return g;
}

inline ResolutionGraph with_marked(ResolutionGraph g, std::vector<std::size_t> marked)
{
    g.marked = std::move(marked);
    return g;
}

inline ResolutionGraph with_branches(ResolutionGraph g, const std::vector<std::size_t>& on)
{
    g.branches.clear();
    for (std::size_t k = 0; k < on.size(); ++k)
        g.branches.push_back({"C" + std::to_string(k + 1), on[k]});
    return g;
}

struct SuiteGraph {
    std::string name;
    ResolutionGraph graph;  // with the marks used for the corollary sweep
};

/// A_1..A_8 all marked; D_4, D_5, E_6, E_7, E_8 with each single component
/// marked; every Hirzebruch-Jung chain with n <= 12, all marked.
inline std::vector<SuiteGraph> regression_suite()
{
    std::vector<SuiteGraph> suite;
    for (std::size_t n = 1; n <= 8; ++n)
        suite.push_back({"A" + std::to_string(n), with_all_marked(a_n(n))});
    for (const char* name : {"D4", "D5", "E6", "E7", "E8"}) {
        const ResolutionGraph g = ade_family(name);
        for (std::size_t v = 0; v < g.size(); ++v)
            suite.push_back({std::string(name) + "/E" + std::to_string(v + 1), with_marked(g, {v})});
    }
    for (std::int64_t n = 2; n <= 12; ++n)
        for (std::int64_t q = 1; q < n; ++q)
            if (std::gcd(n, q) == 1)
                suite.push_back({"HJ(" + std::to_string(n) + "," + std::to_string(q) + ")",
                                 with_all_marked(cyclic_quotient_graph(n, q))});
    return suite;
}

/// Determinant by Laplace expansion along the first row.
inline Integer cofactor_determinant(const IntMatrix& m)
{
    const std::size_t n = m.rows();
    if (n == 0)
        return 1;
    if (n == 1)
        return m(0, 0);
    Integer total = 0;
    for (std::size_t j = 0; j < n; ++j) {
        if (m(0, j) == 0)
            continue;
        IntMatrix minor(n - 1, n - 1);
        for (std::size_t r = 1; r < n; ++r)
            for (std::size_t c = 0, cc = 0; c < n; ++c)
                if (c != j)
                    minor(r - 1, cc++) = m(r, c);
        const Integer term = m(0, j) * cofactor_determinant(minor);
        total += (j % 2 == 0) ? term : Integer(-term);
    }
    return total;
}

/// Sylvester's criterion with cofactor minors.
inline bool definite_by_cofactors(const IntMatrix& m)
{
    for (std::size_t k = 1; k <= m.rows(); ++k) {
        IntMatrix lead(k, k);
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j)
                lead(i, j) = m(i, j);
        if (cofactor_determinant(lead) <= 0)
            return false;
    }
    return true;
}

/// Plain intersection product from the graph, without the library matrices.
inline std::int64_t dot_component(const ResolutionGraph& g, const std::vector<std::int64_t>& z, std::size_t v)
{
    std::int64_t total = z[v] * g.vertices[v].self_intersection;
    for (const auto& [a, b] : g.edges) {
        if (a == v)
            total += z[b];
        else if (b == v)
            total += z[a];
    }
    return total;
}

/// Componentwise minimum of every cycle in [1, box]^n with Z.E_v <= 0 for all v.
inline std::optional<std::vector<std::int64_t>> brute_force_fundamental_cycle(const ResolutionGraph& g,
                                                                               std::int64_t box)
{
    const std::size_t n = g.size();
    std::vector<std::int64_t> z(n, 1);
    std::optional<std::vector<std::int64_t>> best;
    std::vector<std::vector<std::int64_t>> found;
    while (true) {
        bool anti_nef = true;
        for (std::size_t v = 0; v < n && anti_nef; ++v)
            anti_nef = dot_component(g, z, v) <= 0;
        if (anti_nef)
            found.push_back(z);
        std::size_t k = 0;
        while (k < n && z[k] == box)
            z[k++] = 1;
        if (k == n)
            break;
        ++z[k];
    }
    if (found.empty())
        return std::nullopt;
    std::vector<std::int64_t> low = found.front();
    for (const auto& c : found)
        for (std::size_t i = 0; i < n; ++i)
            low[i] = std::min(low[i], c[i]);
    // The minimum must itself be admissible; otherwise there is no unique
    // minimal cycle and the caller should notice.
    for (const auto& c : found)
        if (c == low)
            return low;
    return std::nullopt;
}

/// Labelled tree on n vertices from a Pruefer sequence.
inline std::vector<std::pair<std::size_t, std::size_t>> pruefer_tree(std::size_t n,
                                                                     const std::vector<std::size_t>& seq)
{
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    if (n == 2) {
        edges.emplace_back(0, 1);
        return edges;
    }
    std::vector<std::size_t> degree(n, 1);
    for (std::size_t x : seq)
        ++degree[x];
    for (std::size_t x : seq) {
        for (std::size_t leaf = 0; leaf < n; ++leaf)
            if (degree[leaf] == 1) {
                edges.emplace_back(leaf, x);
                --degree[leaf];
                --degree[x];
                break;
            }
    }
    std::vector<std::size_t> rest;
    for (std::size_t v = 0; v < n; ++v)
        if (degree[v] == 1)
            rest.push_back(v);
    edges.emplace_back(rest[0], rest[1]);
    return edges;
}

/// Every labelled tree on n vertices (n <= 4 keeps this tiny).
inline std::vector<std::vector<std::pair<std::size_t, std::size_t>>> all_trees(std::size_t n)
{
    std::vector<std::vector<std::pair<std::size_t, std::size_t>>> trees;
    if (n == 1) {
        trees.emplace_back();
        return trees;
    }
    const std::size_t len = n - 2;
    std::vector<std::size_t> seq(len, 0);
    while (true) {
        trees.push_back(pruefer_tree(n, seq));
        std::size_t k = 0;
        while (k < len && seq[k] == n - 1)
            seq[k++] = 0;
        if (k == len)
            break;
        ++seq[k];
    }
    return trees;
}

/// Random negative-definite tree with up to max_vertices components. Weights
/// lean towards -2 so that the groups are interesting.
inline ResolutionGraph random_definite_tree(std::mt19937& rng, std::size_t max_vertices, std::int64_t min_weight = -4)
{
    std::uniform_int_distribution<std::size_t> size_dist(1, max_vertices);
    std::uniform_int_distribution<std::int64_t> weight_dist(min_weight, -1);
    while (true) {
        const std::size_t n = size_dist(rng);
        ResolutionGraph g;
        for (std::size_t i = 0; i < n; ++i) {
            std::int64_t w = weight_dist(rng);
            if (w == -1)
                w = -2;
            g.add_vertex("E" + std::to_string(i + 1), w);
        }
        if (n >= 2) {
            std::vector<std::size_t> seq(n - 2);
            std::uniform_int_distribution<std::size_t> vertex_dist(0, n - 1);
            for (auto& x : seq)
                x = vertex_dist(rng);
            g.edges = pruefer_tree(n, seq);
        }
        if (definite_by_cofactors(neg_intersection_matrix(g)))
            return g;
    }
}

/// Coefficient of t^k in a univariate scale-1 series.
inline Integer coeff(const IntSeries& s, std::int64_t k)
{
    const Integer* c = s.find({k});
    return c ? *c : Integer(0);
}

} // namespace testing_support
