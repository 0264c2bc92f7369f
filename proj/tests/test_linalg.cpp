#include <doctest.h>

#include <random>

#include "abelcover/linalg.hpp"
#include "support.hpp"

using namespace abelcover;
using namespace testing_support;

namespace {

IntMatrix int_matrix(const std::vector<std::vector<std::int64_t>>& rows)
{
    IntMatrix m(rows.size(), rows.empty() ? 0 : rows.front().size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < rows[i].size(); ++j)
            m(i, j) = rows[i][j];
    return m;
}

ResolutionGraph star3()
{
    ResolutionGraph g;
    g.add_vertex("c", -2);
    for (const char* leg : {"a", "b", "d"}) {
        g.add_vertex(leg, -2);
        g.add_edge("c", leg);
    }
    return g;
}

} // namespace

TEST_CASE("negated intersection matrix")
{
    CHECK(neg_intersection_matrix(a_n(1)) == int_matrix({{2}}));
    CHECK(neg_intersection_matrix(a_n(2)) == int_matrix({{2, -1}, {-1, 2}}));
    CHECK(intersection_matrix(a_n(2)) == int_matrix({{-2, 1}, {1, -2}}));

    const IntMatrix star = neg_intersection_matrix(star3());
    CHECK(star == int_matrix({{2, -1, -1, -1}, {-1, 2, 0, 0}, {-1, 0, 2, 0}, {-1, 0, 0, 2}}));
    CHECK(star.symmetric());
}

TEST_CASE("determinant")
{
    CHECK(determinant(int_matrix({{2}})) == 2);
    CHECK(determinant(int_matrix({{2, -1}, {-1, 2}})) == 3);
    CHECK(determinant(int_matrix({{0, 1}, {1, 0}})) == -1);
    CHECK(determinant(int_matrix({{1, 2}, {2, 4}})) == 0);

    SUBCASE("E8 against cofactor expansion")
    {
        const IntMatrix e8 = neg_intersection_matrix(ade_family("E8"));
        CHECK(cofactor_determinant(e8) == 1);
        CHECK(determinant(e8) == 1);
    }

    SUBCASE("random integer matrices against cofactor expansion")
    {
        std::mt19937 rng(17);
        std::uniform_int_distribution<int> entry(-5, 5);
        for (int trial = 0; trial < 300; ++trial) {
            const std::size_t n = 1 + trial % 6;
            IntMatrix m(n, n);
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j)
                    m(i, j) = entry(rng);
            CHECK(determinant(m) == cofactor_determinant(m));
        }
    }
}

TEST_CASE("positive definiteness")
{
    CHECK(is_positive_definite(int_matrix({{2, -1}, {-1, 2}})));
    CHECK_FALSE(is_positive_definite(int_matrix({{1, -1}, {-1, 1}})));
    CHECK_FALSE(is_positive_definite(int_matrix({{1, 0}, {1, 1}})));
    CHECK(leading_principal_minors(int_matrix({{2, -1}, {-1, 2}})) == std::vector<Integer>{2, 3});

    std::mt19937 rng(5);
    for (int trial = 0; trial < 200; ++trial) {
        ResolutionGraph g;
        const std::size_t n = 1 + trial % 5;
        std::uniform_int_distribution<std::int64_t> w(-3, -1);
        for (std::size_t i = 0; i < n; ++i) {
            g.add_vertex("E" + std::to_string(i), w(rng));
            if (i > 0)
                g.edges.emplace_back(i - 1, i);
        }
        const IntMatrix m = neg_intersection_matrix(g);
        CHECK(is_positive_definite(m) == definite_by_cofactors(m));
    }
}

TEST_CASE("m-matrix")
{
    const RatMatrix a1 = m_matrix(int_matrix({{2}}));
    CHECK(a1(0, 0) == Rational(1, 2));

    const RatMatrix a2 = m_matrix(int_matrix({{2, -1}, {-1, 2}}));
    CHECK(a2(0, 0) == Rational(2, 3));
    CHECK(a2(0, 1) == Rational(1, 3));
    CHECK(a2(1, 0) == Rational(1, 3));
    CHECK(a2(1, 1) == Rational(2, 3));

    SUBCASE("E8 is unimodular, so m is a positive integer matrix")
    {
        const IntMatrix e8 = neg_intersection_matrix(ade_family("E8"));
        const RatMatrix m = m_matrix(e8);
        for (std::size_t i = 0; i < 8; ++i)
            for (std::size_t j = 0; j < 8; ++j) {
                CHECK(denominator(m(i, j)) == 1);
                CHECK(m(i, j) > 0);
            }
        CHECK(to_rational(e8) * m == RatMatrix::identity(8));
    }

    SUBCASE("negative pivots and row swaps")
    {
        const IntMatrix p = int_matrix({{0, 1}, {1, 0}});
        CHECK(to_rational(p) * m_matrix(p) == RatMatrix::identity(2));
        const IntMatrix neg = int_matrix({{-1}});
        CHECK(m_matrix(neg)(0, 0) == -1);
    }

    CHECK_THROWS_AS(m_matrix(int_matrix({{1, 2}, {2, 4}})), Error);
}

TEST_CASE("m-matrix of random definite trees")
{
    std::mt19937 rng(2024);
    for (int trial = 0; trial < 150; ++trial) {
        const ResolutionGraph g = random_definite_tree(rng, 7);
        const IntMatrix neg = neg_intersection_matrix(g);
        const RatMatrix m = m_matrix(neg);
        const Integer d = cofactor_determinant(neg);
        CHECK(to_rational(neg) * m == RatMatrix::identity(g.size()));
        CHECK(m.symmetric());
        for (std::size_t i = 0; i < g.size(); ++i)
            for (std::size_t j = 0; j < g.size(); ++j) {
                // Trees with negative-definite form have strictly positive m
                // with denominators dividing d.
                CHECK(m(i, j) > 0);
                CHECK(d % denominator(m(i, j)) == 0);
            }
    }
}

TEST_CASE("Smith normal form")
{
    SUBCASE("identity")
    {
        const auto snf = smith_normal_form(IntMatrix::identity(3));
        CHECK(snf.d == IntMatrix::identity(3));
        CHECK(snf.invariant_factors().empty());
    }
    SUBCASE("1x1")
    {
        const auto snf = smith_normal_form(int_matrix({{2}}));
        CHECK(snf.d == int_matrix({{2}}));
        const auto neg = smith_normal_form(int_matrix({{-2}}));
        CHECK(neg.d == int_matrix({{2}}));
    }
    SUBCASE("A2")
    {
        const auto snf = smith_normal_form(int_matrix({{2, -1}, {-1, 2}}));
        CHECK(snf.diagonal() == std::vector<Integer>{1, 3});
        CHECK(snf.invariant_factors() == std::vector<Integer>{3});
    }
    SUBCASE("D4 gives Z/2 x Z/2")
    {
        const auto snf = smith_normal_form(intersection_matrix(star3()));
        CHECK(snf.invariant_factors() == std::vector<Integer>{2, 2});
    }
    SUBCASE("random matrices")
    {
        std::mt19937 rng(99);
        std::uniform_int_distribution<int> entry(-6, 6);
        for (int trial = 0; trial < 200; ++trial) {
            const std::size_t n = 1 + trial % 5;
            IntMatrix m(n, n);
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j)
                    m(i, j) = entry(rng);
            const auto snf = smith_normal_form(m);
            CHECK(snf.u * m * snf.v == snf.d);
            CHECK(abs(cofactor_determinant(snf.u)) == 1);
            CHECK(abs(cofactor_determinant(snf.v)) == 1);
            const auto diag = snf.diagonal();
            Integer product = 1;
            for (std::size_t i = 0; i < diag.size(); ++i) {
                CHECK(diag[i] >= 0);
                if (i + 1 < diag.size() && diag[i] != 0)
                    CHECK(diag[i + 1] % diag[i] == 0);
                product *= diag[i];
            }
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j)
                    if (i != j)
                        CHECK(snf.d(i, j) == 0);
            CHECK(product == abs(cofactor_determinant(m)));
        }
    }
}
