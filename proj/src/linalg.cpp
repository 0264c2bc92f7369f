#include "abelcover/linalg.hpp"

#include <optional>
#include <utility>

#include "abelcover/graph.hpp"

namespace abelcover {

namespace {

using boost::multiprecision::abs;

// Locate the nonzero entry of smallest magnitude in the lower-right block
// starting at (t, t).
std::optional<std::pair<std::size_t, std::size_t>> smallest_pivot(const IntMatrix& a, std::size_t t)
{
    std::optional<std::pair<std::size_t, std::size_t>> best;
    Integer best_abs;
    for (std::size_t i = t; i < a.rows(); ++i)
        for (std::size_t j = t; j < a.cols(); ++j) {
            if (a(i, j) == 0)
                continue;
            Integer v = abs(a(i, j));
            if (!best || v < best_abs) {
                best = {i, j};
                best_abs = v;
            }
        }
    return best;
}

void add_row_multiple(IntMatrix& a, std::size_t target, std::size_t source, const Integer& factor)
{
    for (std::size_t j = 0; j < a.cols(); ++j)
        a(target, j) += factor * a(source, j);
}

void add_col_multiple(IntMatrix& a, std::size_t target, std::size_t source, const Integer& factor)
{
    for (std::size_t i = 0; i < a.rows(); ++i)
        a(i, target) += factor * a(i, source);
}

} // namespace

RatMatrix to_rational(const IntMatrix& m)
{
    RatMatrix r(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            r(i, j) = Rational(m(i, j));
    return r;
}

IntMatrix intersection_matrix(const ResolutionGraph& graph)
{
    const std::size_t n = graph.size();
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m(i, i) = graph.vertices[i].self_intersection;
    for (auto [a, b] : graph.edges) {
        m(a, b) = 1;
        m(b, a) = 1;
    }
    return m;
}

IntMatrix neg_intersection_matrix(const ResolutionGraph& graph)
{
    IntMatrix m = intersection_matrix(graph);
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            m(i, j) = -m(i, j);
    return m;
}

Integer determinant(const IntMatrix& m)
{
    if (!m.square())
        throw Error(ErrorCode::InvalidParameters, "determinant of a non-square matrix");
    const std::size_t n = m.rows();
    if (n == 0)
        return 1;
    IntMatrix a = m;
    Integer prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a(k, k) == 0) {
            std::size_t p = k + 1;
            while (p < n && a(p, k) == 0)
                ++p;
            if (p == n)
                return 0;
            a.swap_rows(k, p);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j)
                a(i, j) = (a(k, k) * a(i, j) - a(i, k) * a(k, j)) / prev;
            a(i, k) = 0;
        }
        prev = a(k, k);
    }
    return sign * a(n - 1, n - 1);
}

std::vector<Integer> leading_principal_minors(const IntMatrix& m)
{
    std::vector<Integer> minors;
    for (std::size_t k = 1; k <= m.rows(); ++k) {
        IntMatrix block(k, k);
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j)
                block(i, j) = m(i, j);
        minors.push_back(determinant(block));
    }
    return minors;
}

bool is_positive_definite(const IntMatrix& m)
{
    if (!m.symmetric())
        return false;
    for (const Integer& minor : leading_principal_minors(m))
        if (minor <= 0)
            return false;
    return true;
}

RatMatrix m_matrix(const IntMatrix& m)
{
    if (!m.square())
        throw Error(ErrorCode::SingularMatrix, "inverse of a non-square matrix");
    const std::size_t n = m.rows();

    // Fraction-free Gauss-Jordan on [M | Id]. After step k every processed
    // diagonal entry equals the current pivot, so at the end the left block
    // is det * Id and the right block is det * M^{-1}.
    IntMatrix a(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j)
            a(i, j) = m(i, j);
        a(i, n + i) = 1;
    }

    Integer prev = 1;
    for (std::size_t k = 0; k < n; ++k) {
        if (a(k, k) == 0) {
            std::size_t p = k + 1;
            while (p < n && a(p, k) == 0)
                ++p;
            if (p == n)
                throw Error(ErrorCode::SingularMatrix, "matrix is singular");
            a.swap_rows(k, p);
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == k)
                continue;
            for (std::size_t j = 0; j < 2 * n; ++j) {
                if (j == k)
                    continue;
                a(i, j) = (a(k, k) * a(i, j) - a(i, k) * a(k, j)) / prev;
            }
            a(i, k) = 0;
        }
        prev = a(k, k);
    }

    RatMatrix inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            inv(i, j) = make_rational(a(i, n + j), a(i, i));
    return inv;
}

std::vector<Integer> SmithDecomposition::diagonal() const
{
    std::vector<Integer> out;
    for (std::size_t i = 0; i < d.rows() && i < d.cols(); ++i)
        out.push_back(d(i, i));
    return out;
}

std::vector<Integer> SmithDecomposition::invariant_factors() const
{
    std::vector<Integer> out;
    for (const Integer& x : diagonal())
        if (x != 1)
            out.push_back(x);
    return out;
}

SmithDecomposition smith_normal_form(const IntMatrix& m)
{
    const std::size_t rows = m.rows();
    const std::size_t cols = m.cols();
    IntMatrix a = m;
    IntMatrix u = IntMatrix::identity(rows);
    IntMatrix v = IntMatrix::identity(cols);

    for (std::size_t t = 0; t < rows && t < cols; ++t) {
        for (;;) {
            auto pivot = smallest_pivot(a, t);
            if (!pivot)
                break;
            auto [pi, pj] = *pivot;
            if (pi != t) {
                a.swap_rows(t, pi);
                u.swap_rows(t, pi);
            }
            if (pj != t) {
                a.swap_cols(t, pj);
                v.swap_cols(t, pj);
            }

            bool clean = true;
            for (std::size_t i = t + 1; i < rows; ++i) {
                if (a(i, t) == 0)
                    continue;
                Integer q = a(i, t) / a(t, t);
                add_row_multiple(a, i, t, -q);
                add_row_multiple(u, i, t, -q);
                if (a(i, t) != 0)
                    clean = false;
            }
            for (std::size_t j = t + 1; j < cols; ++j) {
                if (a(t, j) == 0)
                    continue;
                Integer q = a(t, j) / a(t, t);
                add_col_multiple(a, j, t, -q);
                add_col_multiple(v, j, t, -q);
                if (a(t, j) != 0)
                    clean = false;
            }
            if (!clean)
                continue;

            // Pivot must divide the rest of the block; otherwise fold an
            // offending row into row t and reduce again.
            std::optional<std::size_t> offending;
            for (std::size_t i = t + 1; i < rows && !offending; ++i)
                for (std::size_t j = t + 1; j < cols; ++j)
                    if (a(i, j) % a(t, t) != 0) {
                        offending = i;
                        break;
                    }
            if (!offending)
                break;
            add_row_multiple(a, t, *offending, 1);
            add_row_multiple(u, t, *offending, 1);
        }
        if (a(t, t) < 0) {
            add_row_multiple(a, t, t, -2);
            add_row_multiple(u, t, t, -2);
        }
    }

    SmithDecomposition snf{m, std::move(u), std::move(v), std::move(a)};
    if (snf.u * m * snf.v != snf.d)
        throw Error(ErrorCode::DecompositionCheckFailed, "U*M*V != D");
    const auto diag = snf.diagonal();
    for (std::size_t i = 0; i + 1 < diag.size(); ++i) {
        const bool divides = diag[i] == 0 ? diag[i + 1] == 0 : diag[i + 1] % diag[i] == 0;
        if (!divides)
            throw Error(ErrorCode::DecompositionCheckFailed, "diagonal not in divisibility order");
    }
    return snf;
}

} // namespace abelcover
