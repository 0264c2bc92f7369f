#pragma once

#include <cstddef>
#include <vector>

#include "abelcover/arith.hpp"

namespace abelcover {

class ResolutionGraph;

/// Dense row-major matrix over an exact ring.
template <typename T>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, T(0)) {}

    static Matrix identity(std::size_t n)
    {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i)
            m(i, i) = T(1);
        return m;
    }

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool square() const noexcept { return rows_ == cols_; }

    T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    void swap_rows(std::size_t a, std::size_t b)
    {
        for (std::size_t j = 0; j < cols_; ++j)
            std::swap((*this)(a, j), (*this)(b, j));
    }

    void swap_cols(std::size_t a, std::size_t b)
    {
        for (std::size_t i = 0; i < rows_; ++i)
            std::swap((*this)(i, a), (*this)(i, b));
    }

    Matrix transposed() const
    {
        Matrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                t(j, i) = (*this)(i, j);
        return t;
    }

    bool symmetric() const
    {
        if (!square())
            return false;
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = i + 1; j < cols_; ++j)
                if ((*this)(i, j) != (*this)(j, i))
                    return false;
        return true;
    }

    friend bool operator==(const Matrix&, const Matrix&) = default;

    friend Matrix operator*(const Matrix& a, const Matrix& b)
    {
        Matrix c(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                if (a(i, k) == 0)
                    continue;
                for (std::size_t j = 0; j < b.cols_; ++j)
                    c(i, j) += a(i, k) * b(k, j);
            }
        return c;
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
};

using IntMatrix = Matrix<Integer>;
using RatMatrix = Matrix<Rational>;

RatMatrix to_rational(const IntMatrix& m);

/// The intersection matrix (E_s . E_t) in vertex input order.
IntMatrix intersection_matrix(const ResolutionGraph& graph);

/// -(E_s . E_t): self-intersections negated on the diagonal, -1 on edges.
IntMatrix neg_intersection_matrix(const ResolutionGraph& graph);

/// Exact determinant by fraction-free (Bareiss) elimination.
Integer determinant(const IntMatrix& m);

/// Determinants of the k x k upper-left blocks, k = 1..n.
std::vector<Integer> leading_principal_minors(const IntMatrix& m);

bool is_positive_definite(const IntMatrix& m);

/// Exact inverse of an integer matrix, computed by fraction-free Gauss-Jordan
/// elimination. For M = -I this is the matrix (m_st) of the singularity.
/// Throws SingularMatrix.
RatMatrix m_matrix(const IntMatrix& m);

/// U * M * V = D with U, V unimodular and D diagonal, nonnegative, with each
/// diagonal entry dividing the next. `matrix` keeps the decomposed input.
struct SmithDecomposition {
    IntMatrix matrix;
    IntMatrix u;
    IntMatrix v;
    IntMatrix d;

    std::vector<Integer> diagonal() const;
    /// Diagonal entries different from 1 (the cyclic factors of the cokernel).
    std::vector<Integer> invariant_factors() const;
};

/// Smith normal form over the integers. Pivots on the smallest nonzero
/// magnitude; the result is checked by exact multiplication before returning.
SmithDecomposition smith_normal_form(const IntMatrix& m);

} // namespace abelcover
