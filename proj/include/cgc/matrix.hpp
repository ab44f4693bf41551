#pragma once

#include "cgc/error.hpp"

#include <concepts>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace cgc {

/// Scalars forming a commutative ring with a field-aware zero.
template <class T>
concept RingScalar = requires(const T& a, const T& b) {
    { a + b } -> std::convertible_to<T>;
    { a - b } -> std::convertible_to<T>;
    { a * b } -> std::convertible_to<T>;
    { -a } -> std::convertible_to<T>;
    { is_zero(a) } -> std::convertible_to<bool>;
    { zero_like(a) } -> std::convertible_to<T>;
    { one_like(a) } -> std::convertible_to<T>;
};

/// Ring scalars that are also fields (F_q, F_q(z)).
template <class T>
concept FieldScalar = RingScalar<T> && requires(const T& a) {
    { inverse(a) } -> std::convertible_to<T>;
};

/// Dense row-major matrix over an exact scalar type. Every matrix carries a
/// zero of its scalar type so that empty shapes still know their field.
template <RingScalar T>
class Matrix {
public:
    using Scalar = T;

    Matrix(std::size_t rows, std::size_t cols, const T& zero)
        : rows_(rows), cols_(cols), zero_(zero_like(zero)), data_(rows * cols, zero_) {}

    /// Builds from nested rows; all rows must have equal length.
    static Matrix from_rows(const std::vector<std::vector<T>>& rows, const T& zero) {
        const std::size_t c = rows.empty() ? 0 : rows.front().size();
        Matrix out(rows.size(), c, zero);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].size() != c) throw Error(ErrorKind::ShapeMismatch, "ragged rows");
            for (std::size_t j = 0; j < c; ++j) out(i, j) = rows[i][j];
        }
        return out;
    }

    static Matrix identity(std::size_t n, const T& zero) {
        Matrix out(n, n, zero);
        for (std::size_t i = 0; i < n; ++i) out(i, i) = one_like(zero);
        return out;
    }

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    const T& zero() const noexcept { return zero_; }

    T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    std::vector<T> row(std::size_t i) const {
        return std::vector<T>(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_);
    }

    void set_row(std::size_t i, const std::vector<T>& values) {
        if (values.size() != cols_) throw Error(ErrorKind::ShapeMismatch, "row length");
        for (std::size_t j = 0; j < cols_; ++j) (*this)(i, j) = values[j];
    }

    void swap_rows(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
    }

    void swap_cols(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

private:
    std::size_t rows_;
    std::size_t cols_;
    T zero_;
    std::vector<T> data_;
};

template <RingScalar T>
Matrix<T> transpose(const Matrix<T>& a) {
    Matrix<T> out(a.cols(), a.rows(), a.zero());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) out(j, i) = a(i, j);
    return out;
}

template <RingScalar T>
Matrix<T> operator*(const Matrix<T>& a, const Matrix<T>& b) {
    if (a.cols() != b.rows())
        throw Error(ErrorKind::ShapeMismatch, std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
                                                   " times " + std::to_string(b.rows()) + "x" +
                                                   std::to_string(b.cols()));
    Matrix<T> out(a.rows(), b.cols(), a.zero());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) {
            T acc = a.zero();
            for (std::size_t l = 0; l < a.cols(); ++l)
                if (!is_zero(a(i, l)) && !is_zero(b(l, j))) acc = acc + a(i, l) * b(l, j);
            out(i, j) = std::move(acc);
        }
    return out;
}

template <RingScalar T>
Matrix<T> operator+(const Matrix<T>& a, const Matrix<T>& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) throw Error(ErrorKind::ShapeMismatch, "matrix sum");
    Matrix<T> out = a;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j) + b(i, j);
    return out;
}

template <RingScalar T>
bool is_zero_matrix(const Matrix<T>& a) {
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            if (!is_zero(a(i, j))) return false;
    return true;
}

/// Rows of `top` followed by rows of `bottom`.
template <RingScalar T>
Matrix<T> vstack(const Matrix<T>& top, const Matrix<T>& bottom) {
    if (top.cols() != bottom.cols()) throw Error(ErrorKind::ShapeMismatch, "vstack column count");
    Matrix<T> out(top.rows() + bottom.rows(), top.cols(), top.zero());
    for (std::size_t i = 0; i < top.rows(); ++i)
        for (std::size_t j = 0; j < top.cols(); ++j) out(i, j) = top(i, j);
    for (std::size_t i = 0; i < bottom.rows(); ++i)
        for (std::size_t j = 0; j < top.cols(); ++j) out(top.rows() + i, j) = bottom(i, j);
    return out;
}

/// Reduced row echelon form in place; returns the pivot columns.
template <FieldScalar T>
std::vector<std::size_t> row_echelon(Matrix<T>& a) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
        std::optional<std::size_t> piv;
        for (std::size_t i = r; i < a.rows(); ++i)
            if (!is_zero(a(i, c))) {
                piv = i;
                break;
            }
        if (!piv) continue;
        a.swap_rows(r, *piv);
        const T inv = inverse(a(r, c));
        for (std::size_t j = c; j < a.cols(); ++j) a(r, j) = a(r, j) * inv;
        for (std::size_t i = 0; i < a.rows(); ++i) {
            if (i == r || is_zero(a(i, c))) continue;
            const T f = a(i, c);
            for (std::size_t j = c; j < a.cols(); ++j)
                if (!is_zero(a(r, j))) a(i, j) = a(i, j) - f * a(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

/// Rank by exact Gaussian elimination.
template <FieldScalar T>
std::size_t rank(Matrix<T> a) {
    return row_echelon(a).size();
}

/// Basis of the right kernel {x : a·x = 0}, one vector per free column.
template <FieldScalar T>
std::vector<std::vector<T>> kernel(Matrix<T> a) {
    const auto pivots = row_echelon(a);
    std::vector<bool> is_pivot(a.cols(), false);
    for (std::size_t c : pivots) is_pivot[c] = true;

    std::vector<std::vector<T>> basis;
    for (std::size_t free = 0; free < a.cols(); ++free) {
        if (is_pivot[free]) continue;
        std::vector<T> x(a.cols(), a.zero());
        x[free] = one_like(a.zero());
        for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = -a(r, free);
        basis.push_back(std::move(x));
    }
    return basis;
}

/// True iff `v` lies in the row space of `a`.
template <FieldScalar T>
bool in_row_space(const Matrix<T>& a, const std::vector<T>& v) {
    Matrix<T> row(1, a.cols(), a.zero());
    row.set_row(0, v);
    return rank(vstack(a, row)) == rank(a);
}

} // namespace cgc
