#pragma once

#include "bmh/multipoly.hpp"
#include "bmh/rational.hpp"

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

namespace bmh {

/// Dense row-major matrix with value semantics.
template <class T>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, const T& fill = T()) : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    void swap_rows(std::size_t a, std::size_t b) {
        for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_) throw std::invalid_argument("Matrix: dimension mismatch");
        Matrix out(a.rows_, b.cols_, T(0));
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                if (a(i, k).is_zero()) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += a(i, k) * b(k, j);
            }
        return out;
    }

    friend bool operator==(const Matrix&, const Matrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
};

inline Rational exact_quotient(const Rational& a, const Rational& b) { return a / b; }

inline MultiPoly exact_quotient(const MultiPoly& a, const MultiPoly& b) {
    auto q = divide_exact(a, b);
    if (!q) throw std::logic_error("Bareiss: non-exact division " + a.str() + " / " + b.str());
    return *std::move(q);
}

/// Determinant by fraction-free (Bareiss) elimination; every division is exact.
template <class T>
T bareiss_determinant(Matrix<T> m) {
    const std::size_t n = m.rows();
    if (n != m.cols()) throw std::invalid_argument("bareiss_determinant: matrix is not square");
    if (n == 0) return T(1);
    bool negate = false;
    T prev(1);
    for (std::size_t k = 0; k + 1 < n; ++k) {
        std::size_t p = k;
        while (p < n && m(p, k).is_zero()) ++p;
        if (p == n) return T(0);
        if (p != k) {
            m.swap_rows(p, k);
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j)
                m(i, j) = exact_quotient(m(i, j) * m(k, k) - m(i, k) * m(k, j), prev);
            m(i, k) = T(0);
        }
        prev = m(k, k);
    }
    T det = m(n - 1, n - 1);
    return negate ? -det : det;
}

/// Fraction-free Gauss-Jordan on [A | I]. Returns (M, d) with A^{-1} = M / d,
/// where d = +-det(A). Throws std::domain_error if A is singular.
template <class T>
std::pair<Matrix<T>, T> bareiss_inverse(const Matrix<T>& a) {
    const std::size_t n = a.rows();
    if (n != a.cols()) throw std::invalid_argument("bareiss_inverse: matrix is not square");
    Matrix<T> m(n, 2 * n, T(0));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) m(i, j) = a(i, j);
        m(i, n + i) = T(1);
    }
    T prev(1);
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        while (p < n && m(p, k).is_zero()) ++p;
        if (p == n) throw std::domain_error("bareiss_inverse: singular matrix");
        if (p != k) m.swap_rows(p, k);
        for (std::size_t i = 0; i < n; ++i) {
            if (i == k) continue;
            for (std::size_t j = 0; j < 2 * n; ++j) {
                if (j == k) continue;
                m(i, j) = exact_quotient(m(i, j) * m(k, k) - m(i, k) * m(k, j), prev);
            }
            m(i, k) = T(0);
        }
        prev = m(k, k);
    }
    Matrix<T> inv(n, n, T(0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv(i, j) = m(i, n + j);
    return {std::move(inv), prev};
}

/// Exact rank over Q.
std::size_t exact_rank(Matrix<Rational> m);

}  // namespace bmh
