#pragma once

/**
 * @file matrix.hpp
 * @brief Dense matrices over an exact ring (rationals, algebraic numbers).
 *
 * Zero and one are passed explicitly or taken from existing entries, so the
 * same code serves rings whose elements carry a runtime context.
 */

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "artin/arith/poly.hpp"

namespace artin::arith {

template <class T>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, const T& fill) : r_(rows), c_(cols), a_(rows * cols, fill) {}
    Matrix(std::size_t rows, std::size_t cols, std::vector<T> entries)
        : r_(rows), c_(cols), a_(std::move(entries)) {
        if (a_.size() != r_ * c_) throw std::invalid_argument("matrix entry count mismatch");
    }

    static Matrix identity(std::size_t n, const T& zero, const T& one) {
        Matrix m(n, n, zero);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = one;
        return m;
    }
    static Matrix diagonal(const std::vector<T>& d, const T& zero) {
        Matrix m(d.size(), d.size(), zero);
        for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
        return m;
    }

    std::size_t rows() const { return r_; }
    std::size_t cols() const { return c_; }
    T& operator()(std::size_t i, std::size_t j) { return a_[i * c_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return a_[i * c_ + j]; }
    const std::vector<T>& entries() const { return a_; }

    friend bool operator==(const Matrix& x, const Matrix& y) { return x.r_ == y.r_ && x.c_ == y.c_ && x.a_ == y.a_; }

    friend Matrix operator+(const Matrix& x, const Matrix& y) {
        Matrix m = x;
        for (std::size_t i = 0; i < m.a_.size(); ++i) m.a_[i] = m.a_[i] + y.a_[i];
        return m;
    }
    friend Matrix operator-(const Matrix& x, const Matrix& y) {
        Matrix m = x;
        for (std::size_t i = 0; i < m.a_.size(); ++i) m.a_[i] = m.a_[i] - y.a_[i];
        return m;
    }
    friend Matrix operator*(const Matrix& x, const Matrix& y) {
        if (x.c_ != y.r_) throw std::invalid_argument("matrix shape mismatch");
        const T zero = zero_like(x.a_.at(0));
        Matrix m(x.r_, y.c_, zero);
        for (std::size_t i = 0; i < x.r_; ++i)
            for (std::size_t k = 0; k < x.c_; ++k) {
                const T& v = x(i, k);
                if (is_zero(v)) continue;
                for (std::size_t j = 0; j < y.c_; ++j) m(i, j) = m(i, j) + v * y(k, j);
            }
        return m;
    }
    friend Matrix operator*(const Matrix& x, const T& s) {
        Matrix m = x;
        for (auto& v : m.a_) v = v * s;
        return m;
    }

    Matrix transpose() const {
        Matrix m(c_, r_, a_.at(0));
        for (std::size_t i = 0; i < r_; ++i)
            for (std::size_t j = 0; j < c_; ++j) m(j, i) = (*this)(i, j);
        return m;
    }

    /// Gauss-Jordan inverse over a field; throws on singular input.
    Matrix inverse(const T& one) const {
        if (r_ != c_) throw std::invalid_argument("inverse of non-square matrix");
        const std::size_t n = r_;
        const T zero = zero_like(one);
        Matrix a = *this, inv = identity(n, zero, one);
        for (std::size_t col = 0; col < n; ++col) {
            std::size_t piv = col;
            while (piv < n && is_zero(a(piv, col))) ++piv;
            if (piv == n) throw std::domain_error("singular matrix");
            if (piv != col)
                for (std::size_t j = 0; j < n; ++j) {
                    std::swap(a(piv, j), a(col, j));
                    std::swap(inv(piv, j), inv(col, j));
                }
            const T s = one / a(col, col);
            for (std::size_t j = 0; j < n; ++j) {
                a(col, j) = a(col, j) * s;
                inv(col, j) = inv(col, j) * s;
            }
            for (std::size_t r = 0; r < n; ++r) {
                if (r == col || is_zero(a(r, col))) continue;
                const T f = a(r, col);
                for (std::size_t j = 0; j < n; ++j) {
                    a(r, j) = a(r, j) - f * a(col, j);
                    inv(r, j) = inv(r, j) - f * inv(col, j);
                }
            }
        }
        return inv;
    }

private:
    std::size_t r_ = 0, c_ = 0;
    std::vector<T> a_;
};

/// Coefficients of det(xI - A), low-to-high, by Berkowitz's division-free recursion.
template <class T>
std::vector<T> charpoly(const Matrix<T>& A, const T& one) {
    const std::size_t n = A.rows();
    const T zero = zero_like(one);
    // v holds coefficients from x^k down to x^0
    std::vector<T> v{one, zero - A(0, 0)};
    for (std::size_t r = 1; r < n; ++r) {
        // column of the Toeplitz matrix: 1, -a, -R S, -R A S, ...
        std::vector<T> t(r + 2, zero);
        t[0] = one;
        t[1] = zero - A(r, r);
        std::vector<T> s(r);
        for (std::size_t i = 0; i < r; ++i) s[i] = A(i, r);
        for (std::size_t k = 0; k < r; ++k) {
            T dot = zero;
            for (std::size_t j = 0; j < r; ++j) dot = dot + A(r, j) * s[j];
            t[k + 2] = zero - dot;
            std::vector<T> ns(r, zero);
            for (std::size_t i = 0; i < r; ++i)
                for (std::size_t j = 0; j < r; ++j) ns[i] = ns[i] + A(i, j) * s[j];
            s = std::move(ns);
        }
        std::vector<T> nv(r + 2, zero);
        for (std::size_t i = 0; i < r + 2; ++i)
            for (std::size_t j = 0; j <= i && j < v.size(); ++j) nv[i] = nv[i] + t[i - j] * v[j];
        v = std::move(nv);
    }
    return std::vector<T>(v.rbegin(), v.rend());
}

/// Coefficients of det(1 - A T), low-to-high (reverse of the characteristic polynomial).
template <class T>
std::vector<T> reversed_charpoly(const Matrix<T>& A, const T& one) {
    auto c = charpoly(A, one);
    return std::vector<T>(c.rbegin(), c.rend());
}

template <class T>
T determinant(const Matrix<T>& A, const T& one) {
    auto c = charpoly(A, one);
    return (A.rows() % 2 == 0) ? c[0] : zero_like(one) - c[0];
}

/// Second exterior power on the basis e_i ∧ e_j (i < j) in lexicographic order.
template <class T>
Matrix<T> wedge2(const Matrix<T>& A) {
    const std::size_t n = A.rows();
    std::vector<std::pair<std::size_t, std::size_t>> idx;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) idx.emplace_back(i, j);
    Matrix<T> W(idx.size(), idx.size(), zero_like(A(0, 0)));
    for (std::size_t a = 0; a < idx.size(); ++a)
        for (std::size_t b = 0; b < idx.size(); ++b) {
            const auto [i, j] = idx[a];
            const auto [k, l] = idx[b];
            W(a, b) = A(i, k) * A(j, l) - A(i, l) * A(j, k);
        }
    return W;
}

/// Kronecker product, basis e_i ⊗ f_j ordered with i major.
template <class T>
Matrix<T> kron(const Matrix<T>& A, const Matrix<T>& B) {
    Matrix<T> K(A.rows() * B.rows(), A.cols() * B.cols(), zero_like(A(0, 0)));
    for (std::size_t i = 0; i < A.rows(); ++i)
        for (std::size_t j = 0; j < A.cols(); ++j)
            for (std::size_t k = 0; k < B.rows(); ++k)
                for (std::size_t l = 0; l < B.cols(); ++l) K(i * B.rows() + k, j * B.cols() + l) = A(i, j) * B(k, l);
    return K;
}

/// Block-diagonal sum.
template <class T>
Matrix<T> direct_sum(const Matrix<T>& A, const Matrix<T>& B) {
    const T zero = zero_like(A(0, 0));
    Matrix<T> M(A.rows() + B.rows(), A.cols() + B.cols(), zero);
    for (std::size_t i = 0; i < A.rows(); ++i)
        for (std::size_t j = 0; j < A.cols(); ++j) M(i, j) = A(i, j);
    for (std::size_t i = 0; i < B.rows(); ++i)
        for (std::size_t j = 0; j < B.cols(); ++j) M(A.rows() + i, A.cols() + j) = B(i, j);
    return M;
}

}  // namespace artin::arith
