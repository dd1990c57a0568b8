#pragma once

// Exact linear algebra: fraction-free Bareiss determinants over Poly,
// rational rank/nullspace, and t-adic valuations of the invariant factors of
// a polynomial matrix read off its determinantal divisors.

#include "vermaforge/poly.hpp"

#include <functional>
#include <numeric>
#include <vector>

namespace vermaforge::exact {

template <typename T>
class Matrix {
public:
    Matrix() : r_(0), c_(0) {}
    Matrix(std::size_t r, std::size_t c, const T& fill = T()) : r_(r), c_(c), a_(r * c, fill) {}

    std::size_t rows() const { return r_; }
    std::size_t cols() const { return c_; }
    T& at(std::size_t i, std::size_t j) { return a_[i * c_ + j]; }
    const T& at(std::size_t i, std::size_t j) const { return a_[i * c_ + j]; }

private:
    std::size_t r_, c_;
    std::vector<T> a_;
};

// Fraction-free elimination. Row swaps are tracked so the returned value is
// the exact determinant including sign.
inline Poly bareiss_det(const Matrix<Poly>& in) {
    if (in.rows() != in.cols()) throw std::invalid_argument("bareiss_det: non-square matrix");
    std::size_t n = in.rows();
    if (n == 0) throw std::invalid_argument("bareiss_det: empty matrix");
    RingPtr ring = in.at(0, 0).ring();
    Matrix<Poly> m = in;
    Poly prev = Poly::constant(ring, Rational(1));
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m.at(k, k).is_zero()) {
            std::size_t p = k + 1;
            while (p < n && m.at(p, k).is_zero()) ++p;
            if (p == n) return Poly::zero(ring);
            for (std::size_t j = 0; j < n; ++j) std::swap(m.at(k, j), m.at(p, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Poly num = m.at(k, k) * m.at(i, j) - m.at(i, k) * m.at(k, j);
                m.at(i, j) = num.divexact(prev);
            }
            m.at(i, k) = Poly::zero(ring);
        }
        prev = m.at(k, k);
    }
    Poly det = m.at(n - 1, n - 1);
    if (sign < 0) det = -det;
    return det;
}

inline Matrix<Poly> submatrix(const Matrix<Poly>& m, const std::vector<std::size_t>& rows,
                              const std::vector<std::size_t>& cols) {
    Matrix<Poly> s(rows.size(), cols.size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < cols.size(); ++j) s.at(i, j) = m.at(rows[i], cols[j]);
    return s;
}

namespace detail {

inline bool next_combination(std::vector<std::size_t>& c, std::size_t n) {
    std::size_t k = c.size();
    for (std::size_t i = k; i-- > 0;) {
        if (c[i] < n - k + i) {
            ++c[i];
            for (std::size_t j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
            return true;
        }
    }
    return false;
}

}  // namespace detail

// t-adic valuations of the invariant factors of a matrix over Q[t],
// nonsingular over the fraction field. The k-th determinantal divisor is the
// gcd of all k x k minors; only its valuation at t = 0 is consumed, which
// equals the minimum valuation over the minors. Valuations of the invariant
// factors are consecutive differences and their sum equals the multiplicity
// of t = 0 in det.
inline std::vector<int> invariant_factor_t_valuations(const Matrix<Poly>& m,
                                                      const std::string& tvar = "t") {
    if (m.rows() != m.cols()) throw std::invalid_argument("invariant factors: non-square matrix");
    std::size_t n = m.rows();
    Rational zero(0);
    std::vector<int> dval(n + 1, 0);
    for (std::size_t k = 1; k <= n; ++k) {
        int best = -1;
        std::vector<std::size_t> rows(k), cols(k);
        std::iota(rows.begin(), rows.end(), 0);
        bool more_rows = true;
        bool any_nonzero = false;
        while (more_rows && best != 0) {
            std::iota(cols.begin(), cols.end(), 0);
            bool more_cols = true;
            while (more_cols && best != 0) {
                Poly d = bareiss_det(submatrix(m, rows, cols));
                if (!d.is_zero()) {
                    any_nonzero = true;
                    int v = root_multiplicity(d, zero);
                    if (best < 0 || v < best) best = v;
                }
                more_cols = detail::next_combination(cols, n);
            }
            more_rows = detail::next_combination(rows, n);
        }
        if (!any_nonzero) throw std::domain_error("invariant factors: singular matrix");
        dval[k] = best;
    }
    std::vector<int> out(n);
    for (std::size_t k = 1; k <= n; ++k) out[k - 1] = dval[k] - dval[k - 1];
    std::sort(out.begin(), out.end());
    (void)tvar;
    return out;
}

// Plain Gaussian elimination over Q; returns the rank.
inline std::size_t rational_rank(Matrix<Rational> m) {
    std::size_t rank = 0;
    std::size_t rows = m.rows(), cols = m.cols();
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t piv = rank;
        while (piv < rows && m.at(piv, col).is_zero()) ++piv;
        if (piv == rows) continue;
        for (std::size_t j = 0; j < cols; ++j) std::swap(m.at(rank, j), m.at(piv, j));
        Rational inv = Rational(1) / m.at(rank, col);
        for (std::size_t j = col; j < cols; ++j) m.at(rank, j) *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == rank || m.at(i, col).is_zero()) continue;
            Rational f = m.at(i, col);
            for (std::size_t j = col; j < cols; ++j) m.at(i, j) -= f * m.at(rank, j);
        }
        ++rank;
    }
    return rank;
}

// Basis of the right nullspace of m over Q.
inline std::vector<std::vector<Rational>> rational_nullspace(Matrix<Rational> m) {
    std::size_t rows = m.rows(), cols = m.cols();
    std::vector<long> pivot_of_col(cols, -1);
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t piv = rank;
        while (piv < rows && m.at(piv, col).is_zero()) ++piv;
        if (piv == rows) continue;
        for (std::size_t j = 0; j < cols; ++j) std::swap(m.at(rank, j), m.at(piv, j));
        Rational inv = Rational(1) / m.at(rank, col);
        for (std::size_t j = col; j < cols; ++j) m.at(rank, j) *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == rank || m.at(i, col).is_zero()) continue;
            Rational f = m.at(i, col);
            for (std::size_t j = col; j < cols; ++j) m.at(i, j) -= f * m.at(rank, j);
        }
        pivot_of_col[col] = static_cast<long>(rank);
        ++rank;
    }
    std::vector<std::vector<Rational>> basis;
    for (std::size_t col = 0; col < cols; ++col) {
        if (pivot_of_col[col] >= 0) continue;
        std::vector<Rational> v(cols, Rational(0));
        v[col] = Rational(1);
        for (std::size_t c2 = 0; c2 < cols; ++c2) {
            if (pivot_of_col[c2] < 0) continue;
            v[c2] = -m.at(static_cast<std::size_t>(pivot_of_col[c2]), col);
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace vermaforge::exact
