#pragma once

#include <algorithm>
#include <vector>

#include "adjspec/scalars.hpp"

namespace adjspec {

/**
 * Dense square matrix over a scalar field S (exact or approximate).
 *
 * Value semantics throughout; the dimension is fixed at construction.
 */
template <class S>
class Matrix {
public:
    Matrix() : n_(0) {}
    explicit Matrix(int n) : n_(n), e_(static_cast<size_t>(n) * n, ScalarOps<S>::zero()) {}

    static Matrix identity(int n) {
        Matrix m(n);
        for (int i = 0; i < n; ++i) m(i, i) = ScalarOps<S>::one();
        return m;
    }

    int n() const { return n_; }

    S& operator()(int i, int j) { return e_[static_cast<size_t>(i) * n_ + j]; }
    const S& operator()(int i, int j) const { return e_[static_cast<size_t>(i) * n_ + j]; }

    friend Matrix operator+(const Matrix& a, const Matrix& b) {
        a.check_same(b);
        Matrix r(a.n_);
        for (size_t k = 0; k < a.e_.size(); ++k) r.e_[k] = a.e_[k] + b.e_[k];
        return r;
    }
    friend Matrix operator-(const Matrix& a, const Matrix& b) {
        a.check_same(b);
        Matrix r(a.n_);
        for (size_t k = 0; k < a.e_.size(); ++k) r.e_[k] = a.e_[k] - b.e_[k];
        return r;
    }
    friend Matrix operator-(const Matrix& a) {
        Matrix r(a.n_);
        for (size_t k = 0; k < a.e_.size(); ++k) r.e_[k] = -a.e_[k];
        return r;
    }
    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        a.check_same(b);
        Matrix r(a.n_);
        for (int i = 0; i < a.n_; ++i)
            for (int k = 0; k < a.n_; ++k) {
                const S& aik = a(i, k);
                if constexpr (ScalarOps<S>::exact) {
                    if (aik.is_zero()) continue;
                }
                for (int j = 0; j < a.n_; ++j) r(i, j) += aik * b(k, j);
            }
        return r;
    }
    friend Matrix operator*(const S& c, const Matrix& a) {
        Matrix r(a.n_);
        for (size_t k = 0; k < a.e_.size(); ++k) r.e_[k] = c * a.e_[k];
        return r;
    }
    Matrix& operator+=(const Matrix& o) { return *this = *this + o; }
    Matrix& operator-=(const Matrix& o) { return *this = *this - o; }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.n_ == b.n_ && a.e_ == b.e_;
    }

    S trace() const {
        S t = ScalarOps<S>::zero();
        for (int i = 0; i < n_; ++i) t += (*this)(i, i);
        return t;
    }

    Matrix conj_transpose() const {
        Matrix r(n_);
        for (int i = 0; i < n_; ++i)
            for (int j = 0; j < n_; ++j) r(j, i) = ScalarOps<S>::conj((*this)(i, j));
        return r;
    }

    Matrix transpose() const {
        Matrix r(n_);
        for (int i = 0; i < n_; ++i)
            for (int j = 0; j < n_; ++j) r(j, i) = (*this)(i, j);
        return r;
    }

    bool is_zero() const {
        for (const S& v : e_)
            if (!(v == ScalarOps<S>::zero())) return false;
        return true;
    }

    /// Largest entry magnitude (max norm), as a double.
    double max_norm() const {
        double m = 0.0;
        for (const S& v : e_) m = std::max(m, ScalarOps<S>::magnitude(v));
        return m;
    }

    /// Infinity norm: max row sum of entry magnitudes.
    double inf_norm() const {
        double m = 0.0;
        for (int i = 0; i < n_; ++i) {
            double row = 0.0;
            for (int j = 0; j < n_; ++j) row += ScalarOps<S>::magnitude((*this)(i, j));
            m = std::max(m, row);
        }
        return m;
    }

private:
    void check_same(const Matrix& o) const {
        if (n_ != o.n_) throw DimensionMismatch("matrix dimensions differ");
    }

    int n_;
    std::vector<S> e_;
};

template <class S>
Matrix<S> mat_pow(const Matrix<S>& m, int k) {
    Matrix<S> r = Matrix<S>::identity(m.n());
    for (int i = 0; i < k; ++i) r = r * m;
    return r;
}

/// Max entry magnitude of (a - b).
template <class S>
double max_abs_diff(const Matrix<S>& a, const Matrix<S>& b) {
    return (a - b).max_norm();
}

namespace detail {

// Row echelon reduction in place. Returns the pivot columns. Exact path picks the first
// nonzero pivot in each column (deterministic); approximate path picks the largest magnitude
// and treats pivots below abs_eps*(1 + max-row-norm of the input) as zero.
template <class S>
std::vector<int> row_echelon(std::vector<std::vector<S>>& rows, double pivot_floor) {
    std::vector<int> pivot_cols;
    if (rows.empty()) return pivot_cols;
    const int nrows = static_cast<int>(rows.size());
    const int ncols = static_cast<int>(rows[0].size());
    int r = 0;
    for (int c = 0; c < ncols && r < nrows; ++c) {
        int pivot = -1;
        if constexpr (ScalarOps<S>::exact) {
            for (int i = r; i < nrows; ++i)
                if (!rows[i][c].is_zero()) {
                    pivot = i;
                    break;
                }
        } else {
            double best = pivot_floor;
            for (int i = r; i < nrows; ++i) {
                double m = ScalarOps<S>::magnitude(rows[i][c]);
                if (m > best) {
                    best = m;
                    pivot = i;
                }
            }
        }
        if (pivot < 0) continue;
        std::swap(rows[r], rows[pivot]);
        const S inv_p = ScalarOps<S>::one() / rows[r][c];
        for (int i = 0; i < nrows; ++i) {
            if (i == r) continue;
            const S& v = rows[i][c];
            bool skip;
            if constexpr (ScalarOps<S>::exact)
                skip = v.is_zero();
            else
                skip = (ScalarOps<S>::magnitude(v) == 0.0);
            if (skip) continue;
            S factor = v * inv_p;
            for (int j = c; j < ncols; ++j) rows[i][j] = rows[i][j] - factor * rows[r][j];
            rows[i][c] = ScalarOps<S>::zero();
        }
        pivot_cols.push_back(c);
        ++r;
    }
    return pivot_cols;
}

template <class S>
double pivot_floor_for(const Matrix<S>& m, const Tolerance& tol) {
    if constexpr (ScalarOps<S>::exact)
        return 0.0;
    else
        return tol.abs_eps * (1.0 + m.inf_norm());
}

}  // namespace detail

/// Rank by Gaussian elimination: exact over the field, pivot-thresholded for approximate scalars.
template <class S>
int mat_rank(const Matrix<S>& m, const Tolerance& tol = {}) {
    const int n = m.n();
    std::vector<std::vector<S>> rows(n, std::vector<S>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) rows[i][j] = m(i, j);
    return static_cast<int>(
        detail::row_echelon(rows, detail::pivot_floor_for(m, tol)).size());
}

/// Solves M * X = rhs. Throws SingularMatrix when a pivot cannot be found.
template <class S>
Matrix<S> mat_solve(const Matrix<S>& m, const Matrix<S>& rhs, const Tolerance& tol = {}) {
    const int n = m.n();
    if (rhs.n() != n) throw DimensionMismatch("solve rhs dimension");
    std::vector<std::vector<S>> rows(n, std::vector<S>(2 * n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            rows[i][j] = m(i, j);
            rows[i][n + j] = rhs(i, j);
        }
    const double floor = detail::pivot_floor_for(m, tol);
    std::vector<int> pivots = detail::row_echelon(rows, floor);
    if (static_cast<int>(pivots.size()) < n ||
        std::any_of(pivots.begin(), pivots.end(), [n](int c) { return c >= n; }))
        throw SingularMatrix();
    Matrix<S> x(n);
    for (int i = 0; i < n; ++i) {
        const S inv_p = ScalarOps<S>::one() / rows[i][i];
        for (int j = 0; j < n; ++j) x(i, j) = rows[i][n + j] * inv_p;
    }
    return x;
}

/// Basis of the kernel of m (as column vectors), via reduced row echelon form.
template <class S>
std::vector<std::vector<S>> kernel_basis(const Matrix<S>& m, const Tolerance& tol = {}) {
    const int n = m.n();
    std::vector<std::vector<S>> rows(n, std::vector<S>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) rows[i][j] = m(i, j);
    std::vector<int> pivots = detail::row_echelon(rows, detail::pivot_floor_for(m, tol));
    std::vector<bool> is_pivot(n, false);
    for (int c : pivots) is_pivot[c] = true;
    std::vector<std::vector<S>> basis;
    for (int free = 0; free < n; ++free) {
        if (is_pivot[free]) continue;
        std::vector<S> v(n, ScalarOps<S>::zero());
        v[free] = ScalarOps<S>::one();
        for (size_t r = 0; r < pivots.size(); ++r) {
            int pc = pivots[r];
            v[pc] = -(rows[r][free] / rows[r][pc]);
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

inline Matrix<ApproxScalar> to_approx(const Matrix<ExactScalar>& m) {
    Matrix<ApproxScalar> r(m.n());
    for (int i = 0; i < m.n(); ++i)
        for (int j = 0; j < m.n(); ++j) r(i, j) = to_approx(m(i, j));
    return r;
}

inline Matrix<ExactScalar> to_exact(const Matrix<ApproxScalar>& m) {
    Matrix<ExactScalar> r(m.n());
    for (int i = 0; i < m.n(); ++i)
        for (int j = 0; j < m.n(); ++j) r(i, j) = to_exact(m(i, j));
    return r;
}

/// m * v for a column vector v.
template <class S>
std::vector<S> mat_vec(const Matrix<S>& m, const std::vector<S>& v) {
    const int n = m.n();
    std::vector<S> r(n, ScalarOps<S>::zero());
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) r[i] += m(i, j) * v[j];
    return r;
}

}  // namespace adjspec
