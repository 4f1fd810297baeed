#pragma once

#include <string>
#include <vector>

#include "adjspec/matrix.hpp"

namespace adjspec {

/**
 * Univariate polynomial with coefficients in ascending degree order.
 *
 * Normalized: no trailing zero coefficients; the zero polynomial has an empty
 * coefficient list and degree -1.
 */
template <class S>
class Poly {
public:
    Poly() = default;
    explicit Poly(std::vector<S> coeffs) : c_(std::move(coeffs)) { strip(); }

    static Poly one() { return Poly({ScalarOps<S>::one()}); }
    static Poly constant(const S& c) { return Poly({c}); }
    /// z - r
    static Poly linear_root(const S& r) { return Poly({-r, ScalarOps<S>::one()}); }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const std::vector<S>& coeffs() const { return c_; }

    /// Coefficient of z^k (zero beyond the degree).
    S coeff(int k) const {
        if (k < 0 || k >= static_cast<int>(c_.size())) return ScalarOps<S>::zero();
        return c_[k];
    }

    S eval(const S& z) const {
        S acc = ScalarOps<S>::zero();
        for (int k = degree(); k >= 0; --k) acc = acc * z + c_[k];
        return acc;
    }

    Poly derivative() const {
        if (c_.size() <= 1) return Poly();
        std::vector<S> d(c_.size() - 1);
        for (size_t k = 1; k < c_.size(); ++k) d[k - 1] = ScalarOps<S>::from_int(k) * c_[k];
        return Poly(std::move(d));
    }

    friend Poly operator+(const Poly& a, const Poly& b) {
        std::vector<S> r(std::max(a.c_.size(), b.c_.size()), ScalarOps<S>::zero());
        for (size_t k = 0; k < a.c_.size(); ++k) r[k] += a.c_[k];
        for (size_t k = 0; k < b.c_.size(); ++k) r[k] += b.c_[k];
        return Poly(std::move(r));
    }
    friend Poly operator-(const Poly& a, const Poly& b) {
        std::vector<S> r(std::max(a.c_.size(), b.c_.size()), ScalarOps<S>::zero());
        for (size_t k = 0; k < a.c_.size(); ++k) r[k] += a.c_[k];
        for (size_t k = 0; k < b.c_.size(); ++k) r[k] -= b.c_[k];
        return Poly(std::move(r));
    }
    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return Poly();
        std::vector<S> r(a.c_.size() + b.c_.size() - 1, ScalarOps<S>::zero());
        for (size_t i = 0; i < a.c_.size(); ++i)
            for (size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
        return Poly(std::move(r));
    }
    friend Poly operator*(const S& c, const Poly& a) {
        std::vector<S> r = a.c_;
        for (S& v : r) v = c * v;
        return Poly(std::move(r));
    }
    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

private:
    void strip() {
        while (!c_.empty() && c_.back() == ScalarOps<S>::zero()) c_.pop_back();
    }

    std::vector<S> c_;
};

/**
 * Matrix-valued polynomial: a list of n-by-n coefficient matrices, ascending degree.
 */
template <class S>
class MatPoly {
public:
    MatPoly() : n_(0) {}
    MatPoly(int n, std::vector<Matrix<S>> coeffs) : n_(n), c_(std::move(coeffs)) {
        for (const auto& m : c_)
            if (m.n() != n_) throw DimensionMismatch("matrix polynomial coefficient size");
        strip();
    }

    int n() const { return n_; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const std::vector<Matrix<S>>& coeffs() const { return c_; }

    Matrix<S> coeff(int k) const {
        if (k < 0 || k >= static_cast<int>(c_.size())) return Matrix<S>(n_);
        return c_[k];
    }

    /// Horner evaluation at a scalar argument.
    Matrix<S> eval(const S& z) const {
        Matrix<S> acc(n_);
        for (int k = degree(); k >= 0; --k) {
            acc = z * acc;
            acc += c_[k];
        }
        return acc;
    }

    MatPoly derivative() const {
        if (c_.size() <= 1) return MatPoly(n_, {});
        std::vector<Matrix<S>> d;
        d.reserve(c_.size() - 1);
        for (size_t k = 1; k < c_.size(); ++k) d.push_back(ScalarOps<S>::from_int(k) * c_[k]);
        return MatPoly(n_, std::move(d));
    }

    friend MatPoly operator-(const MatPoly& a, const MatPoly& b) {
        if (a.n_ != b.n_) throw DimensionMismatch("matrix polynomial dimensions differ");
        size_t len = std::max(a.c_.size(), b.c_.size());
        std::vector<Matrix<S>> r(len, Matrix<S>(a.n_));
        for (size_t k = 0; k < a.c_.size(); ++k) r[k] += a.c_[k];
        for (size_t k = 0; k < b.c_.size(); ++k) r[k] -= b.c_[k];
        return MatPoly(a.n_, std::move(r));
    }

    /// Product of matrix polynomials (coefficients do not commute; order preserved).
    friend MatPoly operator*(const MatPoly& a, const MatPoly& b) {
        if (a.n_ != b.n_) throw DimensionMismatch("matrix polynomial dimensions differ");
        if (a.c_.empty() || b.c_.empty()) return MatPoly(a.n_, {});
        std::vector<Matrix<S>> r(a.c_.size() + b.c_.size() - 1, Matrix<S>(a.n_));
        for (size_t i = 0; i < a.c_.size(); ++i)
            for (size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
        return MatPoly(a.n_, std::move(r));
    }

    /// Trace applied coefficient-wise, as a scalar polynomial.
    Poly<S> trace_poly() const {
        std::vector<S> t;
        t.reserve(c_.size());
        for (const auto& m : c_) t.push_back(m.trace());
        return Poly<S>(std::move(t));
    }

    double max_norm() const {
        double m = 0.0;
        for (const auto& mat : c_) m = std::max(m, mat.max_norm());
        return m;
    }

private:
    void strip() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }

    int n_;
    std::vector<Matrix<S>> c_;
};

/// p(z)*I as a matrix polynomial.
template <class S>
MatPoly<S> scalar_poly_times_identity(const Poly<S>& p, int n) {
    std::vector<Matrix<S>> c;
    c.reserve(p.coeffs().size());
    for (const S& v : p.coeffs()) c.push_back(v * Matrix<S>::identity(n));
    return MatPoly<S>(n, std::move(c));
}

/// Horner evaluation of a scalar polynomial at a matrix argument.
template <class S>
Matrix<S> poly_eval_matrix(const Poly<S>& p, const Matrix<S>& a) {
    Matrix<S> acc(a.n());
    for (int k = p.degree(); k >= 0; --k) {
        acc = acc * a;
        acc += p.coeff(k) * Matrix<S>::identity(a.n());
    }
    return acc;
}

// ---------------------------------------------------------------------------
// Taylor shift and local power-series inversion.
// ---------------------------------------------------------------------------

/**
 * Re-expands p around c: returns q with p(z) = sum_k q_k (z-c)^k.
 *
 * Repeated synthetic (Horner) division by (z-c); O(deg^2) and exact on the
 * exact path.
 */
template <class S>
Poly<S> taylor_shift(const Poly<S>& p, const S& c) {
    std::vector<S> a = p.coeffs();
    const int m = static_cast<int>(a.size()) - 1;
    for (int j = 0; j < m; ++j)
        for (int i = m - 1; i >= j; --i) a[i] += c * a[i + 1];
    return Poly<S>(std::move(a));
}

/// Taylor shift of a matrix polynomial (coefficient matrices, same recurrence).
template <class S>
MatPoly<S> matpoly_taylor_shift(const MatPoly<S>& b, const S& c) {
    std::vector<Matrix<S>> a = b.coeffs();
    const int m = static_cast<int>(a.size()) - 1;
    for (int j = 0; j < m; ++j)
        for (int i = m - 1; i >= j; --i) a[i] += c * a[i + 1];
    return MatPoly<S>(b.n(), std::move(a));
}

/**
 * Taylor coefficients g_0..g_order of 1/q around c, requiring q(c) != 0.
 *
 * g_0 = 1/q(c); g_k = -(1/q_0) * sum_{j=1..k} q_j g_{k-j}, with q_j the
 * shifted coefficients of q at c. Throws PoleAtExpansionPoint when q(c) = 0.
 */
template <class S>
std::vector<S> series_inverse_at(const Poly<S>& q, const S& c, int order,
                                 const Tolerance& tol = {}) {
    Poly<S> qs = taylor_shift(q, c);
    S q0 = qs.coeff(0);
    double scale = 0.0;
    if constexpr (!ScalarOps<S>::exact) {
        for (const S& v : q.coeffs()) scale = std::max(scale, ScalarOps<S>::magnitude(v));
    }
    if (ScalarOps<S>::is_zero(q0, tol, scale)) throw PoleAtExpansionPoint();
    std::vector<S> g(static_cast<size_t>(order) + 1, ScalarOps<S>::zero());
    const S inv_q0 = ScalarOps<S>::one() / q0;
    g[0] = inv_q0;
    for (int k = 1; k <= order; ++k) {
        S acc = ScalarOps<S>::zero();
        for (int j = 1; j <= k; ++j) acc += qs.coeff(j) * g[k - j];
        g[k] = -(inv_q0 * acc);
    }
    return g;
}

inline Poly<ApproxScalar> to_approx(const Poly<ExactScalar>& p) {
    std::vector<ApproxScalar> c;
    c.reserve(p.coeffs().size());
    for (const ExactScalar& v : p.coeffs()) c.push_back(to_approx(v));
    return Poly<ApproxScalar>(std::move(c));
}

/// Monic product prod (z - lambda_k)^{m_k}.
template <class S>
Poly<S> poly_from_roots(const std::vector<std::pair<S, int>>& roots) {
    Poly<S> p = Poly<S>::one();
    for (const auto& [lambda, mult] : roots)
        for (int k = 0; k < mult; ++k) p = p * Poly<S>::linear_root(lambda);
    return p;
}

// ---------------------------------------------------------------------------
// Formatting ("z^3 - 3z^2 + 1" style, used by the CLI).
// ---------------------------------------------------------------------------

namespace detail {

inline std::string poly_coeff_text(const ExactScalar& c, bool* negated) {
    *negated = false;
    if (c.is_real()) {
        ExactScalar a = c;
        if (sgn(a.re) < 0) {
            *negated = true;
            a = -a;
        }
        std::string t = format_exact(a);
        if (t.find('/') != std::string::npos) return "(" + t + ")";
        return t;
    }
    return "(" + format_exact(c) + ")";
}

inline std::string poly_coeff_text(const ApproxScalar& c, bool* negated) {
    *negated = false;
    if (c.imag() == 0.0) {
        double v = c.real();
        if (v < 0) {
            *negated = true;
            v = -v;
        }
        return format_double(v);
    }
    return "(" + format_approx(c) + ")";
}

}  // namespace detail

template <class S>
std::string poly_to_string(const Poly<S>& p, const std::string& var = "z") {
    if (p.is_zero()) return "0";
    std::string out;
    for (int k = p.degree(); k >= 0; --k) {
        S c = p.coeff(k);
        if (c == ScalarOps<S>::zero()) continue;
        bool neg = false;
        std::string coeff = detail::poly_coeff_text(c, &neg);
        std::string power;
        if (k == 1)
            power = var;
        else if (k > 1)
            power = var + "^" + std::to_string(k);
        std::string body;
        if (k == 0)
            body = coeff;
        else if (coeff == "1")
            body = power;
        else
            body = coeff + power;
        if (out.empty())
            out = (neg ? "-" : "") + body;
        else
            out += (neg ? " - " : " + ") + body;
    }
    return out;
}

}  // namespace adjspec
