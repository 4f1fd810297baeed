#pragma once

#include <cmath>
#include <complex>
#include <limits>
#include <string>

#include <gmpxx.h>

#include "adjspec/errors.hpp"

namespace adjspec {

/// Absolute/relative thresholds for the approximate path. The exact path ignores them.
struct Tolerance {
    double abs_eps = 1e-10;
    double rel_eps = 1e-10;
};

/**
 * A Gaussian rational a + b*i with arbitrary-precision rational parts.
 *
 * Denominators are kept positive and in lowest terms after every operation
 * (GMP canonical form), so arithmetic is exact: (a+b)-b == a bit for bit.
 */
class ExactScalar {
public:
    mpq_class re, im;

    ExactScalar() : re(0), im(0) {}
    ExactScalar(long v) : re(v), im(0) {}  // implicit, like integer literals
    ExactScalar(mpq_class r) : re(std::move(r)), im(0) {}
    ExactScalar(mpq_class r, mpq_class i) : re(std::move(r)), im(std::move(i)) {}
    ExactScalar(long num, long den) : re(num, den), im(0) {
        if (den == 0) throw DivisionByZero();
        re.canonicalize();
    }

    static ExactScalar unit_im() { return ExactScalar(mpq_class(0), mpq_class(1)); }

    bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
    bool is_real() const { return sgn(im) == 0; }

    /// |a|^2 = re^2 + im^2, exact.
    mpq_class norm() const { return mpq_class(re * re + im * im); }

    ExactScalar conj() const { return ExactScalar(re, mpq_class(-im)); }

    friend ExactScalar operator+(const ExactScalar& a, const ExactScalar& b) {
        return ExactScalar(mpq_class(a.re + b.re), mpq_class(a.im + b.im));
    }
    friend ExactScalar operator-(const ExactScalar& a, const ExactScalar& b) {
        return ExactScalar(mpq_class(a.re - b.re), mpq_class(a.im - b.im));
    }
    friend ExactScalar operator-(const ExactScalar& a) {
        return ExactScalar(mpq_class(-a.re), mpq_class(-a.im));
    }
    friend ExactScalar operator*(const ExactScalar& a, const ExactScalar& b) {
        return ExactScalar(mpq_class(a.re * b.re - a.im * b.im),
                           mpq_class(a.re * b.im + a.im * b.re));
    }
    friend ExactScalar operator/(const ExactScalar& a, const ExactScalar& b) {
        mpq_class n = b.norm();
        if (sgn(n) == 0) throw DivisionByZero();
        ExactScalar t = a * b.conj();
        return ExactScalar(mpq_class(t.re / n), mpq_class(t.im / n));
    }
    ExactScalar& operator+=(const ExactScalar& o) { return *this = *this + o; }
    ExactScalar& operator-=(const ExactScalar& o) { return *this = *this - o; }
    ExactScalar& operator*=(const ExactScalar& o) { return *this = *this * o; }
    ExactScalar& operator/=(const ExactScalar& o) { return *this = *this / o; }

    friend bool operator==(const ExactScalar& a, const ExactScalar& b) {
        return cmp(a.re, b.re) == 0 && cmp(a.im, b.im) == 0;
    }
    friend bool operator!=(const ExactScalar& a, const ExactScalar& b) { return !(a == b); }

    /// Lexicographic (re, im) order; used only for deterministic sorting, not as a field order.
    friend bool lex_less(const ExactScalar& a, const ExactScalar& b) {
        int c = cmp(a.re, b.re);
        if (c != 0) return c < 0;
        return cmp(a.im, b.im) < 0;
    }
};

using ApproxScalar = std::complex<double>;

inline ApproxScalar to_approx(const ExactScalar& a) {
    return ApproxScalar(a.re.get_d(), a.im.get_d());
}

/// Exact conversion: every finite double is a dyadic rational.
inline ExactScalar to_exact(const ApproxScalar& a) {
    if (!std::isfinite(a.real()) || !std::isfinite(a.imag()))
        throw Error("cannot convert a non-finite value to an exact scalar");
    return ExactScalar(mpq_class(a.real()), mpq_class(a.imag()));
}

// ---------------------------------------------------------------------------
// Scalar traits: the handful of operations generic code needs beyond +,-,*,/.
// ---------------------------------------------------------------------------

template <class S>
struct ScalarOps;

template <>
struct ScalarOps<ExactScalar> {
    static constexpr bool exact = true;
    static ExactScalar zero() { return ExactScalar(); }
    static ExactScalar one() { return ExactScalar(1); }
    static ExactScalar from_int(long v) { return ExactScalar(v); }
    static ExactScalar conj(const ExactScalar& a) { return a.conj(); }
    static double magnitude(const ExactScalar& a) {
        double m = std::sqrt(a.norm().get_d());
        if (m == 0.0 && !a.is_zero()) return std::numeric_limits<double>::min();
        return m;
    }
    // The exact path ignores the tolerance: zero is zero.
    static bool is_zero(const ExactScalar& a, const Tolerance&, double /*context_scale*/ = 0.0) {
        return a.is_zero();
    }
};

template <>
struct ScalarOps<ApproxScalar> {
    static constexpr bool exact = false;
    static ApproxScalar zero() { return {0.0, 0.0}; }
    static ApproxScalar one() { return {1.0, 0.0}; }
    static ApproxScalar from_int(long v) { return {static_cast<double>(v), 0.0}; }
    static ApproxScalar conj(const ApproxScalar& a) { return std::conj(a); }
    static double magnitude(const ApproxScalar& a) { return std::abs(a); }
    static bool is_zero(const ApproxScalar& a, const Tolerance& tol, double context_scale = 0.0) {
        return std::abs(a) <= tol.abs_eps + tol.rel_eps * context_scale;
    }
};

// ---------------------------------------------------------------------------
// Text encoding: "p/q" or "p/q+r/si" (lowest terms, '/' only when den != 1).
// ---------------------------------------------------------------------------

/// Parses the exact text encoding, e.g. "3", "-1/2", "3+2i", "1/2-3/4i", "i".
ExactScalar parse_exact(const std::string& text);

/// Canonical text encoding of an exact scalar.
std::string format_exact(const ExactScalar& a);

/// Parses "a", "bi" or "a+bi" with floating-point parts, e.g. "1.5-0.25i".
ApproxScalar parse_approx(const std::string& text);

/// Shortest round-trip decimal for a double (no trailing ".0" on integers).
std::string format_double(double v);

/// "a", "bi" or "a+bi" with shortest round-trip parts.
std::string format_approx(const ApproxScalar& a);

}  // namespace adjspec
