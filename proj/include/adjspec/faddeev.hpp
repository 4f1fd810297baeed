#pragma once

#include <vector>

#include "adjspec/poly.hpp"

namespace adjspec {

/**
 * Characteristic-polynomial data produced by the Faddeev-LeVerrier recurrence:
 * the coefficients alpha_1..alpha_n of p(z) = z^n + alpha_1 z^{n-1} + ... + alpha_n
 * and the matrix sequence C_0..C_{n-1} whose members are the coefficients of the
 * adjugate polynomial B(z) = Adj(z*I - A).
 */
template <class S>
struct CharData {
    int n = 0;
    std::vector<S> alphas;           // alpha_1..alpha_n
    std::vector<Matrix<S>> c_seq;    // C_0..C_{n-1}, C_0 = I
    Poly<S> p;                       // monic characteristic polynomial, ascending coefficients
};

/**
 * Runs the recurrence C_0 = I, C_l = A*C_{l-1} - (1/l) tr(A*C_{l-1}) * I.
 *
 * alpha_l = -(1/l) tr(A*C_{l-1}) is taken through l = n, which also realizes the
 * terminal identity A*C_{n-1} + alpha_n * I = 0.
 */
template <class S>
CharData<S> faddeev_decompose(const Matrix<S>& a) {
    const int n = a.n();
    CharData<S> cd;
    cd.n = n;
    Matrix<S> c = Matrix<S>::identity(n);
    cd.c_seq.push_back(c);
    std::vector<S> pc(static_cast<size_t>(n) + 1, ScalarOps<S>::zero());
    pc[n] = ScalarOps<S>::one();
    for (int l = 1; l <= n; ++l) {
        Matrix<S> m = a * c;
        S alpha = -(m.trace() / ScalarOps<S>::from_int(l));
        cd.alphas.push_back(alpha);
        pc[n - l] = alpha;
        if (l < n) {
            c = m + alpha * Matrix<S>::identity(n);
            cd.c_seq.push_back(c);
        }
    }
    cd.p = Poly<S>(std::move(pc));
    return cd;
}

/// B(z) = z^{n-1} I + z^{n-2} C_1 + ... + C_{n-1}: coefficient of z^k is C_{n-1-k}.
template <class S>
MatPoly<S> adjugate_poly(const CharData<S>& cd) {
    std::vector<Matrix<S>> coeffs;
    coeffs.reserve(cd.c_seq.size());
    for (int k = 0; k < cd.n; ++k) coeffs.push_back(cd.c_seq[cd.n - 1 - k]);
    return MatPoly<S>(cd.n, std::move(coeffs));
}

/**
 * Residual of the fundamental identity (z*I - A) B(z) = p(z) * I, as the max
 * entry magnitude over the coefficient-wise difference. Exactly 0 on the exact path.
 */
template <class S>
double verify_fundamental(const Matrix<S>& a, const CharData<S>& cd, const Tolerance& = {}) {
    const int n = cd.n;
    MatPoly<S> zi_minus_a(n, {-a, Matrix<S>::identity(n)});
    MatPoly<S> lhs = zi_minus_a * adjugate_poly(cd);
    MatPoly<S> diff = lhs - scalar_poly_times_identity(cd.p, n);
    double r = diff.max_norm();
    if constexpr (ScalarOps<S>::exact) {
        if (r == 0.0) {
            for (const auto& m : diff.coeffs())
                if (!m.is_zero()) return std::numeric_limits<double>::min();
        }
    }
    return r;
}

/// Cayley-Hamilton residual: max entry magnitude of p(A). Exactly 0 on the exact path.
template <class S>
double cayley_hamilton_residual(const Matrix<S>& a, const CharData<S>& cd) {
    return poly_eval_matrix(cd.p, a).max_norm();
}

}  // namespace adjspec
