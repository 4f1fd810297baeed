#pragma once

#include <vector>

#include "adjspec/spectral.hpp"

namespace adjspec {

/**
 * The data a holomorphic function contributes at one eigenvalue: the values
 * f(lambda), f'(lambda), ..., f^{(m)}(lambda). The finite functional calculus
 * consumes nothing else.
 */
template <class S>
struct FunctionJet {
    S at;
    std::vector<S> values;
};

/**
 * f(A) = sum_i sum_{l < n_i} f^{(l)}(lambda_i)/l! * N_i^l P_i, one jet per component
 * in component order. Throws JetTooShort when a jet has fewer than n_i values.
 */
template <class S>
Matrix<S> apply_function(const SpectralDecomposition<S>& dec, const std::vector<FunctionJet<S>>& jets) {
    if (jets.size() != dec.components.size())
        throw JetTooShort("expected " + std::to_string(dec.components.size()) + " jets, got " +
                          std::to_string(jets.size()));
    const int n = dec.A.n();
    Matrix<S> acc(n);
    for (size_t i = 0; i < dec.components.size(); ++i) {
        const auto& c = dec.components[i];
        const auto& jet = jets[i];
        if (static_cast<int>(jet.values.size()) < c.multiplicity)
            throw JetTooShort("jet at component " + std::to_string(i) + " has " +
                              std::to_string(jet.values.size()) + " values, needs " +
                              std::to_string(c.multiplicity));
        Matrix<S> term = jet.values[0] * c.P;
        Matrix<S> npow = Matrix<S>::identity(n);
        S factorial = ScalarOps<S>::one();
        for (int l = 1; l < c.multiplicity; ++l) {
            npow = npow * c.N;  // N^l P_i, since N is stored as N*P
            factorial *= ScalarOps<S>::from_int(l);
            term += (jet.values[l] / factorial) * npow;
        }
        acc += term;
    }
    return acc;
}

// ---------------------------------------------------------------------------
// Built-in jets.
// ---------------------------------------------------------------------------

/// exp: every derivative is e^lambda. Approximate path only (e^lambda is irrational).
inline FunctionJet<ApproxScalar> jet_exp(const ApproxScalar& at, int order) {
    ApproxScalar e = std::exp(at);
    return {at, std::vector<ApproxScalar>(static_cast<size_t>(order) + 1, e)};
}

/// f(z) = z^k: l-th derivative is k(k-1)...(k-l+1) lambda^{k-l}, zero past l = k.
template <class S>
FunctionJet<S> jet_power(int k, const S& at, int order) {
    if (k < 0) throw Error("power jets require a nonnegative exponent");
    FunctionJet<S> jet{at, {}};
    std::vector<S> powers(static_cast<size_t>(k) + 1, ScalarOps<S>::one());
    for (int t = 1; t <= k; ++t) powers[t] = powers[t - 1] * at;
    S falling = ScalarOps<S>::one();
    for (int l = 0; l <= order; ++l) {
        if (l > k) {
            jet.values.push_back(ScalarOps<S>::zero());
            continue;
        }
        if (l > 0) falling *= ScalarOps<S>::from_int(k - l + 1);
        jet.values.push_back(falling * powers[k - l]);
    }
    return jet;
}

/// Polynomial jet: l-th derivative is l! times the Taylor-shifted coefficient.
template <class S>
FunctionJet<S> jet_poly(const Poly<S>& p, const S& at, int order) {
    Poly<S> shifted = taylor_shift(p, at);
    FunctionJet<S> jet{at, {}};
    S factorial = ScalarOps<S>::one();
    for (int l = 0; l <= order; ++l) {
        if (l > 0) factorial *= ScalarOps<S>::from_int(l);
        jet.values.push_back(factorial * shifted.coeff(l));
    }
    return jet;
}

/// f(z) = (w - z)^{-1}: l-th derivative is l!/(w - lambda)^{l+1}. Requires w != lambda.
template <class S>
FunctionJet<S> jet_resolvent(const S& w, const S& at, int order, const Tolerance& tol = {}) {
    S gap = w - at;
    if (ScalarOps<S>::is_zero(gap, tol, ScalarOps<S>::magnitude(w)))
        throw PoleAtEigenvalue("resolvent point coincides with an eigenvalue");
    FunctionJet<S> jet{at, {}};
    S inv_gap = ScalarOps<S>::one() / gap;
    S value = inv_gap;  // l!/(w-at)^{l+1}, built incrementally
    for (int l = 0; l <= order; ++l) {
        if (l > 0) value *= ScalarOps<S>::from_int(l) * inv_gap;
        jet.values.push_back(value);
    }
    return jet;
}

/**
 * Residual of the resolvent partial-fraction expansion
 *   (z-A)^{-1} = sum_i 1/(z-lambda_i) (sum_{l<n_i} N_i^l/(z-lambda_i)^l) P_i
 * against a direct linear solve. Exactly 0 on the exact path. Throws
 * PoleAtEigenvalue when z is in the spectrum.
 */
template <class S>
double resolvent_expansion_residual(const SpectralDecomposition<S>& dec, const S& z,
                                    const Tolerance& tol = {}) {
    const int n = dec.A.n();
    for (const auto& c : dec.components) {
        S gap = z - c.lambda;
        if (ScalarOps<S>::is_zero(gap, tol, ScalarOps<S>::magnitude(z)))
            throw PoleAtEigenvalue("z is an eigenvalue");
    }
    Matrix<S> expansion(n);
    for (const auto& c : dec.components) {
        S inv_gap = ScalarOps<S>::one() / (z - c.lambda);
        Matrix<S> npow = Matrix<S>::identity(n);
        S weight = inv_gap;
        Matrix<S> term = weight * c.P;
        for (int l = 1; l < c.multiplicity; ++l) {
            npow = npow * c.N;
            weight *= inv_gap;
            term += weight * npow;
        }
        expansion += term;
    }
    Matrix<S> direct =
        mat_solve(z * Matrix<S>::identity(n) - dec.A, Matrix<S>::identity(n), tol);
    Matrix<S> diff = expansion - direct;
    double r = diff.max_norm();
    if constexpr (ScalarOps<S>::exact) {
        if (r == 0.0 && !diff.is_zero()) return std::numeric_limits<double>::min();
    }
    return r;
}

}  // namespace adjspec
