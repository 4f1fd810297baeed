#pragma once

#include <map>
#include <string>
#include <vector>

#include "adjspec/faddeev.hpp"
#include "adjspec/roots.hpp"

namespace adjspec {

/**
 * One eigenvalue's piece of the decomposition: the oblique projector P onto the
 * characteristic subspace and the nilpotent part, stored as N*P (which equals N).
 */
template <class S>
struct SpectralComponent {
    S lambda;
    int multiplicity = 0;
    Matrix<S> P;
    Matrix<S> N;
    Poly<S> q;  // q_i(z) = p(z)/(z-lambda_i)^{n_i}
};

/// Jordan block sizes (Segre characteristic) for one eigenvalue.
struct JordanStructure {
    std::vector<int> block_sizes;  // descending
    int nilpotency_index = 0;
};

template <class S>
struct SpectralDecomposition {
    Matrix<S> A;
    Spectrum<S> spectrum;
    std::vector<SpectralComponent<S>> components;
    CharData<S> char_data;
    MatPoly<S> B;
    std::map<std::string, double> residuals;
};

/// q_i(z) = prod_{j != i} (z - lambda_j)^{n_j}; degree n - n_i, q_i(lambda_i) != 0.
template <class S>
Poly<S> q_factor(const Spectrum<S>& spectrum, int i) {
    std::vector<std::pair<S, int>> other;
    for (int j = 0; j < spectrum.size(); ++j)
        if (j != i) other.push_back({spectrum.entries[j].lambda, spectrum.entries[j].multiplicity});
    return poly_from_roots(other);
}

namespace detail {

// Taylor coefficient `order` of B(z)/q_i(z) at lambda_i: shift B, invert q_i as a
// series, convolve.
template <class S>
Matrix<S> local_quotient_coeff(const MatPoly<S>& b, const Poly<S>& q, const S& lambda, int order,
                               const Tolerance& tol) {
    MatPoly<S> shifted = matpoly_taylor_shift(b, lambda);
    std::vector<S> g = series_inverse_at(q, lambda, order, tol);
    Matrix<S> acc(b.n());
    for (int k = 0; k <= order; ++k) acc += g[order - k] * shifted.coeff(k);
    return acc;
}

}  // namespace detail

/// P_i as Taylor coefficient n_i - 1 of B(z)/q_i(z) at lambda_i.
template <class S>
Matrix<S> projector(const MatPoly<S>& b, const Spectrum<S>& spectrum, int i,
                    const Tolerance& tol = {}) {
    const auto& e = spectrum.entries[i];
    return detail::local_quotient_coeff(b, q_factor(spectrum, i), e.lambda, e.multiplicity - 1,
                                        tol);
}

/// N_i P_i as Taylor coefficient n_i - 2 of B(z)/q_i(z) at lambda_i; zero when n_i = 1.
template <class S>
Matrix<S> nilpotent(const MatPoly<S>& b, const Spectrum<S>& spectrum, int i,
                    const Tolerance& tol = {}) {
    const auto& e = spectrum.entries[i];
    if (e.multiplicity == 1) return Matrix<S>(b.n());
    return detail::local_quotient_coeff(b, q_factor(spectrum, i), e.lambda, e.multiplicity - 2,
                                        tol);
}

/**
 * Full decomposition: Faddeev-LeVerrier for B(z), then every component's (P_i, N_i)
 * with residual diagnostics (completeness, idempotence, orthogonality, commutation,
 * nilpotency, reconstruction, invariance, trace). On the exact path any nonzero
 * residual throws InconsistentSpectrum.
 */
template <class S>
SpectralDecomposition<S> decompose(const Matrix<S>& a, const Spectrum<S>& spectrum,
                                   const Tolerance& tol = {}) {
    const int n = a.n();
    if (spectrum.total_multiplicity() != n)
        throw MultiplicityMismatch("spectrum multiplicities sum to " +
                                   std::to_string(spectrum.total_multiplicity()) +
                                   " but the matrix dimension is " + std::to_string(n));
    SpectralDecomposition<S> dec;
    dec.A = a;
    dec.spectrum = spectrum;
    dec.char_data = faddeev_decompose(a);
    dec.B = adjugate_poly(dec.char_data);

    for (int i = 0; i < spectrum.size(); ++i) {
        SpectralComponent<S> c;
        c.lambda = spectrum.entries[i].lambda;
        c.multiplicity = spectrum.entries[i].multiplicity;
        c.q = q_factor(spectrum, i);
        c.P = projector(dec.B, spectrum, i, tol);
        c.N = nilpotent(dec.B, spectrum, i, tol);
        dec.components.push_back(std::move(c));
    }

    // Diagnostics. Each is the max entry magnitude of an identity that must vanish.
    const Matrix<S> id = Matrix<S>::identity(n);
    Matrix<S> p_sum(n);
    Matrix<S> recon(n);
    double idem = 0.0, orth = 0.0, comm = 0.0, nilp = 0.0, invar = 0.0, tr_dev = 0.0;
    double absorb = 0.0;
    bool exact_clean = true;
    auto track = [&](double& slot, const Matrix<S>& diff) {
        slot = std::max(slot, diff.max_norm());
        if constexpr (ScalarOps<S>::exact) {
            if (!diff.is_zero()) exact_clean = false;
        }
    };
    for (const auto& c : dec.components) {
        p_sum += c.P;
        recon += c.lambda * c.P + c.N;
        track(idem, c.P * c.P - c.P);
        track(comm, c.N * c.P - c.P * c.N);
        track(absorb, c.N * c.P - c.N);  // N P = N (the nilpotent lives inside range P)
        track(nilp, mat_pow(c.N, c.multiplicity));
        track(invar, a * c.P - c.P * a);
        S tr_diff = c.P.trace() - ScalarOps<S>::from_int(c.multiplicity);
        tr_dev = std::max(tr_dev, ScalarOps<S>::magnitude(tr_diff));
        if constexpr (ScalarOps<S>::exact) {
            if (!tr_diff.is_zero()) exact_clean = false;
        }
    }
    for (size_t i = 0; i < dec.components.size(); ++i)
        for (size_t j = 0; j < dec.components.size(); ++j) {
            if (i == j) continue;
            track(orth, dec.components[i].P * dec.components[j].P);
        }
    double compl_res = 0.0, recon_res = 0.0;
    track(compl_res, p_sum - id);
    track(recon_res, recon - a);

    dec.residuals["absorption"] = absorb;
    dec.residuals["completeness"] = compl_res;
    dec.residuals["idempotence"] = idem;
    dec.residuals["orthogonality"] = orth;
    dec.residuals["commutation"] = comm;
    dec.residuals["nilpotency"] = nilp;
    dec.residuals["reconstruction"] = recon_res;
    dec.residuals["invariance"] = invar;
    dec.residuals["trace"] = tr_dev;

    if constexpr (ScalarOps<S>::exact) {
        if (!exact_clean)
            throw InconsistentSpectrum(
                "exact spectral residuals are nonzero; the supplied spectrum does not match the "
                "matrix");
    }
    return dec;
}

/**
 * Residual of the derivative factorization
 *   d^s B / dz^s |_{lambda_i} = s! N_i^{n_i-1-s} q_i(N_i + lambda_i) P_i,  0 <= s <= n_i-1.
 * The left side is read off the Taylor-shifted B; the right side is assembled from the
 * component matrices. Exactly 0 on the exact path.
 */
template <class S>
double derivative_identity_residual(const SpectralDecomposition<S>& dec, int i, int s,
                                    const Tolerance& tol = {}) {
    (void)tol;
    const auto& c = dec.components[i];
    if (s < 0 || s >= c.multiplicity)
        throw Error("derivative order s must satisfy 0 <= s <= n_i - 1");
    MatPoly<S> shifted = matpoly_taylor_shift(dec.B, c.lambda);
    Matrix<S> lhs = shifted.coeff(s);  // d^s B/dz^s |_lambda = s! * coeff_s; the s! cancels

    const int n = dec.A.n();
    Matrix<S> arg = c.N + c.lambda * Matrix<S>::identity(n);
    Matrix<S> rhs = poly_eval_matrix(c.q, arg) * c.P;
    rhs = mat_pow(c.N, c.multiplicity - 1 - s) * rhs;
    // Divide the factorization's s! into the Taylor coefficient's s!: both sides above
    // are d^s B/dz^s / s!, so they compare directly.
    Matrix<S> diff = lhs - rhs;
    double r = diff.max_norm();
    if constexpr (ScalarOps<S>::exact) {
        if (r == 0.0 && !diff.is_zero()) return std::numeric_limits<double>::min();
    }
    return r;
}

/**
 * Segre characteristic from ranks: r_0 = rank(P), r_k = rank(N^k); the number of
 * blocks of size >= k is r_{k-1} - r_k, and the nilpotency index is the least k
 * with r_k = 0.
 */
template <class S>
JordanStructure jordan_structure(const SpectralComponent<S>& c, const Tolerance& tol = {}) {
    std::vector<int> r;
    r.push_back(mat_rank(c.P, tol));
    Matrix<S> power = Matrix<S>::identity(c.P.n());
    int k = 0;
    do {
        ++k;
        power = power * c.N;
        r.push_back(mat_rank(power, tol));
    } while (r.back() > 0 && k <= c.P.n());

    JordanStructure js;
    js.nilpotency_index = k;
    for (int size = static_cast<int>(r.size()) - 1; size >= 1; --size) {
        int at_least = r[size - 1] - r[size];
        int at_least_next = (size + 1 < static_cast<int>(r.size())) ? r[size] - r[size + 1] : 0;
        for (int b = 0; b < at_least - at_least_next; ++b) js.block_sizes.push_back(size);
    }
    std::sort(js.block_sizes.rbegin(), js.block_sizes.rend());
    return js;
}

namespace detail {

// Greedy rank-extension: returns the candidates (lowest index first) that enlarge the
// span of `base`; every accepted vector is appended to `base`.
template <class S>
std::vector<std::vector<S>> extend_independent(std::vector<std::vector<S>>& base,
                                               const std::vector<std::vector<S>>& candidates,
                                               int needed, int dim, const Tolerance& tol) {
    std::vector<std::vector<S>> chosen;
    for (const auto& cand : candidates) {
        if (static_cast<int>(chosen.size()) == needed) break;
        std::vector<std::vector<S>> trial = base;
        trial.push_back(cand);
        // Rank of the column set via elimination on the transpose.
        Matrix<S> m(dim);
        for (size_t col = 0; col < trial.size() && col < static_cast<size_t>(dim); ++col)
            for (int row = 0; row < dim; ++row) m(row, static_cast<int>(col)) = trial[col][row];
        if (static_cast<int>(trial.size()) <= dim &&
            mat_rank(m, tol) == static_cast<int>(trial.size())) {
            base.push_back(cand);
            chosen.push_back(cand);
        }
    }
    return chosen;
}

}  // namespace detail

/**
 * Jordan chains for one component: for k from the nilpotency index down to 1, heads of
 * length-k chains complete ker(N^{k-1}) + N*(longer chains) inside ker(N^k) restricted
 * to range(P); each head v yields the chain {v, Nv, ..., N^{k-1}v}. Selection uses
 * column-pivoted elimination with lowest-index-first order, so output is deterministic.
 * Verifies N*chain[j] == chain[j+1] and joint independence; throws DegenerateBasis.
 */
template <class S>
std::vector<std::vector<std::vector<S>>> jordan_chains(const SpectralComponent<S>& c,
                                                       const Tolerance& tol = {}) {
    const int n = c.P.n();
    JordanStructure js = jordan_structure(c, tol);
    const int d = js.nilpotency_index;

    // Spanning sets of K_k = ker(N^k) within range(P): columns P*b for b in ker(N^k P).
    std::vector<std::vector<std::vector<S>>> kernel_span(static_cast<size_t>(d) + 1);
    Matrix<S> power = Matrix<S>::identity(n);
    for (int k = 1; k <= d; ++k) {
        power = power * c.N;  // N^k (N is stored as N*P, so this is N^k P)
        for (const auto& b : kernel_basis(power, tol)) kernel_span[k].push_back(mat_vec(c.P, b));
    }

    std::vector<std::pair<std::vector<S>, int>> heads;  // (head vector, chain length)
    std::vector<std::vector<S>> occupied;               // basis built so far: K_{k-1} + drops
    for (int k = d; k >= 1; --k) {
        int blocks_k = 0;
        for (int size : js.block_sizes)
            if (size == k) ++blocks_k;
        // Basis of K_{k-1}, then the descendants of longer chains that land in K_k \ K_{k-1}.
        occupied.clear();
        detail::extend_independent(occupied, kernel_span[k - 1], n, n, tol);
        std::vector<std::vector<S>> drops;
        for (const auto& [head, len] : heads) {
            std::vector<S> v = head;
            for (int t = 0; t < len - k; ++t) v = mat_vec(c.N, v);
            drops.push_back(v);
        }
        detail::extend_independent(occupied, drops, n, n, tol);
        auto new_heads =
            detail::extend_independent(occupied, kernel_span[k], blocks_k, n, tol);
        if (static_cast<int>(new_heads.size()) != blocks_k)
            throw DegenerateBasis("could not select " + std::to_string(blocks_k) +
                                  " independent chain heads of length " + std::to_string(k));
        for (auto& h : new_heads) heads.push_back({std::move(h), k});
    }

    std::vector<std::vector<std::vector<S>>> chains;
    std::vector<std::vector<S>> all_vectors;
    for (const auto& [head, len] : heads) {
        std::vector<std::vector<S>> chain;
        std::vector<S> v = head;
        for (int t = 0; t < len; ++t) {
            chain.push_back(v);
            all_vectors.push_back(v);
            v = mat_vec(c.N, v);
        }
        // Past the chain end the next application must vanish.
        double tail = 0.0;
        for (const S& x : v) tail = std::max(tail, ScalarOps<S>::magnitude(x));
        double floor = tol.abs_eps * (1.0 + c.N.inf_norm());
        if constexpr (ScalarOps<S>::exact) floor = 0.0;
        if (tail > floor)
            throw DegenerateBasis("chain does not terminate: |N^len head| = " +
                                  std::to_string(tail));
        chains.push_back(std::move(chain));
    }

    // Joint independence: all chain vectors together must have full rank n_i.
    Matrix<S> m(n);
    if (static_cast<int>(all_vectors.size()) > n)
        throw DegenerateBasis("more chain vectors than the ambient dimension");
    for (size_t col = 0; col < all_vectors.size(); ++col)
        for (int row = 0; row < n; ++row) m(row, static_cast<int>(col)) = all_vectors[col][row];
    if (mat_rank(m, tol) != static_cast<int>(all_vectors.size()))
        throw DegenerateBasis("chain vectors are not jointly independent");

    return chains;
}

}  // namespace adjspec
