#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <vector>

#include "adjspec/poly.hpp"

namespace adjspec {

/// The distinct eigenvalues of a matrix with their algebraic multiplicities.
template <class S>
struct Spectrum {
    struct Entry {
        S lambda;
        int multiplicity = 0;
    };
    std::vector<Entry> entries;

    int total_multiplicity() const {
        int t = 0;
        for (const auto& e : entries) t += e.multiplicity;
        return t;
    }
    int size() const { return static_cast<int>(entries.size()); }
};

// ---------------------------------------------------------------------------
// Aberth-Ehrlich simultaneous iteration (approximate path).
// ---------------------------------------------------------------------------

/**
 * All roots of a monic polynomial by Aberth-Ehrlich iteration from perturbed-circle
 * starting points. A root estimate is frozen ("settled") once |p(z)| drops below a
 * Horner rounding bound, so corrections stalled at the noise floor do not block
 * convergence. Throws NoConvergence after max_iters sweeps.
 */
std::vector<ApproxScalar> aberth_roots(const Poly<ApproxScalar>& p, const Tolerance& tol = {},
                                       int max_iters = 200);

/**
 * Greedy single-linkage clustering of root estimates into a spectrum. The link
 * radius is max(abs_eps, rel_eps*(1+max|root|)) * deg p, widened per pair by the
 * Smith inclusion radii deg*|p/p'| so that multiple-root clusters stalled at the
 * evaluation noise floor still merge. Each cluster contributes its centroid with
 * multiplicity equal to its size; output is sorted by (re, im), so the result is
 * independent of the input order.
 */
Spectrum<ApproxScalar> cluster_roots(const std::vector<ApproxScalar>& roots,
                                     const Poly<ApproxScalar>& p, const Tolerance& tol = {});

/// Aberth iteration followed by cluster_roots.
Spectrum<ApproxScalar> find_roots_approx(const Poly<ApproxScalar>& p, const Tolerance& tol = {},
                                         int max_iters = 200);

// ---------------------------------------------------------------------------
// Exact path: Gaussian-rational roots with exact deflation.
// ---------------------------------------------------------------------------

/**
 * Extracts all Gaussian-rational roots of a monic polynomial over Q(i) by exact
 * verification of candidate roots (float-located, then lattice fallback) with
 * repeated exact deflation. Succeeds iff p splits over Q(i); otherwise throws
 * IrrationalSpectrum.
 */
Spectrum<ExactScalar> find_roots_exact(const Poly<ExactScalar>& p);

// ---------------------------------------------------------------------------
// Validation.
// ---------------------------------------------------------------------------

/**
 * Checks a spectrum against p: throws MultiplicityMismatch unless multiplicities
 * sum to deg p; returns max_i |p(lambda_i)|. On the exact path the product
 * prod (z-lambda_i)^{n_i} is also compared to p coefficient-wise and any mismatch
 * is reported as a positive residual.
 */
template <class S>
double validate_spectrum(const Poly<S>& p, const Spectrum<S>& s, const Tolerance& tol = {}) {
    (void)tol;
    if (s.total_multiplicity() != p.degree())
        throw MultiplicityMismatch("multiplicities sum to " +
                                   std::to_string(s.total_multiplicity()) + ", degree is " +
                                   std::to_string(p.degree()));
    double residual = 0.0;
    for (const auto& e : s.entries)
        residual = std::max(residual, ScalarOps<S>::magnitude(p.eval(e.lambda)));
    if constexpr (ScalarOps<S>::exact) {
        std::vector<std::pair<S, int>> rs;
        for (const auto& e : s.entries) rs.push_back({e.lambda, e.multiplicity});
        Poly<S> rebuilt = poly_from_roots(rs);
        if (!(rebuilt == p)) {
            double d = 0.0;
            Poly<S> diff = rebuilt - p;
            for (const S& c : diff.coeffs()) d = std::max(d, ScalarOps<S>::magnitude(c));
            residual = std::max({residual, d, std::numeric_limits<double>::min()});
        }
    }
    return residual;
}

/// Parses "lambda:mult,lambda:mult,..." using the given scalar parser.
template <class S, class ParseFn>
Spectrum<S> parse_spectrum(const std::string& text, ParseFn parse_scalar) {
    Spectrum<S> s;
    size_t pos = 0;
    while (pos <= text.size()) {
        size_t comma = text.find(',', pos);
        std::string item =
            text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        size_t colon = item.rfind(':');
        if (colon == std::string::npos) throw ParseError("expected 'lambda:mult' in '" + item + "'");
        std::string mult_text = item.substr(colon + 1);
        if (mult_text.empty() ||
            mult_text.find_first_not_of("0123456789") != std::string::npos)
            throw ParseError("bad multiplicity in '" + item + "'");
        int mult = 0;
        try {
            mult = std::stoi(mult_text);
        } catch (const std::exception&) {
            throw ParseError("bad multiplicity in '" + item + "'");
        }
        if (mult <= 0) throw ParseError("multiplicity must be positive in '" + item + "'");
        s.entries.push_back({parse_scalar(item.substr(0, colon)), mult});
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return s;
}

}  // namespace adjspec
