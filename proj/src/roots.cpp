#include "adjspec/roots.hpp"

#include <cmath>
#include <limits>
#include <set>

namespace adjspec {

namespace {

constexpr double kMachEps = std::numeric_limits<double>::epsilon();

// p(z), p'(z) and the Horner rounding bound sum |a_k||z|^k (2k+1) in one sweep.
struct HornerEval {
    ApproxScalar value;
    ApproxScalar deriv;
    double noise_bound;
};

HornerEval horner_full(const std::vector<ApproxScalar>& a, ApproxScalar z) {
    ApproxScalar p(0.0), dp(0.0);
    double bound = 0.0;
    double az = std::abs(z);
    for (int k = static_cast<int>(a.size()) - 1; k >= 0; --k) {
        dp = dp * z + p;
        p = p * z + a[k];
        bound = bound * az + std::abs(a[k]) * (2.0 * k + 1.0);
    }
    return {p, dp, bound * kMachEps};
}

}  // namespace

std::vector<ApproxScalar> aberth_roots(const Poly<ApproxScalar>& p, const Tolerance& tol,
                                       int max_iters) {
    int deg = p.degree();
    if (deg <= 0) return {};
    std::vector<ApproxScalar> a = p.coeffs();
    ApproxScalar lead = a.back();
    for (ApproxScalar& c : a) c /= lead;

    // Exactly-zero low coefficients give exact roots at the origin.
    std::vector<ApproxScalar> roots;
    size_t nzero = 0;
    while (nzero < a.size() - 1 && a[nzero] == ApproxScalar(0.0)) ++nzero;
    for (size_t k = 0; k < nzero; ++k) roots.push_back(ApproxScalar(0.0));
    a.erase(a.begin(), a.begin() + static_cast<long>(nzero));
    int d = static_cast<int>(a.size()) - 1;
    if (d == 0) return roots;
    if (d == 1) {
        roots.push_back(-a[0]);
        return roots;
    }

    // Perturbed circle around the root centroid.
    ApproxScalar center = -a[d - 1] / static_cast<double>(d);
    double radius = 0.0;
    for (int k = 0; k < d; ++k) radius = std::max(radius, std::abs(a[k]));
    radius = 1.0 + radius;
    std::vector<ApproxScalar> z(d);
    for (int j = 0; j < d; ++j) {
        double theta = 2.0 * M_PI * j / d + 1.5 / d + 1e-3 * j;
        double r = radius * (0.85 + 0.1 * j / d);
        z[j] = center + std::polar(r, theta);
    }

    std::vector<bool> settled(d, false);
    for (int iter = 0; iter < max_iters; ++iter) {
        double max_corr = 0.0;
        bool all_settled = true;
        for (int j = 0; j < d; ++j) {
            if (settled[j]) continue;
            HornerEval h = horner_full(a, z[j]);
            if (std::abs(h.value) <= 2.0 * h.noise_bound) {
                settled[j] = true;
                continue;
            }
            all_settled = false;
            if (h.deriv == ApproxScalar(0.0)) {
                z[j] += std::polar(radius * 1e-6, 0.7 + j);
                max_corr = std::max(max_corr, radius * 1e-6);
                continue;
            }
            ApproxScalar newton = h.value / h.deriv;
            ApproxScalar repulsion(0.0);
            for (int k = 0; k < d; ++k) {
                if (k == j) continue;
                ApproxScalar diff = z[j] - z[k];
                if (diff == ApproxScalar(0.0)) diff = ApproxScalar(radius * 1e-14, 0.0);
                repulsion += 1.0 / diff;
            }
            ApproxScalar denom = 1.0 - newton * repulsion;
            ApproxScalar w = (denom == ApproxScalar(0.0)) ? newton : newton / denom;
            z[j] -= w;
            max_corr = std::max(max_corr, std::abs(w));
        }
        if (all_settled || max_corr < tol.abs_eps) {
            roots.insert(roots.end(), z.begin(), z.end());
            return roots;
        }
    }
    throw NoConvergence("Aberth iteration did not converge in " + std::to_string(max_iters) +
                        " sweeps");
}

Spectrum<ApproxScalar> cluster_roots(const std::vector<ApproxScalar>& roots,
                                     const Poly<ApproxScalar>& p, const Tolerance& tol) {
    const int n = p.degree();
    Spectrum<ApproxScalar> s;
    if (roots.empty()) return s;

    double max_root = 0.0;
    for (const auto& z : roots) max_root = std::max(max_root, std::abs(z));
    const double spec_radius = std::max(tol.abs_eps, tol.rel_eps * (1.0 + max_root)) * n;

    // Smith inclusion radius n*|p/p'| per estimate; multiple-root estimates stalled at
    // the evaluation noise floor carry radii of that floor's size, so they still merge.
    std::vector<ApproxScalar> a = p.coeffs();
    ApproxScalar lead = a.back();
    for (ApproxScalar& c : a) c /= lead;
    std::vector<double> rho(roots.size(), 0.0);
    for (size_t j = 0; j < roots.size(); ++j) {
        HornerEval h = horner_full(a, roots[j]);
        double r;
        if (std::abs(h.deriv) == 0.0)
            r = spec_radius;
        else
            r = n * std::abs(h.value / h.deriv);
        if (!std::isfinite(r)) r = spec_radius;
        rho[j] = std::min(r, 1e-3 * (1.0 + std::abs(roots[j])));
    }

    // Single-linkage union-find.
    std::vector<int> parent(roots.size());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (size_t i = 0; i < roots.size(); ++i)
        for (size_t j = i + 1; j < roots.size(); ++j) {
            double link = std::max(spec_radius, 3.0 * (rho[i] + rho[j]));
            if (std::abs(roots[i] - roots[j]) <= link) parent[find(static_cast<int>(i))] =
                find(static_cast<int>(j));
        }

    std::vector<std::vector<ApproxScalar>> clusters(roots.size());
    for (size_t i = 0; i < roots.size(); ++i) clusters[find(static_cast<int>(i))].push_back(roots[i]);

    // A multiplicity-m root is a simple root of p^{(m-1)}, so Newton there recovers
    // it with full accuracy; the raw centroid stalls at the m-th root of the noise.
    std::vector<Poly<ApproxScalar>> derivs = {Poly<ApproxScalar>(a)};
    for (int k = 1; k < n; ++k) derivs.push_back(derivs.back().derivative());
    for (const auto& cl : clusters) {
        if (cl.empty()) continue;
        ApproxScalar centroid(0.0);
        double width = 0.0;
        for (const auto& z : cl) centroid += z;
        centroid /= static_cast<double>(cl.size());
        for (const auto& z : cl) width = std::max(width, std::abs(z - centroid));
        const int m = static_cast<int>(cl.size());
        ApproxScalar lambda = centroid;
        if (m <= n) {
            const Poly<ApproxScalar>& target = derivs[m - 1];
            const Poly<ApproxScalar> target_deriv = target.derivative();
            ApproxScalar x = centroid;
            bool ok = true;
            for (int it = 0; it < 24 && ok; ++it) {
                ApproxScalar f = target.eval(x);
                ApproxScalar fp = target_deriv.eval(x);
                if (std::abs(fp) == 0.0) break;
                ApproxScalar step = f / fp;
                x -= step;
                ok = std::isfinite(x.real()) && std::isfinite(x.imag());
                if (ok && std::abs(step) < 1e-16 * (1.0 + std::abs(x))) break;
            }
            // Keep the refinement only if it stays inside the cluster's neighborhood.
            if (ok && std::abs(x - centroid) <= 4.0 * width + spec_radius) lambda = x;
        }
        s.entries.push_back({lambda, m});
    }
    std::sort(s.entries.begin(), s.entries.end(), [](const auto& x, const auto& y) {
        if (x.lambda.real() != y.lambda.real()) return x.lambda.real() < y.lambda.real();
        return x.lambda.imag() < y.lambda.imag();
    });
    return s;
}

Spectrum<ApproxScalar> find_roots_approx(const Poly<ApproxScalar>& p, const Tolerance& tol,
                                         int max_iters) {
    return cluster_roots(aberth_roots(p, tol, max_iters), p, tol);
}

// ---------------------------------------------------------------------------
// Exact extraction.
// ---------------------------------------------------------------------------

namespace {

// Synthetic division by (z - r); the remainder is discarded (callers check eval first).
Poly<ExactScalar> deflate(const Poly<ExactScalar>& p, const ExactScalar& r) {
    const std::vector<ExactScalar>& a = p.coeffs();
    const int d = p.degree();
    std::vector<ExactScalar> b(static_cast<size_t>(d), ExactScalar(0));
    ExactScalar carry = a[d];
    for (int i = d - 1; i >= 0; --i) {
        b[i] = carry;
        carry = a[i] + r * carry;
    }
    return Poly<ExactScalar>(std::move(b));
}

// Least common multiple of all coefficient denominators (real and imaginary parts).
mpz_class denominator_lcm(const Poly<ExactScalar>& p) {
    mpz_class l = 1;
    for (const ExactScalar& c : p.coeffs()) {
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.re.get_den().get_mpz_t());
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.im.get_den().get_mpz_t());
    }
    return l;
}

bool contains(const std::vector<ExactScalar>& v, const ExactScalar& x) {
    for (const auto& e : v)
        if (e == x) return true;
    return false;
}

// Candidate roots u/denom for Gaussian integers u near denom*z for each float root z.
std::vector<ExactScalar> float_candidates(const Poly<ExactScalar>& p, const mpz_class& denom) {
    std::vector<ExactScalar> cands;
    std::vector<ApproxScalar> est;
    try {
        est = aberth_roots(to_approx(p));
    } catch (const NoConvergence&) {
        return cands;
    }
    double d = denom.get_d();
    for (const ApproxScalar& z : est) {
        double wr = z.real() * d, wi = z.imag() * d;
        if (!std::isfinite(wr) || !std::isfinite(wi)) continue;
        if (std::abs(wr) > 1e15 || std::abs(wi) > 1e15) continue;
        for (long dr = -1; dr <= 1; ++dr)
            for (long di = -1; di <= 1; ++di) {
                mpz_class ur(static_cast<long>(std::llround(wr)) + dr);
                mpz_class ui(static_cast<long>(std::llround(wi)) + di);
                ExactScalar cand(mpq_class(ur, denom), mpq_class(ui, denom));
                cand.re.canonicalize();
                cand.im.canonicalize();
                if (!contains(cands, cand)) cands.push_back(cand);
            }
    }
    std::sort(cands.begin(), cands.end(), [](const ExactScalar& a, const ExactScalar& b) {
        return lex_less(a, b);
    });
    return cands;
}

// Monic Z[i] coefficients of denom^d * p(w/denom): c_k scaled by denom^{d-k}.
struct ScaledPoly {
    std::vector<mpz_class> re, im;  // index k = coefficient of w^k
};

ScaledPoly scale_to_integer(const Poly<ExactScalar>& p, const mpz_class& denom) {
    const int d = p.degree();
    ScaledPoly out;
    out.re.resize(d + 1);
    out.im.resize(d + 1);
    mpz_class power = 1;
    for (int k = d; k >= 0; --k) {
        mpq_class re = p.coeff(k).re * power;
        mpq_class im = p.coeff(k).im * power;
        re.canonicalize();
        im.canonicalize();
        out.re[k] = re.get_num();
        out.im[k] = im.get_num();
        power *= denom;
    }
    return out;
}

// Every Gaussian-integer root of the scaled monic polynomial divides its constant
// term, so its norm divides norm(c_0); enumerate the Cauchy disk with that filter.
bool lattice_search(Poly<ExactScalar>& work, std::vector<std::pair<ExactScalar, int>>& found) {
    mpz_class denom = denominator_lcm(work);
    ScaledPoly sp = scale_to_integer(work, denom);
    const int d = work.degree();
    mpz_class c0_norm = sp.re[0] * sp.re[0] + sp.im[0] * sp.im[0];
    if (c0_norm == 0) return false;  // zero roots were stripped already

    double bound = 0.0;
    for (int k = 0; k < d; ++k) {
        double m = std::hypot(sp.re[k].get_d(), sp.im[k].get_d());
        if (!std::isfinite(m)) return false;
        bound = std::max(bound, m);
    }
    double radius = 1.0 + bound;
    if (radius * radius > 4e6) return false;  // enumeration too large; give up
    long r = static_cast<long>(radius) + 1;

    for (long a = -r; a <= r; ++a)
        for (long b = -r; b <= r; ++b) {
            if (a == 0 && b == 0) continue;
            if (static_cast<double>(a) * a + static_cast<double>(b) * b > radius * radius)
                continue;
            mpz_class norm(a * a + b * b);
            if (!mpz_divisible_p(c0_norm.get_mpz_t(), norm.get_mpz_t())) continue;
            ExactScalar cand(mpq_class(mpz_class(a), denom), mpq_class(mpz_class(b), denom));
            cand.re.canonicalize();
            cand.im.canonicalize();
            if (work.eval(cand).is_zero()) {
                int mult = 0;
                while (work.degree() > 0 && work.eval(cand).is_zero()) {
                    work = deflate(work, cand);
                    ++mult;
                }
                found.push_back({cand, mult});
                return true;
            }
        }
    return false;
}

}  // namespace

Spectrum<ExactScalar> find_roots_exact(const Poly<ExactScalar>& p) {
    if (p.degree() < 0) throw Error("cannot extract roots of the zero polynomial");
    Poly<ExactScalar> work = p;
    if (!(work.coeff(work.degree()) == ExactScalar(1))) {
        ExactScalar inv = ExactScalar(1) / work.coeff(work.degree());
        work = inv * work;
    }

    std::vector<std::pair<ExactScalar, int>> found;
    int zero_mult = 0;
    while (work.degree() > 0 && work.coeff(0).is_zero()) {
        work = deflate(work, ExactScalar(0));
        ++zero_mult;
    }
    if (zero_mult > 0) found.push_back({ExactScalar(0), zero_mult});

    while (work.degree() > 0) {
        bool progressed = false;
        mpz_class denom = denominator_lcm(work);
        for (const ExactScalar& cand : float_candidates(work, denom)) {
            int mult = 0;
            while (work.degree() > 0 && work.eval(cand).is_zero()) {
                work = deflate(work, cand);
                ++mult;
            }
            if (mult > 0) {
                found.push_back({cand, mult});
                progressed = true;
            }
            if (work.degree() == 0) break;
        }
        if (work.degree() == 0) break;
        if (!progressed) progressed = lattice_search(work, found);
        if (!progressed)
            throw IrrationalSpectrum(
                "a residual factor of degree " + std::to_string(work.degree()) +
                " has no Gaussian-rational root; supply the spectrum (--eigenvalues) or use "
                "approximate mode");
    }

    Spectrum<ExactScalar> s;
    for (auto& [lambda, mult] : found) s.entries.push_back({lambda, mult});
    std::sort(s.entries.begin(), s.entries.end(),
              [](const auto& a, const auto& b) { return lex_less(a.lambda, b.lambda); });
    return s;
}

}  // namespace adjspec
