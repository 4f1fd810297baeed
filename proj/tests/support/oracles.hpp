#pragma once

#include <algorithm>
#include <random>
#include <vector>

#include "adjspec/matrix.hpp"
#include "adjspec/poly.hpp"
#include "adjspec/roots.hpp"

// Test-side oracles, deliberately independent of the library code paths they check:
// cofactor-expansion determinant, scaling-and-squaring matrix exponential, and
// generators for planted-structure matrices.
namespace oracles {

using adjspec::ApproxScalar;
using adjspec::ExactScalar;
using adjspec::Matrix;
using adjspec::Spectrum;

// Determinant by cofactor expansion along the first row; O(n!) but independent of
// any elimination code in the library.
template <class S>
S det_cofactor(const Matrix<S>& m) {
    const int n = m.n();
    if (n == 1) return m(0, 0);
    S acc = adjspec::ScalarOps<S>::zero();
    for (int j = 0; j < n; ++j) {
        Matrix<S> minor(n - 1);
        for (int r = 1; r < n; ++r) {
            int cc = 0;
            for (int c = 0; c < n; ++c) {
                if (c == j) continue;
                minor(r - 1, cc++) = m(r, c);
            }
        }
        S term = m(0, j) * det_cofactor(minor);
        if (j % 2 == 1) term = -term;
        acc += term;
    }
    return acc;
}

// exp(A) by scaling and squaring with a degree-24 Taylor tail on the scaled matrix.
inline Matrix<ApproxScalar> expm_oracle(const Matrix<ApproxScalar>& a) {
    const int n = a.n();
    double norm = a.inf_norm();
    int s = 0;
    while (norm > 0.5) {
        norm /= 2.0;
        ++s;
    }
    Matrix<ApproxScalar> t = a;
    double scale = std::ldexp(1.0, -s);
    t = ApproxScalar(scale, 0.0) * t;
    Matrix<ApproxScalar> sum = Matrix<ApproxScalar>::identity(n);
    Matrix<ApproxScalar> term = Matrix<ApproxScalar>::identity(n);
    for (int k = 1; k <= 24; ++k) {
        term = ApproxScalar(1.0 / k, 0.0) * (term * t);
        sum += term;
    }
    for (int i = 0; i < s; ++i) sum = sum * sum;
    return sum;
}

// ---------------------------------------------------------------------------
// Planted-structure generators (all deterministic under the caller's engine).
// ---------------------------------------------------------------------------

struct PlantedJordan {
    Matrix<ExactScalar> a;
    Spectrum<ExactScalar> spectrum;                      // sorted by (re, im)
    std::vector<std::vector<int>> block_sizes;           // per spectrum entry, descending
};

inline std::vector<int> random_partition(std::mt19937_64& rng, int total) {
    std::vector<int> parts;
    int left = total;
    while (left > 0) {
        int p = 1 + static_cast<int>(rng() % static_cast<unsigned>(left));
        parts.push_back(p);
        left -= p;
    }
    std::sort(parts.rbegin(), parts.rend());
    return parts;
}

inline Matrix<ExactScalar> random_unimodular(std::mt19937_64& rng, int n, int ops) {
    Matrix<ExactScalar> v = Matrix<ExactScalar>::identity(n);
    for (int t = 0; t < ops; ++t) {
        int i = static_cast<int>(rng() % n);
        int j = static_cast<int>(rng() % n);
        if (i == j) continue;
        long c = static_cast<long>(rng() % 4) - 2;  // -2..1
        if (c == 0) c = 1;
        for (int k = 0; k < n; ++k) v(i, k) += ExactScalar(c) * v(j, k);
    }
    return v;
}

/**
 * A = V J V^{-1} with a planted Jordan matrix J (distinct small eigenvalues,
 * random block partition per eigenvalue) and a random unimodular integer V.
 * An occasional eigenvalue is a Gaussian integer.
 */
inline PlantedJordan planted_jordan(std::mt19937_64& rng, int max_n = 6,
                                    bool allow_complex = true) {
    const int n = 2 + static_cast<int>(rng() % static_cast<unsigned>(max_n - 1));
    // Distinct eigenvalues with a random composition of n.
    std::vector<ExactScalar> pool;
    for (long v = -4; v <= 4; ++v) pool.push_back(ExactScalar(v));
    if (allow_complex) {
        pool.push_back(ExactScalar(mpq_class(0), mpq_class(1)));    // i
        pool.push_back(ExactScalar(mpq_class(0), mpq_class(-1)));   // -i
        pool.push_back(ExactScalar(mpq_class(1), mpq_class(1)));    // 1+i
        pool.push_back(ExactScalar(mpq_class(-2), mpq_class(1)));   // -2+i
    }
    std::shuffle(pool.begin(), pool.end(), rng);

    std::vector<int> mults = random_partition(rng, n);
    PlantedJordan out;
    std::vector<std::pair<ExactScalar, int>> entries;
    for (size_t i = 0; i < mults.size(); ++i) entries.push_back({pool[i], mults[i]});
    std::sort(entries.begin(), entries.end(),
              [](const auto& a, const auto& b) { return lex_less(a.first, b.first); });

    Matrix<ExactScalar> jmat(n);
    int pos = 0;
    for (const auto& [lambda, mult] : entries) {
        out.spectrum.entries.push_back({lambda, mult});
        std::vector<int> blocks = random_partition(rng, mult);
        out.block_sizes.push_back(blocks);
        for (int b : blocks) {
            for (int k = 0; k < b; ++k) {
                jmat(pos + k, pos + k) = lambda;
                if (k + 1 < b) jmat(pos + k, pos + k + 1) = ExactScalar(1);
            }
            pos += b;
        }
    }

    Matrix<ExactScalar> v = random_unimodular(rng, n, 2 * n + 3);
    Matrix<ExactScalar> vinv = adjspec::mat_solve(v, Matrix<ExactScalar>::identity(n));
    out.a = v * jmat * vinv;
    return out;
}

struct PlantedSymmetric {
    Matrix<ExactScalar> a;
    Spectrum<ExactScalar> spectrum;  // sorted by (re, im)
};

/**
 * Exact symmetric matrix with a planted integer spectrum: exact Gram-Schmidt on
 * random integer vectors gives an orthogonal rational family {v_k}; groups of the
 * rank-one projectors v v^T / <v,v> are scaled by distinct integer eigenvalues.
 */
inline PlantedSymmetric planted_symmetric(std::mt19937_64& rng, int max_n = 5) {
    const int n = 2 + static_cast<int>(rng() % static_cast<unsigned>(max_n - 1));
    std::vector<std::vector<ExactScalar>> basis;
    while (static_cast<int>(basis.size()) < n) {
        std::vector<ExactScalar> cand(n);
        for (int i = 0; i < n; ++i)
            cand[i] = ExactScalar(static_cast<long>(rng() % 7) - 3);
        for (const auto& v : basis) {
            ExactScalar dot(0), vv(0);
            for (int i = 0; i < n; ++i) {
                dot += cand[i] * v[i];
                vv += v[i] * v[i];
            }
            ExactScalar f = dot / vv;
            for (int i = 0; i < n; ++i) cand[i] -= f * v[i];
        }
        bool zero = true;
        for (const auto& x : cand) zero = zero && x.is_zero();
        if (!zero) basis.push_back(cand);
    }

    std::vector<int> mults = random_partition(rng, n);
    std::vector<long> lambda_pool = {-5, -3, -2, -1, 0, 1, 2, 3, 4, 6};
    std::shuffle(lambda_pool.begin(), lambda_pool.end(), rng);

    PlantedSymmetric out;
    out.a = Matrix<ExactScalar>(n);
    std::vector<std::pair<ExactScalar, int>> entries;
    int used = 0;
    for (size_t g = 0; g < mults.size(); ++g) {
        ExactScalar lambda(lambda_pool[g]);
        entries.push_back({lambda, mults[g]});
        for (int k = 0; k < mults[g]; ++k) {
            const auto& v = basis[used++];
            ExactScalar vv(0);
            for (int i = 0; i < n; ++i) vv += v[i] * v[i];
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) out.a(i, j) += lambda * v[i] * v[j] / vv;
        }
    }
    std::sort(entries.begin(), entries.end(),
              [](const auto& a, const auto& b) { return lex_less(a.first, b.first); });
    for (const auto& [lambda, mult] : entries) out.spectrum.entries.push_back({lambda, mult});
    return out;
}

/**
 * Random real diagonalizable double matrix A = Q D Q^T with distinct eigenvalues
 * separated by at least `gap`, Q orthogonal (product of Householder reflections).
 */
struct PlantedDiagonalizable {
    Matrix<ApproxScalar> a;
    std::vector<double> eigenvalues;  // ascending
};

inline PlantedDiagonalizable planted_diagonalizable(std::mt19937_64& rng, int n,
                                                    double gap = 0.5) {
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    PlantedDiagonalizable out;
    double lo = -3.0 * unit(rng);
    double acc = lo;
    for (int i = 0; i < n; ++i) {
        out.eigenvalues.push_back(acc);
        acc += gap + 1.5 * unit(rng);
    }

    // Orthogonal Q from two Householder reflections.
    Matrix<ApproxScalar> q = Matrix<ApproxScalar>::identity(n);
    for (int rep = 0; rep < 2; ++rep) {
        std::vector<double> w(n);
        double norm2 = 0.0;
        for (int i = 0; i < n; ++i) {
            w[i] = 2.0 * unit(rng) - 1.0;
            norm2 += w[i] * w[i];
        }
        Matrix<ApproxScalar> h = Matrix<ApproxScalar>::identity(n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                h(i, j) -= ApproxScalar(2.0 * w[i] * w[j] / norm2, 0.0);
        q = q * h;
    }
    Matrix<ApproxScalar> d(n);
    for (int i = 0; i < n; ++i) d(i, i) = ApproxScalar(out.eigenvalues[i], 0.0);
    out.a = q * d * q.transpose();
    return out;
}

}  // namespace oracles
