#pragma once

#include <cmath>

#include "adjspec/matrix.hpp"
#include "adjspec/roots.hpp"

namespace adjspec {

/**
 * A circular contour for resolvent quadrature. The circle must enclose exactly one
 * eigenvalue and keep clear of the rest; callers are expected to derive it from a
 * spectrum (see default_contour).
 */
struct ContourSpec {
    ApproxScalar center;
    double radius = 1.0;
    int nodes = 64;
};

/**
 * Trapezoidal Riesz-projector quadrature on the circle:
 *   (radius/M) * sum_k e^{i theta_k} (z_k - A)^{-1},  z_k = center + radius e^{i theta_k}.
 * Exponentially accurate in M for analytic integrands. Throws SingularMatrix when a
 * node hits the spectrum.
 */
inline Matrix<ApproxScalar> riesz_quadrature(const Matrix<ApproxScalar>& a,
                                             const ContourSpec& spec) {
    const int n = a.n();
    const Matrix<ApproxScalar> id = Matrix<ApproxScalar>::identity(n);
    Matrix<ApproxScalar> acc(n);
    for (int k = 0; k < spec.nodes; ++k) {
        double theta = 2.0 * M_PI * k / spec.nodes;
        ApproxScalar phase = std::polar(1.0, theta);
        ApproxScalar z = spec.center + spec.radius * phase;
        Matrix<ApproxScalar> resolvent = mat_solve(z * id - a, id);
        acc += phase * resolvent;
    }
    return ApproxScalar(spec.radius / spec.nodes, 0.0) * acc;
}

/**
 * Moment quadrature with f(z) = (z - center)^l: approximates N_i^l P_i when the
 * center is the enclosed eigenvalue. l = 0 reduces to riesz_quadrature.
 */
inline Matrix<ApproxScalar> moment_quadrature(const Matrix<ApproxScalar>& a,
                                              const ContourSpec& spec, int l) {
    const int n = a.n();
    const Matrix<ApproxScalar> id = Matrix<ApproxScalar>::identity(n);
    Matrix<ApproxScalar> acc(n);
    for (int k = 0; k < spec.nodes; ++k) {
        double theta = 2.0 * M_PI * k / spec.nodes;
        ApproxScalar phase = std::polar(1.0, theta);
        ApproxScalar z = spec.center + spec.radius * phase;
        ApproxScalar weight = phase * std::pow(spec.radius * phase, l);
        Matrix<ApproxScalar> resolvent = mat_solve(z * id - a, id);
        acc += weight * resolvent;
    }
    return ApproxScalar(spec.radius / spec.nodes, 0.0) * acc;
}

/**
 * Circle centered on eigenvalue i with radius half the distance to the nearest
 * other eigenvalue (radius 1 when the spectrum is a single point).
 */
inline ContourSpec default_contour(const Spectrum<ApproxScalar>& spectrum, int i,
                                   int nodes = 64) {
    ContourSpec spec;
    spec.center = spectrum.entries[i].lambda;
    spec.nodes = nodes;
    double dist = std::numeric_limits<double>::infinity();
    for (int j = 0; j < spectrum.size(); ++j)
        if (j != i) dist = std::min(dist, std::abs(spectrum.entries[j].lambda - spec.center));
    spec.radius = std::isfinite(dist) ? dist / 2.0 : 1.0;
    return spec;
}

}  // namespace adjspec
