#pragma once

#include <vector>

#include "adjspec/matrix.hpp"
#include "adjspec/poly.hpp"

// Regression fixtures: a 3x3 hermitian matrix with eigenvalues {0, 0, 3} and a
// defective 4x4 matrix with a length-2 Jordan chain at each of +1 and -1, together
// with their known adjugate polynomials, projectors and nilpotent parts.
namespace fixtures {

using adjspec::ApproxScalar;
using adjspec::ExactScalar;
using adjspec::Matrix;

inline Matrix<ExactScalar> exact_matrix(const std::vector<std::vector<long>>& rows) {
    const int n = static_cast<int>(rows.size());
    Matrix<ExactScalar> m(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m(i, j) = ExactScalar(rows[i][j]);
    return m;
}

/// Entries num/den with a shared denominator.
inline Matrix<ExactScalar> exact_matrix_over(const std::vector<std::vector<long>>& num,
                                             long den) {
    const int n = static_cast<int>(num.size());
    Matrix<ExactScalar> m(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m(i, j) = ExactScalar(num[i][j], den);
    return m;
}

inline Matrix<ExactScalar> hermitian3() {
    return exact_matrix({{1, -1, 1}, {-1, 1, -1}, {1, -1, 1}});
}

// Projector onto the two-dimensional kernel (eigenvalue 0).
inline Matrix<ExactScalar> hermitian3_p0() {
    return exact_matrix_over({{2, 1, -1}, {1, 2, 1}, {-1, 1, 2}}, 3);
}

// Rank-one projector for the simple eigenvalue 3.
inline Matrix<ExactScalar> hermitian3_p3() {
    return exact_matrix_over({{1, -1, 1}, {-1, 1, -1}, {1, -1, 1}}, 3);
}

inline Matrix<ExactScalar> defective4() {
    return exact_matrix({{0, 1, 0, 0}, {11, 6, -4, -4}, {22, 15, -8, -9}, {-3, -2, 1, 2}});
}

inline Matrix<ExactScalar> defective4_p1() {
    return exact_matrix({{3, 2, -1, -1}, {3, 2, -1, -1}, {12, 8, -4, -5}, {0, 0, 0, 1}});
}

inline Matrix<ExactScalar> defective4_pm1() {
    return exact_matrix({{-2, -2, 1, 1}, {-3, -1, 1, 1}, {-12, -8, 5, 5}, {0, 0, 0, 0}});
}

inline Matrix<ExactScalar> defective4_n1() {
    return exact_matrix({{0, 0, 0, 0}, {0, 0, 0, 0}, {3, 2, -1, -1}, {-3, -2, 1, 1}});
}

inline Matrix<ExactScalar> defective4_nm1() {
    return exact_matrix({{-5, -3, 2, 2}, {5, 3, -2, -2}, {-5, -3, 2, 2}, {0, 0, 0, 0}});
}

// Adjugate polynomial coefficients of the 4x4 fixture: B(z) = z^3 I + z^2 C1 + z C2 + C3.
inline Matrix<ExactScalar> defective4_c1() { return defective4(); }

inline Matrix<ExactScalar> defective4_c2() {
    return exact_matrix({{9, 6, -4, -4}, {-10, -7, 4, 4}, {16, 10, -7, -6}, {-6, -4, 2, 1}});
}

inline Matrix<ExactScalar> defective4_c3() {
    return exact_matrix({{-10, -7, 4, 4}, {-1, 0, 0, 0}, {-26, -17, 10, 11}, {-3, -2, 1, 0}});
}

// exp(A) for the 4x4 fixture in closed form: e*P1 + e*N1 + (1/e)*Pm1 + (1/e)*Nm1.
inline Matrix<ApproxScalar> defective4_exp() {
    const double e = std::exp(1.0);
    const double ei = 1.0 / e;
    std::vector<std::vector<double>> v = {
        {3 * e - 7 * ei, 2 * e - 5 * ei, 3 * ei - e, 3 * ei - e},
        {3 * e + 2 * ei, 2 * e + 2 * ei, -(e + ei), -(e + ei)},
        {15 * e - 17 * ei, 10 * e - 11 * ei, 7 * ei - 5 * e, 7 * ei - 6 * e},
        {-3 * e, -2 * e, e, 2 * e}};
    Matrix<ApproxScalar> m(4);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) m(i, j) = ApproxScalar(v[i][j], 0.0);
    return m;
}

}  // namespace fixtures
