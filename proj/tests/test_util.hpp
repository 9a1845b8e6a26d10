#pragma once

#include <complex>
#include <random>

#include <Eigen/Dense>
#include <unsupported/Eigen/MatrixFunctions>

#include "cvneg/fock.hpp"

// Shared helpers for the unit suites. The matrix-exponential oracle here is
// deliberately independent of the factorized constructions it checks: it
// exponentiates the truncated generator directly and is trusted only on a
// sub-block away from the truncation boundary.
namespace testutil {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;

inline double max_abs(const Matrix& m) { return m.cwiseAbs().maxCoeff(); }

inline double max_abs_diff(const Matrix& a, const Matrix& b) {
    return (a - b).cwiseAbs().maxCoeff();
}

// Truncated-generator exponential; exact only away from the cutoff boundary.
inline Matrix expm(const Matrix& gen) { return gen.exp(); }

// Top-left block of a single-mode operator (photon numbers < k).
inline Matrix corner(const Matrix& m, int k) { return m.topLeftCorner(k, k); }

// Sub-block of a two-mode operator with all four photon numbers < k.
inline Matrix corner2(const Matrix& m, int cutoff, int k) {
    const int d = cutoff + 1;
    Matrix out(k * k, k * k);
    for (int n1 = 0; n1 < k; ++n1)
        for (int n2 = 0; n2 < k; ++n2)
            for (int m1 = 0; m1 < k; ++m1)
                for (int m2 = 0; m2 < k; ++m2)
                    out(n1 * k + n2, m1 * k + m2) = m(n1 * d + n2, m1 * d + m2);
    return out;
}

inline double urand(std::mt19937_64& rng, double lo = -1.0, double hi = 1.0) {
    return std::uniform_real_distribution<double>(lo, hi)(rng);
}

inline Complex crand(std::mt19937_64& rng, double scale = 1.0) {
    return scale * Complex(urand(rng), urand(rng));
}

// Random single-mode density operator rho = G G^+ / tr(G G^+).
inline cvneg::fock::FockOp random_density(std::mt19937_64& rng, int cutoff) {
    const int d = cutoff + 1;
    Matrix g(d, d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) g(i, j) = crand(rng);
    Matrix rho = g * g.adjoint();
    rho /= rho.trace().real();
    return {1, cutoff, rho};
}

// Random Hermitian matrix with entries of order 1.
inline Matrix random_hermitian(std::mt19937_64& rng, int dim) {
    Matrix g(dim, dim);
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) g(i, j) = crand(rng);
    return Matrix(0.5 * (g + g.adjoint()));
}

} // namespace testutil
