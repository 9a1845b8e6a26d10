#pragma once

#include <complex>

#include <Eigen/Dense>

#include "cvneg/errors.hpp"
#include "cvneg/params.hpp"

// Analytic Gaussian-state layer: Wigner/characteristic function evaluation,
// transpose reflections, covariance transforms, and the closed-form laser
// channel parameters.
//
// Quadrature convention, fixed project-wide: Q = a + a^+, P = (a - a^+)/i,
// so the vacuum covariance is the identity. Phase-space points use
// alpha = (q + ip)/sqrt(2); a GaussianState covariance V maps to Wigner
// variables z = (q1,p1[,q2,p2]) = sqrt(2)(Re a1, Im a1, ...) with
//   W(z) = exp(-z V^{-1} z^T) / (pi^modes sqrt(det V)).
// For zero-mean states the characteristic function obeys
//   tr[rho D(a1) x D(a2)] = chi(xi) at xi = (Re a1, Im a1, Re a2, Im a2).
// These conversion constants were frozen against the Fock oracle.
namespace cvneg::phase_space {

using Complex = std::complex<double>;

// Mean vector and covariance of a Gaussian state, ordering (Q1,P1[,Q2,P2]).
struct GaussianState {
    int modes = 1;
    Eigen::VectorXd mean; // length 2*modes
    Eigen::MatrixXd cov;  // 2*modes x 2*modes, symmetric

    void validate(double sym_tol = 1e-12) const;
};

// Initial two-mode squeezed vacuum Wigner function
//   (1/pi^2) exp{-2(|a1|^2+|a2|^2) cosh 2r + 2(a1 a2 + a1* a2*) sinh 2r}.
double tmsv_wigner_point(double r, Complex a1, Complex a2);

// Additive-noise factor of the gain/loss channel:
//   A = (kappa+g)/(kappa-g) (1 - e^{-2(kappa-g)t}),
// with the series limit 2(kappa+g)t at kappa == g (removable singularity).
double channel_A(double kappa, double g, double t);

// Amplitude decay factor e^{-(kappa-g)t}.
double channel_decay(double kappa, double g, double t);

// Evolved-Wigner exponent coefficients from the per-mode noise/decay factors:
//   lambda1 = (A2 + E2^2 cosh 2r)/Gamma,  lambda2 = (A1 + E1^2 cosh 2r)/Gamma,
//   lambda12 = E1 E2 sinh 2r / Gamma,
//   Gamma = (A1 E2^2 + A2 E1^2) cosh 2r + A1 A2 + E1^2 E2^2.
WignerParams lambda_from_factors(double r, double A1, double E1, double A2, double E2);
WignerParams lambda_params(double r, const ChannelParams& ch);

// W(a1,a2) = 1/(pi^2 Gamma) exp{-2 l1 |a1|^2 - 2 l2 |a2|^2
//                                + 2 l12 (a1* a2* + a1 a2)}.
double evolved_wigner_point(const WignerParams& p, Complex a1, Complex a2);

// Direct Gauss-Hermite quadrature of the channel's Gaussian convolution kernel
// applied to the TMSV Wigner function; the independent route to
// evolved_wigner_point. Quadrature order grows until two successive orders
// agree to 1e-8. t == 0 returns the initial Wigner function (delta kernel).
double convolve_wigner(double r, const ChannelParams& ch, Complex a1, Complex a2);

// Covariance of the partially transposed state: conjugation by
// diag(1,1,1,-1) (negates the P2 row/column off-diagonals).
Eigen::Matrix4d covariance_pt(const Eigen::Matrix4d& V, double sym_tol = 1e-10);

// Covariance of the transposed single-mode state: conjugation by diag(1,-1).
Eigen::Matrix2d covariance_transpose_single(const Eigen::Matrix2d& V,
                                            double sym_tol = 1e-10);

// chi(xi) = exp[-1/2 xi Om V Om^T xi^T + i mean . xi], xi = (q1,p1[,q2,p2]),
// Om the per-mode symplectic form [[0,1],[-1,0]].
Complex gaussian_char_fn(const GaussianState& state, const Eigen::VectorXd& xi);

// Zero-mean TMSV covariance: diagonal blocks cosh 2r I2, off-diagonal block
// diag(sinh 2r, -sinh 2r).
GaussianState tmsv_covariance(double r);

// Zero-mean Gaussian state whose Wigner function matches evolved_wigner_point:
//   V = Gamma [[l2 I2, l12 Z], [l12 Z, l1 I2]], Z = diag(1,-1).
GaussianState covariance_from_lambda(const WignerParams& p);

// Wigner function of a zero-mean GaussianState at a phase-space point.
double gaussian_wigner_point(const GaussianState& state, Complex a1);
double gaussian_wigner_point(const GaussianState& state, Complex a1, Complex a2);

} // namespace cvneg::phase_space
