#pragma once

#include <complex>
#include <vector>

#include <Eigen/Dense>

#include "cvneg/errors.hpp"
#include "cvneg/params.hpp"

// Truncated Fock-space linear algebra: operator construction, transpose and
// partial transpose, Lindblad evolution, spectra and trace norms. Everything
// here is dense, explicit and slow-but-sure; it serves as the brute-force
// oracle for the closed-form layers.
namespace cvneg::fock {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

// Dense operator over the truncated basis |0..N> per mode.
//
// Two-mode basis index is mode-1 major: i = n1*(N+1) + n2. This convention is
// fixed project-wide; tensor() and partial_transpose() must agree on it
// bit-exactly.
struct FockOp {
    int modes = 1;  // 1 or 2
    int cutoff = 0; // max photon number N
    Matrix mat;     // square, dimension (N+1)^modes

    Eigen::Index dim() const { return mat.rows(); }
};

// ---------------------------- basic operators -------------------------------

// a |n> = sqrt(n) |n-1>
FockOp annihilator(int cutoff);
// a^+ |n> = sqrt(n+1) |n+1>
FockOp creation(int cutoff);
FockOp number_op(int cutoff);
FockOp identity_op(int cutoff, int modes = 1);
// |j><k| on a single mode
FockOp basis_op(int cutoff, int j, int k);

// Kronecker product with mode-1-major indexing; both factors single-mode with
// equal cutoffs.
FockOp tensor(const FockOp& a, const FockOp& b);

// ------------------------- transpose operations -----------------------------

// Fock-basis transpose (no conjugation): |j><k| -> |k><j|.
FockOp transpose_full(const FockOp& op);

// Partial transpose of a two-mode operator on the chosen mode (default: the
// second). For mode 2: entry (n1,n2),(m1,m2) -> (n1,m2),(m1,n2).
FockOp partial_transpose(const FockOp& op, int mode = 2);

// --------------------------- Gaussian unitaries -----------------------------

// Displacement D(alpha) = e^{-|alpha|^2/2} e^{alpha a^+} e^{-alpha* a}.
// The truncated matrix equals the projection of the exact operator: the
// lowering series stays inside the basis and the raising series is projected
// afterwards. Errors with cutoff_too_small if the displaced-vacuum population
// at level N exceeds tail_tol.
FockOp displacement_op(Complex alpha, int cutoff, double tail_tol = 1e-8);

// Single-mode squeezer S1(xi), xi = r e^{i theta}, via
//   sech^{1/2} r  e^{(e^{i th} tanh r / 2) a^+2}  (sech r)^{a^+a}
//                 e^{-(e^{-i th} tanh r / 2) a^2}.
FockOp squeeze1_op(Complex xi, int cutoff, double tail_tol = 1e-8);

// Two-mode squeezer S(xi), xi = r e^{i phi}, via
//   sech r  e^{e^{i phi} tanh r a^+b^+}  (sech r)^{a^+a + b^+b}
//           e^{-e^{-i phi} tanh r ab}.
FockOp squeeze2_op(Complex xi, int cutoff, double tail_tol = 1e-8);

// Beam splitter B(theta, phi) = exp{theta (a^+b e^{i phi} - a b^+ e^{-i phi})}.
// Photon-number conserving; built exactly per total-photon sector, so the
// result equals the projection of the exact operator on every entry.
FockOp beam_splitter_op(double theta, double phi, int cutoff);

// Two-mode squeezed vacuum density operator (phi = 0):
// sech^2 r sum_{n,m} tanh^{n+m} r |nn><mm|.
FockOp tmsv_rho(double r, int cutoff, double tail_tol = 1e-8);

// Normally ordered Gaussian density operator
//   4 O0 : exp{2 O1 a^+a + 2 O2 b^+b + 2 O3 (ab + a^+b^+)} :
// realized as 4 O0 e^{2 O3 a^+b^+} (1+2 O1)^{a^+a} (1+2 O2)^{b^+b} e^{2 O3 ab},
// which is exact and banded (inside :: all factors commute and
// :e^{c a^+a}: = (1+c)^{a^+a}).
FockOp gaussian_rho_op(const OmegaParams& omega, int cutoff, double tail_tol = 1e-8);

// ---------------------------- channel evolution -----------------------------

// Fixed-step classical 4th-order integration of
//   d rho/dt = sum_j g_j (2 a_j^+ rho a_j - a_j a_j^+ rho - rho a_j a_j^+)
//            + sum_j k_j (2 a_j rho a_j^+ - a_j^+a_j rho - rho a_j^+a_j).
// rho0 must be two-mode, Hermitian and trace one. The state is re-hermitized
// each step; final trace drift above trace_tol raises step_size_too_large.
FockOp lindblad_evolve(const FockOp& rho0, const ChannelParams& ch, int steps,
                       double trace_tol = 1e-8);

// ------------------------------- spectra ------------------------------------

// Full real spectrum, ascending. Requires hermiticity within herm_tol
// (max |op - op^+| entry). Exact-zero off-block entries are exploited by
// splitting into connected components before the dense solve.
std::vector<double> eig_hermitian(const FockOp& op, double herm_tol = 1e-10);

// Eigenvalues (ascending) plus the matching unitary of column eigenvectors.
std::pair<Eigen::VectorXd, Matrix> eig_hermitian_full(const FockOp& op,
                                                      double herm_tol = 1e-10);

// sum_i |lambda_i| over the Hermitian spectrum.
double trace_norm(const FockOp& op);

// log2 || rho^{T_2} ||, clamped at 0 (the trace norm is >= 1 analytically;
// sub-1 values are truncation noise).
double log_negativity_fock(const FockOp& rho);

// --------------------------- phase-space probes -----------------------------

// chi(alpha) = tr[rho D(alpha)] (single mode).
Complex char_fn_point(const FockOp& rho, Complex alpha, double tail_tol = 1e-8);
// chi(alpha1, alpha2) = tr[rho D(alpha1) x D(alpha2)] (two modes).
Complex char_fn_point(const FockOp& rho, Complex alpha1, Complex alpha2,
                      double tail_tol = 1e-8);

// W(alpha) = tr[rho Delta(alpha)] with Delta(alpha) = (1/pi) D(alpha) Pi D(-alpha),
// Pi the photon-number parity. Raises numerical_inconsistency if the imaginary
// residue exceeds imag_tol; the real part is returned.
double wigner_point_fock(const FockOp& rho, Complex alpha, double imag_tol = 1e-9,
                         double tail_tol = 1e-8);
double wigner_point_fock(const FockOp& rho, Complex alpha1, Complex alpha2,
                         double imag_tol = 1e-9, double tail_tol = 1e-8);

// Symmetrized second moments of Q = a + a^+, P = (a - a^+)/i, ordering
// (Q1, P1[, Q2, P2]). The state must have zero mean quadratures within
// mean_tol, otherwise unsupported_state is raised.
Eigen::MatrixXd covariance_fock(const FockOp& rho, double mean_tol = 1e-8);

} // namespace cvneg::fock
