#pragma once

#include "cvneg/errors.hpp"
#include "cvneg/params.hpp"

// Closed-form logarithmic negativity of the two-mode squeezed vacuum after a
// gain/loss channel: Wigner parameters -> Omega coefficients -> (w,u,v) ->
// (Lambda+, Lambda-, Delta) -> trace norm 4 Omega0 / Delta -> E_N, plus the
// special cases and the disentanglement threshold time.
namespace cvneg::negativity {

// Entries of the 2x2 matrix M governing the square of the partially
// transposed density operator: M = [[w, v], [v, u]] with
//   w = (1+2 O1)^2 + (2 O3)^2,
//   u = (1+2 O2)^2 + (2 O3)^2,
//   v = 4 O3 (1 + O1 + O2).
struct MParams {
    double w = 0.0;
    double u = 0.0;
    double v = 0.0;
};

// Eigenvalues of sqrt(M) and Delta = det(I - sqrt(M)).
struct SpectralSplit {
    double lambda_plus = 0.0;
    double lambda_minus = 0.0;
    double delta = 1.0;
};

struct NegativityReport {
    double en = 0.0;           // log negativity in bits, clamped at 0
    double trace_norm = 1.0;   // 4 Omega0 / Delta
    double delta = 1.0;
    double lambda_plus = 0.0;
    double lambda_minus = 0.0;
    bool entangled = false;    // 4 Omega0 > Delta
    bool valid = true;         // sqrt(M) branch validity: det M >= 0, Lambda+ < 1
    // inputs echoed
    double r = 0.0;
    ChannelParams channel;
};

// Rational map from the evolved-Wigner exponent to the normally ordered
// density-operator coefficients, with common denominator
// (l2+1)(l1+1) - l12^2:
//   O0 = (1/Gamma)/den, O1 = (l12^2 - l1 - l1 l2)/den,
//   O2 = (l12^2 - l2 - l1 l2)/den, O3 = l12/den.
OmegaParams omega_from_lambda(const WignerParams& p);

MParams m_params(const OmegaParams& o);

// Lambda_pm = sqrt((w + u +- sqrt(4 v^2 + (w-u)^2))/2),
// Delta = 1 + sqrt(wu - v^2) - Lambda+ - Lambda-.
// Radicands within -1e-12 of zero are clamped; beyond that the MParams
// invariant wu - v^2 >= 0 is violated and invariant_violation is raised.
SpectralSplit lambdas_delta(const MParams& m);

// Full pipeline for squeezing r through the channel.
NegativityReport en_analytic(double r, const ChannelParams& ch);

// Bi-symmetric photon loss with transmission T = e^{-2 kappa t}:
//   E_N = log2[1 / (1 - T (1 - e^{-2r}))], clamped at 0.
double en_photon_loss(double r, double T);

// Loss on mode 1 only, transmission T: w = T tanh^2 r,
// v = sqrt(T) R tanh^3 r, u = (R^2 tanh^2 r + T) tanh^2 r with R = 1 - T,
// fed through lambdas_delta; Omega0 comes from the general pipeline with
// (kappa2 = 0, g = 0).
double en_single_side_loss(double r, double T);

// Disentanglement threshold of the bi-symmetric gain+loss channel:
//   t_c = 1/(2(kappa-g)) ln[(g + kappa tanh r)/(g (1 + tanh r))].
// Requires r > 0 and kappa > g; g == 0 raises no_threshold (E_N stays
// positive for all finite times under pure loss).
double threshold_time(double r, double kappa, double g);

} // namespace cvneg::negativity
