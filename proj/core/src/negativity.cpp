#include "cvneg/negativity.hpp"

#include <algorithm>
#include <cmath>

#include "cvneg/phase_space.hpp"

namespace cvneg::negativity {

namespace {

double clamp_radicand(double x, const char* who) {
    if (x < -1e-12)
        throw invariant_violation(std::string(who) + ": negative radicand");
    return std::max(0.0, x);
}

} // namespace

OmegaParams omega_from_lambda(const WignerParams& p) {
    p.validate();
    const double l1 = p.lambda1, l2 = p.lambda2, l12 = p.lambda12;
    const double den = (l2 + 1.0) * (l1 + 1.0) - l12 * l12;
    if (!(den > 0.0))
        throw numerical_inconsistency("omega_from_lambda: denominator must be > 0");
    OmegaParams o;
    o.omega0 = (1.0 / p.gamma) / den;
    o.omega1 = (l12 * l12 - l1 - l1 * l2) / den;
    o.omega2 = (l12 * l12 - l2 - l1 * l2) / den;
    o.omega3 = l12 / den;
    o.validate();
    return o;
}

MParams m_params(const OmegaParams& o) {
    o.validate();
    const double x1 = 1.0 + 2.0 * o.omega1;
    const double x2 = 1.0 + 2.0 * o.omega2;
    const double y = 2.0 * o.omega3;
    MParams m;
    m.w = x1 * x1 + y * y;
    m.u = x2 * x2 + y * y;
    m.v = 2.0 * y * (1.0 + o.omega1 + o.omega2);
    if (m.w * m.u - m.v * m.v < -1e-12)
        throw invariant_violation("m_params: det M = wu - v^2 must be >= 0");
    return m;
}

SpectralSplit lambdas_delta(const MParams& m) {
    const double split = std::sqrt(4.0 * m.v * m.v + (m.w - m.u) * (m.w - m.u));
    SpectralSplit s;
    s.lambda_plus = std::sqrt(clamp_radicand(0.5 * (m.w + m.u + split), "lambdas_delta"));
    s.lambda_minus = std::sqrt(clamp_radicand(0.5 * (m.w + m.u - split), "lambdas_delta"));
    const double det_m = clamp_radicand(m.w * m.u - m.v * m.v, "lambdas_delta");
    s.delta = 1.0 + std::sqrt(det_m) - s.lambda_plus - s.lambda_minus;
    return s;
}

namespace {

// Same spectral split computed from the Omega coefficients directly. With
// x_i = 1 + 2 O_i, y = 2 O3:
//   4 v^2 + (w-u)^2 = (x1+x2)^2 (4 y^2 + (x1-x2)^2),
//   wu - v^2 = (x1 x2 - y^2)^2,
// so Lambda- = |x1 x2 - y^2| / Lambda+ and Delta = (1-L+)(1-L-) evaluate
// without the cancellation that makes the (w,u,v) route lose half the digits
// near the disentanglement threshold.
SpectralSplit lambdas_delta_stable(const OmegaParams& o) {
    const double x1 = 1.0 + 2.0 * o.omega1;
    const double x2 = 1.0 + 2.0 * o.omega2;
    const double y = 2.0 * o.omega3;
    const double split = std::abs(x1 + x2) * std::hypot(2.0 * y, x1 - x2);
    const double w_plus_u = x1 * x1 + x2 * x2 + 2.0 * y * y;
    SpectralSplit s;
    s.lambda_plus = std::sqrt(0.5 * (w_plus_u + split));
    const double root_det = std::abs(x1 * x2 - y * y);
    s.lambda_minus = s.lambda_plus > 0.0 ? root_det / s.lambda_plus : 0.0;
    s.delta = (1.0 - s.lambda_plus) * (1.0 - s.lambda_minus);
    return s;
}

} // namespace

namespace {

NegativityReport report_from(const OmegaParams& o, const MParams& m,
                             const SpectralSplit& s, double r,
                             const ChannelParams& ch) {
    if (!(s.delta > 0.0))
        throw numerical_inconsistency(
            "en_analytic: Delta <= 0, outside the closed-form validity regime");
    NegativityReport rep;
    rep.trace_norm = 4.0 * o.omega0 / s.delta;
    // Past the disentanglement threshold the closed form evaluates to a trace
    // norm of exactly 1; a relative guard keeps rounding noise from flipping
    // the flag there.
    rep.entangled = rep.trace_norm > 1.0 + 1e-12;
    rep.en = rep.entangled ? std::log2(rep.trace_norm) : 0.0;
    rep.delta = s.delta;
    rep.lambda_plus = s.lambda_plus;
    rep.lambda_minus = s.lambda_minus;
    rep.valid = s.lambda_plus < 1.0 && m.w * m.u - m.v * m.v >= -1e-12;
    rep.r = r;
    rep.channel = ch;
    return rep;
}

} // namespace

NegativityReport en_analytic(double r, const ChannelParams& ch) {
    if (!std::isfinite(r) || r < 0.0)
        throw std::invalid_argument("en_analytic: r must be finite and >= 0");
    const WignerParams p = phase_space::lambda_params(r, ch);
    const OmegaParams o = omega_from_lambda(p);
    const MParams m = m_params(o);
    return report_from(o, m, lambdas_delta_stable(o), r, ch);
}

double en_photon_loss(double r, double T) {
    if (!std::isfinite(r) || r < 0.0)
        throw std::invalid_argument("en_photon_loss: r must be finite and >= 0");
    if (!std::isfinite(T) || T < 0.0 || T > 1.0)
        throw std::invalid_argument("en_photon_loss: T must be in [0, 1]");
    const double x = 1.0 - T * (1.0 - std::exp(-2.0 * r));
    return std::max(0.0, -std::log2(x));
}

double en_single_side_loss(double r, double T) {
    if (!std::isfinite(r) || r < 0.0)
        throw std::invalid_argument("en_single_side_loss: r must be finite and >= 0");
    if (!std::isfinite(T) || T < 0.0 || T > 1.0)
        throw std::invalid_argument("en_single_side_loss: T must be in [0, 1]");
    const double th = std::tanh(r);
    const double R = 1.0 - T;
    MParams m;
    m.w = T * th * th;
    m.v = std::sqrt(T) * R * th * th * th;
    m.u = (R * R * th * th + T) * th * th;
    const SpectralSplit s = lambdas_delta(m);
    // Omega0 from the general pipeline with loss on mode 1 only
    const WignerParams p = phase_space::lambda_from_factors(r, 1.0 - T, std::sqrt(T),
                                                            0.0, 1.0);
    const OmegaParams o = omega_from_lambda(p);
    if (!(s.delta > 0.0))
        throw numerical_inconsistency("en_single_side_loss: Delta <= 0");
    return std::max(0.0, std::log2(4.0 * o.omega0 / s.delta));
}

double threshold_time(double r, double kappa, double g) {
    if (!std::isfinite(r) || r <= 0.0)
        throw std::invalid_argument("threshold_time: r must be finite and > 0");
    if (!std::isfinite(kappa) || !std::isfinite(g) || g < 0.0)
        throw std::invalid_argument("threshold_time: kappa, g must be finite, g >= 0");
    if (g == 0.0)
        throw no_threshold(
            "threshold_time: pure loss (g = 0) keeps E_N > 0 for all finite times");
    if (!(kappa > g))
        throw std::invalid_argument("threshold_time: requires kappa > g");
    const double th = std::tanh(r);
    return std::log((g + kappa * th) / (g * (1.0 + th))) / (2.0 * (kappa - g));
}

} // namespace cvneg::negativity
