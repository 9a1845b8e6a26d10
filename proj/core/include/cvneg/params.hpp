#pragma once

#include <cmath>
#include <stdexcept>
#include <string>

namespace cvneg {

// Gain/loss channel acting independently on each mode for a time t.
// Rates are in units of 1/time; kappa is loss, g is gain. kappa_j == g_j is
// allowed (handled by a series limit in channel_A).
struct ChannelParams {
    double kappa1 = 0.0;
    double g1 = 0.0;
    double kappa2 = 0.0;
    double g2 = 0.0;
    double t = 0.0;

    void validate() const {
        auto require = [](double v, const char* name) {
            if (!std::isfinite(v) || v < 0.0)
                throw std::invalid_argument(std::string("ChannelParams: ") + name +
                                            " must be finite and >= 0");
        };
        require(kappa1, "kappa1");
        require(g1, "g1");
        require(kappa2, "kappa2");
        require(g2, "g2");
        require(t, "t");
    }
};

// Exponent coefficients and normalization of the evolved two-mode Gaussian
// Wigner function W = 1/(pi^2 Gamma) exp{-2 l1 |a1|^2 - 2 l2 |a2|^2
//                                        + 2 l12 (a1 a2 + a1* a2*)}.
struct WignerParams {
    double lambda1 = 1.0;
    double lambda2 = 1.0;
    double lambda12 = 0.0;
    double gamma = 1.0;

    void validate() const {
        if (!(gamma > 0.0))
            throw std::invalid_argument("WignerParams: gamma must be > 0");
        if (!(lambda1 > 0.0) || !(lambda2 > 0.0))
            throw std::invalid_argument("WignerParams: lambda1, lambda2 must be > 0");
        if (!(lambda1 * lambda2 - lambda12 * lambda12 > 0.0))
            throw std::invalid_argument(
                "WignerParams: lambda1*lambda2 - lambda12^2 must be > 0");
    }
};

// Coefficients of the normally ordered Gaussian density operator
// rho = 4 O0 : exp{2 O1 a^+a + 2 O2 b^+b + 2 O3 (ab + a^+b^+)} :.
struct OmegaParams {
    double omega0 = 0.25;
    double omega1 = -0.5;
    double omega2 = -0.5;
    double omega3 = 0.0;

    void validate() const {
        if (!(omega0 > 0.0))
            throw std::invalid_argument("OmegaParams: omega0 must be > 0");
    }
};

} // namespace cvneg
