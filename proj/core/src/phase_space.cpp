#include "cvneg/phase_space.hpp"

#include <cmath>
#include <numbers>

#include <Eigen/Eigenvalues>

namespace cvneg::phase_space {

namespace {

constexpr double kPi = std::numbers::pi;

// Gauss-Hermite rule for weight e^{-x^2} (Golub-Welsch on the Jacobi matrix).
struct GhRule {
    Eigen::VectorXd nodes;
    Eigen::VectorXd weights;
};

GhRule make_gh_rule(int order) {
    Eigen::MatrixXd jacobi = Eigen::MatrixXd::Zero(order, order);
    for (int k = 1; k < order; ++k) {
        const double b = std::sqrt(0.5 * k);
        jacobi(k, k - 1) = b;
        jacobi(k - 1, k) = b;
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(jacobi);
    GhRule rule;
    rule.nodes = es.eigenvalues();
    rule.weights.resize(order);
    const double sqrt_pi = std::sqrt(kPi);
    for (int i = 0; i < order; ++i)
        rule.weights(i) = sqrt_pi * std::pow(es.eigenvectors()(0, i), 2);
    return rule;
}

const GhRule& gh_rule(int order) {
    static const GhRule rule8 = make_gh_rule(8);
    static const GhRule rule16 = make_gh_rule(16);
    static const GhRule rule24 = make_gh_rule(24);
    static const GhRule rule32 = make_gh_rule(32);
    static const GhRule rule48 = make_gh_rule(48);
    static const GhRule rule64 = make_gh_rule(64);
    switch (order) {
        case 8: return rule8;
        case 16: return rule16;
        case 24: return rule24;
        case 32: return rule32;
        case 48: return rule48;
        default: return rule64;
    }
}

void require_nonneg(double v, const char* who, const char* name) {
    if (!std::isfinite(v) || v < 0.0)
        throw std::invalid_argument(std::string(who) + ": " + name +
                                    " must be finite and >= 0");
}

} // namespace

void GaussianState::validate(double sym_tol) const {
    if (modes != 1 && modes != 2)
        throw std::invalid_argument("GaussianState: modes must be 1 or 2");
    const int n = 2 * modes;
    if (mean.size() != n || cov.rows() != n || cov.cols() != n)
        throw std::invalid_argument("GaussianState: mean/cov dimensions do not match modes");
    if ((cov - cov.transpose()).cwiseAbs().maxCoeff() > sym_tol)
        throw std::invalid_argument("GaussianState: covariance must be symmetric");
    for (int i = 0; i < n; ++i)
        if (!(cov(i, i) > 0.0))
            throw std::invalid_argument("GaussianState: covariance diagonal must be > 0");
}

double tmsv_wigner_point(double r, Complex a1, Complex a2) {
    require_nonneg(r, "tmsv_wigner_point", "r");
    const double c = std::cosh(2.0 * r), s = std::sinh(2.0 * r);
    const double cross = 2.0 * (a1 * a2).real(); // a1 a2 + a1* a2*
    return std::exp(-2.0 * (std::norm(a1) + std::norm(a2)) * c + 2.0 * cross * s) /
           (kPi * kPi);
}

double channel_A(double kappa, double g, double t) {
    require_nonneg(kappa, "channel_A", "kappa");
    require_nonneg(g, "channel_A", "g");
    require_nonneg(t, "channel_A", "t");
    const double eps = kappa - g;
    if (std::abs(eps) * t < 1e-8) return 2.0 * (kappa + g) * t; // removable 0/0
    return (kappa + g) / eps * (-std::expm1(-2.0 * eps * t));
}

double channel_decay(double kappa, double g, double t) {
    return std::exp(-(kappa - g) * t);
}

WignerParams lambda_from_factors(double r, double A1, double E1, double A2,
                                 double E2) {
    require_nonneg(r, "lambda_from_factors", "r");
    const double c = std::cosh(2.0 * r), s = std::sinh(2.0 * r);
    const double gamma = (A1 * E2 * E2 + A2 * E1 * E1) * c + A1 * A2 + E1 * E1 * E2 * E2;
    if (!(gamma > 0.0))
        throw numerical_inconsistency("lambda_from_factors: Gamma must be > 0");
    WignerParams p;
    p.gamma = gamma;
    p.lambda1 = (A2 + E2 * E2 * c) / gamma;
    p.lambda2 = (A1 + E1 * E1 * c) / gamma;
    p.lambda12 = E1 * E2 * s / gamma;
    p.validate();
    return p;
}

WignerParams lambda_params(double r, const ChannelParams& ch) {
    ch.validate();
    return lambda_from_factors(r, channel_A(ch.kappa1, ch.g1, ch.t),
                               channel_decay(ch.kappa1, ch.g1, ch.t),
                               channel_A(ch.kappa2, ch.g2, ch.t),
                               channel_decay(ch.kappa2, ch.g2, ch.t));
}

double evolved_wigner_point(const WignerParams& p, Complex a1, Complex a2) {
    p.validate();
    const double cross = 2.0 * (a1 * a2).real();
    return std::exp(-2.0 * p.lambda1 * std::norm(a1) - 2.0 * p.lambda2 * std::norm(a2) +
                    2.0 * p.lambda12 * cross) /
           (kPi * kPi * p.gamma);
}

double convolve_wigner(double r, const ChannelParams& ch, Complex a1, Complex a2) {
    require_nonneg(r, "convolve_wigner", "r");
    ch.validate();
    if (ch.t == 0.0) return tmsv_wigner_point(r, a1, a2);

    const double A[2] = {channel_A(ch.kappa1, ch.g1, ch.t),
                         channel_A(ch.kappa2, ch.g2, ch.t)};
    const double E[2] = {channel_decay(ch.kappa1, ch.g1, ch.t),
                         channel_decay(ch.kappa2, ch.g2, ch.t)};
    const Complex alpha[2] = {a1, a2};
    const bool active[2] = {A[0] > 1e-14, A[1] > 1e-14};
    if (!active[0] && !active[1]) return tmsv_wigner_point(r, a1, a2);

    const double c2r = std::cosh(2.0 * r);

    // axes: (Re, Im) of each active mode's integration variable
    struct Axis {
        int mode;
        bool is_re;
        double scale;  // 1/sqrt(diagonal exponent coefficient)
        double center; // kernel peak, ignoring cross couplings
    };
    std::vector<Axis> axes;
    for (int m = 0; m < 2; ++m) {
        if (!active[m]) continue;
        const double diag_coef = 2.0 * c2r + 2.0 * E[m] * E[m] / A[m];
        const double s = 1.0 / std::sqrt(diag_coef);
        const double cr = 2.0 * E[m] * alpha[m].real() / (A[m] * diag_coef);
        const double ci = 2.0 * E[m] * alpha[m].imag() / (A[m] * diag_coef);
        axes.push_back({m, true, s, cr});
        axes.push_back({m, false, s, ci});
    }
    const int n_axes = int(axes.size());

    const auto integrand = [&](const double* x) {
        Complex beta[2] = {alpha[0], alpha[1]}; // inactive modes pass through
        int ax = 0;
        for (int m = 0; m < 2; ++m)
            if (active[m]) {
                beta[m] = Complex(x[ax], x[ax + 1]);
                ax += 2;
            }
        double v = tmsv_wigner_point(r, beta[0], beta[1]);
        for (int m = 0; m < 2; ++m)
            if (active[m])
                v *= 2.0 / (A[m] * kPi) *
                     std::exp(-2.0 / A[m] * std::norm(alpha[m] - beta[m] * E[m]));
        return v;
    };

    const auto evaluate = [&](int order) {
        const GhRule& rule = gh_rule(order);
        double sum = 0.0;
        std::vector<int> ix(n_axes, 0);
        std::vector<double> x(n_axes);
        while (true) {
            double w = 1.0;
            for (int a = 0; a < n_axes; ++a) {
                const double xi = rule.nodes(ix[a]);
                x[a] = axes[a].center + axes[a].scale * xi;
                w *= rule.weights(ix[a]) * axes[a].scale * std::exp(xi * xi);
            }
            sum += w * integrand(x.data());
            int a = 0;
            for (; a < n_axes; ++a) {
                if (++ix[a] < order) break;
                ix[a] = 0;
            }
            if (a == n_axes) break;
        }
        return sum;
    };

    double prev = evaluate(8);
    for (int order : {16, 24, 32, 48, 64}) {
        const double cur = evaluate(order);
        if (std::abs(cur - prev) < 1e-8) return cur;
        prev = cur;
    }
    throw numerical_inconsistency("convolve_wigner: quadrature did not converge");
}

Eigen::Matrix4d covariance_pt(const Eigen::Matrix4d& V, double sym_tol) {
    if ((V - V.transpose()).cwiseAbs().maxCoeff() > sym_tol)
        throw std::invalid_argument("covariance_pt: covariance must be symmetric");
    Eigen::Matrix4d out = V;
    for (int i = 0; i < 3; ++i) {
        out(i, 3) = -out(i, 3);
        out(3, i) = -out(3, i);
    }
    return out;
}

Eigen::Matrix2d covariance_transpose_single(const Eigen::Matrix2d& V, double sym_tol) {
    if ((V - V.transpose()).cwiseAbs().maxCoeff() > sym_tol)
        throw std::invalid_argument(
            "covariance_transpose_single: covariance must be symmetric");
    Eigen::Matrix2d out = V;
    out(0, 1) = -out(0, 1);
    out(1, 0) = -out(1, 0);
    return out;
}

Complex gaussian_char_fn(const GaussianState& state, const Eigen::VectorXd& xi) {
    state.validate();
    const int n = 2 * state.modes;
    if (xi.size() != n)
        throw std::invalid_argument("gaussian_char_fn: xi length must be 2*modes");
    Eigen::MatrixXd omega = Eigen::MatrixXd::Zero(n, n);
    for (int m = 0; m < state.modes; ++m) {
        omega(2 * m, 2 * m + 1) = 1.0;
        omega(2 * m + 1, 2 * m) = -1.0;
    }
    const Eigen::VectorXd v = omega.transpose() * xi; // xi Omega as a column
    const double quad = v.dot(state.cov * v);
    return std::exp(Complex(-0.5 * quad, state.mean.dot(xi)));
}

GaussianState tmsv_covariance(double r) {
    require_nonneg(r, "tmsv_covariance", "r");
    const double c = std::cosh(2.0 * r), s = std::sinh(2.0 * r);
    GaussianState st;
    st.modes = 2;
    st.mean = Eigen::VectorXd::Zero(4);
    st.cov = Eigen::MatrixXd::Identity(4, 4) * c;
    st.cov(0, 2) = st.cov(2, 0) = s;
    st.cov(1, 3) = st.cov(3, 1) = -s;
    return st;
}

GaussianState covariance_from_lambda(const WignerParams& p) {
    p.validate();
    GaussianState st;
    st.modes = 2;
    st.mean = Eigen::VectorXd::Zero(4);
    st.cov = Eigen::MatrixXd::Zero(4, 4);
    st.cov(0, 0) = st.cov(1, 1) = p.gamma * p.lambda2;
    st.cov(2, 2) = st.cov(3, 3) = p.gamma * p.lambda1;
    st.cov(0, 2) = st.cov(2, 0) = p.gamma * p.lambda12;
    st.cov(1, 3) = st.cov(3, 1) = -p.gamma * p.lambda12;
    return st;
}

namespace {

double gaussian_wigner_impl(const GaussianState& state, const Eigen::VectorXd& z) {
    state.validate();
    const auto n = z.size();
    const Eigen::MatrixXd vinv = state.cov.inverse();
    const double det = state.cov.determinant();
    if (!(det > 0.0))
        throw numerical_inconsistency("gaussian_wigner_point: covariance not positive");
    const Eigen::VectorXd d = z - state.mean;
    const double norm = std::pow(kPi, n / 2) * std::sqrt(det);
    return std::exp(-d.dot(vinv * d)) / norm;
}

} // namespace

double gaussian_wigner_point(const GaussianState& state, Complex a1) {
    if (state.modes != 1)
        throw std::invalid_argument("gaussian_wigner_point: expected a single-mode state");
    Eigen::VectorXd z(2);
    const double rt2 = std::numbers::sqrt2;
    z << rt2 * a1.real(), rt2 * a1.imag();
    return gaussian_wigner_impl(state, z);
}

double gaussian_wigner_point(const GaussianState& state, Complex a1, Complex a2) {
    if (state.modes != 2)
        throw std::invalid_argument("gaussian_wigner_point: expected a two-mode state");
    Eigen::VectorXd z(4);
    const double rt2 = std::numbers::sqrt2;
    z << rt2 * a1.real(), rt2 * a1.imag(), rt2 * a2.real(), rt2 * a2.imag();
    return gaussian_wigner_impl(state, z);
}

} // namespace cvneg::phase_space
