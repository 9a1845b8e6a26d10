#include "cvneg/verify.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

#include <nlohmann/json.hpp>

#include "cvneg/fock.hpp"
#include "cvneg/negativity.hpp"
#include "cvneg/phase_space.hpp"

namespace cvneg::verify {

namespace {

using fock::Complex;
using fock::FockOp;
using fock::Matrix;

constexpr double kRt2 = std::numbers::sqrt2;

double max_abs(const Matrix& m) { return m.cwiseAbs().maxCoeff(); }

// Accumulates (error, tolerance) pairs; the report carries the pair with the
// worst error/tolerance margin so a single line still pinpoints the failure.
struct ErrAcc {
    double worst_err = 0.0;
    double worst_tol = 1.0;
    bool all_pass = true;
    bool any = false;

    void add(double err, double tol) {
        if (err > tol) all_pass = false;
        if (!any || err * worst_tol > worst_err * tol) {
            worst_err = err;
            worst_tol = tol;
            any = true;
        }
    }
};

CheckReport make_report(std::string name, std::string params, const ErrAcc& acc,
                        int cutoff, int steps, int trials, std::uint64_t seed) {
    CheckReport rep;
    rep.name = std::move(name);
    rep.params = std::move(params);
    rep.max_abs_error = acc.worst_err;
    rep.tolerance = acc.worst_tol;
    rep.pass = acc.all_pass && acc.worst_err <= acc.worst_tol;
    rep.cutoff = cutoff;
    rep.steps = steps;
    rep.trials = trials;
    rep.seed = seed;
    return rep;
}

double urand(std::mt19937_64& rng, double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng);
}

Complex crand(std::mt19937_64& rng, double scale) {
    return scale * Complex(urand(rng, -1, 1), urand(rng, -1, 1));
}

FockOp random_density(std::mt19937_64& rng, int cutoff) {
    const int d = cutoff + 1;
    Matrix g(d, d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) g(i, j) = crand(rng, 1.0);
    Matrix rho = g * g.adjoint();
    rho /= rho.trace().real();
    return {1, cutoff, std::move(rho)};
}

// parity-sandwiched displacement, the Wigner operator up to 1/pi
Matrix wigner_kernel(Complex alpha, int cutoff) {
    const Matrix d = fock::displacement_op(alpha, cutoff, 1e-6).mat;
    Eigen::VectorXcd parity(cutoff + 1);
    for (int n = 0; n <= cutoff; ++n) parity(n) = (n % 2 == 0) ? 1.0 : -1.0;
    return (1.0 / std::numbers::pi) * d * parity.asDiagonal() * d.adjoint();
}

std::string fmt(const char* format, double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), format, v);
    return buf;
}

std::string channel_str(const ChannelParams& ch) {
    std::ostringstream os;
    os << "kappa1=" << fmt("%.6g", ch.kappa1) << " g1=" << fmt("%.6g", ch.g1)
       << " kappa2=" << fmt("%.6g", ch.kappa2) << " g2=" << fmt("%.6g", ch.g2)
       << " t=" << fmt("%.6g", ch.t);
    return os.str();
}

// TMSV optionally decohered through the closed-form channel pipeline
FockOp two_mode_state(double r, const std::optional<ChannelParams>& ch, int cutoff) {
    if (!ch) return fock::tmsv_rho(r, cutoff);
    const WignerParams p = phase_space::lambda_params(r, *ch);
    return fock::gaussian_rho_op(negativity::omega_from_lambda(p), cutoff);
}

} // namespace

std::string CheckReport::to_json_line() const {
    nlohmann::json j;
    j["check"] = name;
    j["cutoff"] = cutoff;
    j["max_abs_error"] = max_abs_error;
    j["params"] = params;
    j["pass"] = pass;
    j["seed"] = seed;
    j["steps"] = steps;
    j["tolerance"] = tolerance;
    j["trials"] = trials;
    return j.dump();
}

CheckReport check_transpose_lemma(std::uint64_t seed, int trials, int cutoff) {
    if (cutoff < 12)
        throw std::invalid_argument("check_transpose_lemma: cutoff must be >= 12");
    if (trials < 1)
        throw std::invalid_argument("check_transpose_lemma: trials must be >= 1");
    std::mt19937_64 rng(seed);
    const double tol = 1e-10;
    ErrAcc acc;
    // degree-4 monomials have entries of order cutoff^4 (squared for two
    // modes), so errors are measured relative to the largest entry
    const auto rel_err = [](const Matrix& diff, const Matrix& ref) {
        return max_abs(diff) / std::max(1.0, max_abs(ref));
    };

    // single mode: sum_{j,k<=4} c_jk a^{+j} a^k
    {
        const int d = cutoff + 1;
        const Matrix a = fock::annihilator(cutoff).mat;
        const Matrix ad = fock::creation(cutoff).mat;
        Matrix mono[5][5];
        for (int j = 0; j <= 4; ++j)
            for (int k = 0; k <= 4; ++k) {
                Matrix m = Matrix::Identity(d, d);
                for (int i = 0; i < j; ++i) m = ad * m;
                for (int i = 0; i < k; ++i) m = m * a;
                mono[j][k] = std::move(m);
            }
        for (int t = 0; t < trials; ++t) {
            Matrix op = Matrix::Zero(d, d), swapped = Matrix::Zero(d, d);
            for (int j = 0; j <= 4; ++j)
                for (int k = 0; k <= 4; ++k) {
                    const Complex c = crand(rng, 1.0);
                    op += c * mono[j][k];
                    swapped += c * mono[k][j];
                }
            acc.add(rel_err(op.transpose() - swapped, swapped), tol);
        }
    }

    // two modes: sum c a^{+j1} a^{k1} b^{+j2} b^{k2}, mode-2 exponents swapped
    {
        const int n2 = std::min(cutoff, 10);
        const int d = n2 + 1;
        const Matrix a = fock::annihilator(n2).mat;
        const Matrix ad = fock::creation(n2).mat;
        Matrix mono[5][5];
        for (int j = 0; j <= 4; ++j)
            for (int k = 0; k <= 4; ++k) {
                Matrix m = Matrix::Identity(d, d);
                for (int i = 0; i < j; ++i) m = ad * m;
                for (int i = 0; i < k; ++i) m = m * a;
                mono[j][k] = std::move(m);
            }
        auto kron = [&](const Matrix& x, const Matrix& y) {
            Matrix out(d * d, d * d);
            for (int i = 0; i < d; ++i)
                for (int j = 0; j < d; ++j) out.block(i * d, j * d, d, d) = x(i, j) * y;
            return out;
        };
        for (int t = 0; t < trials; ++t) {
            Matrix op = Matrix::Zero(d * d, d * d), swapped = Matrix::Zero(d * d, d * d);
            for (int j1 = 0; j1 <= 4; ++j1)
                for (int k1 = 0; k1 <= 4; ++k1) {
                    Matrix inner = Matrix::Zero(d, d), inner_sw = Matrix::Zero(d, d);
                    for (int j2 = 0; j2 <= 4; ++j2)
                        for (int k2 = 0; k2 <= 4; ++k2) {
                            const Complex c = crand(rng, 1.0);
                            inner += c * mono[j2][k2];
                            inner_sw += c * mono[k2][j2];
                        }
                    op += kron(mono[j1][k1], inner);
                    swapped += kron(mono[j1][k1], inner_sw);
                }
            FockOp op2{2, n2, std::move(op)};
            acc.add(rel_err(fock::partial_transpose(op2, 2).mat - swapped, swapped), tol);
        }
    }

    std::ostringstream os;
    os << "degrees<=4, errors relative to the largest entry, single-mode cutoff "
       << cutoff << ", two-mode cutoff " << std::min(cutoff, 10);
    return make_report("transpose-lemma", os.str(), acc, cutoff, 0, 2 * trials, seed);
}

CheckReport check_operator_transposes(std::uint64_t seed, int trials, int cutoff) {
    std::mt19937_64 rng(seed);
    ErrAcc acc;
    for (int t = 0; t < trials; ++t) {
        const Complex alpha = crand(rng, 0.7);
        acc.add(max_abs(fock::transpose_full(fock::displacement_op(alpha, cutoff)).mat -
                        fock::displacement_op(-std::conj(alpha), cutoff).mat),
                1e-10);

        const double r = urand(rng, 0.05, 0.9);
        const Complex xi = r * std::exp(Complex(0, urand(rng, -3, 3)));
        acc.add(max_abs(fock::transpose_full(fock::squeeze1_op(xi, cutoff, 1e-6)).mat -
                        fock::squeeze1_op(-std::conj(xi), cutoff, 1e-6).mat),
                1e-9);

        acc.add(max_abs(Matrix(wigner_kernel(alpha, cutoff).transpose()) -
                        wigner_kernel(std::conj(alpha), cutoff)),
                1e-10);
    }
    return make_report("operator-transposes", "|alpha|<=1, r<=0.9", acc, cutoff, 0,
                       trials, seed);
}

CheckReport check_transpose_positivity(std::uint64_t seed, int trials, int cutoff) {
    std::mt19937_64 rng(seed);
    ErrAcc acc;
    for (int t = 0; t < trials; ++t) {
        FockOp rho = random_density(rng, cutoff);
        const auto ev = fock::eig_hermitian(fock::transpose_full(rho));
        acc.add(std::max(0.0, -ev.front()), 1e-10);
    }
    return make_report("transpose-positivity", "random single-mode density operators",
                       acc, cutoff, 0, trials, seed);
}

CheckReport check_pt_squeezer(const std::vector<double>& r_values, int cutoff) {
    ErrAcc acc;
    for (double r : r_values) {
        const double theta = std::asin(std::tanh(r));
        for (double phi : {0.0, 0.7}) {
            const Complex xi = r * std::exp(Complex(0, phi));
            const Matrix lhs =
                fock::partial_transpose(fock::squeeze2_op(xi, cutoff, 1e-6), 2).mat;
            const Matrix rhs =
                std::cos(theta) * fock::beam_splitter_op(theta, phi, cutoff).mat;
            acc.add(max_abs(lhs - rhs), 1e-9);
        }
    }
    std::ostringstream os;
    os << "sin(theta)=tanh(r), r in {";
    for (std::size_t i = 0; i < r_values.size(); ++i)
        os << (i ? "," : "") << fmt("%.3g", r_values[i]);
    os << "}, phi in {0, 0.7}";
    return make_report("pt-squeezer", os.str(), acc, cutoff, 0,
                       int(2 * r_values.size()), 0);
}

CheckReport check_reflections(double r, const std::optional<ChannelParams>& ch,
                              const GridSpec& grid, int cutoff) {
    ErrAcc acc;
    const double tol = 1e-6;
    const int n = grid.points_per_axis;
    auto coord = [&](int i) {
        return n == 1 ? 0.0 : -grid.half_width + 2.0 * grid.half_width * i / (n - 1);
    };
    auto alpha_of = [&](double q, double p) { return Complex(q / kRt2, p / kRt2); };

    // single mode: squeezed vacuum, optionally thermalized
    {
        const Complex xi = r * std::exp(Complex(0, 0.6));
        const Matrix s = fock::squeeze1_op(xi, cutoff, 1e-6).mat;
        Matrix core = Matrix::Zero(cutoff + 1, cutoff + 1);
        if (ch) {
            const double nbar = 0.3, x = nbar / (1.0 + nbar);
            for (int k = 0; k <= cutoff; ++k) core(k, k) = (1.0 - x) * std::pow(x, k);
        } else {
            core(0, 0) = 1.0;
        }
        FockOp rho1{1, cutoff, s * core * s.adjoint()};
        FockOp rho1_t = fock::transpose_full(rho1);
        acc.add(std::abs(rho1_t.mat.trace() - rho1.mat.trace()), 1e-12);
        for (int iq = 0; iq < n; ++iq)
            for (int ip = 0; ip < n; ++ip) {
                const double q = coord(iq), p = coord(ip);
                acc.add(std::abs(fock::char_fn_point(rho1_t, alpha_of(q, p)) -
                                 fock::char_fn_point(rho1, alpha_of(-q, p))),
                        tol);
                acc.add(std::abs(fock::wigner_point_fock(rho1_t, alpha_of(q, p)) -
                                 fock::wigner_point_fock(rho1, alpha_of(q, -p))),
                        tol);
            }
    }

    // two modes: TMSV, optionally decohered; PT reflects (q2, p2)
    {
        FockOp rho2 = two_mode_state(r, ch, cutoff);
        FockOp rho2_pt = fock::partial_transpose(rho2, 2);
        acc.add(std::abs(rho2_pt.mat.trace() - rho2.mat.trace()), 1e-12);
        acc.add(max_abs(rho2_pt.mat - rho2_pt.mat.adjoint().eval()), 1e-12);
        for (int iq1 = 0; iq1 < n; ++iq1)
            for (int ip1 = 0; ip1 < n; ++ip1)
                for (int iq2 = 0; iq2 < n; ++iq2)
                    for (int ip2 = 0; ip2 < n; ++ip2) {
                        const Complex a1 = alpha_of(coord(iq1), coord(ip1));
                        const double q2 = coord(iq2), p2 = coord(ip2);
                        acc.add(std::abs(fock::char_fn_point(rho2_pt, a1,
                                                             alpha_of(q2, p2)) -
                                         fock::char_fn_point(rho2, a1,
                                                             alpha_of(-q2, p2))),
                                tol);
                        acc.add(std::abs(fock::wigner_point_fock(rho2_pt, a1,
                                                                 alpha_of(q2, p2)) -
                                         fock::wigner_point_fock(rho2, a1,
                                                                 alpha_of(q2, -p2))),
                                tol);
                    }
    }

    std::ostringstream os;
    os << "r=" << fmt("%.3g", r) << (ch ? " decohered, " : " pure, ") << n << "^4 grid, "
       << "half-width " << fmt("%.3g", grid.half_width);
    if (ch) os << ", " << channel_str(*ch);
    return make_report("reflections", os.str(), acc, cutoff, 0, n * n * n * n, 0);
}

CheckReport check_covariance(double r, const std::optional<ChannelParams>& ch,
                             int cutoff) {
    ErrAcc acc;
    const double tol = 1e-6;

    // two modes: phase-squeezed TMSV (pure) or channel output (decohered)
    {
        FockOp rho2 = [&] {
            if (ch) return two_mode_state(r, ch, cutoff);
            const Matrix s = fock::squeeze2_op(r * std::exp(Complex(0, 0.8)), cutoff,
                                               1e-6)
                                 .mat;
            Matrix vac = Matrix::Zero(s.rows(), s.cols());
            vac(0, 0) = 1.0;
            return FockOp{2, cutoff, s * vac * s.adjoint()};
        }();
        const Eigen::Matrix4d v = fock::covariance_fock(rho2);
        const Eigen::Matrix4d v_pt_direct =
            fock::covariance_fock(fock::partial_transpose(rho2, 2));
        acc.add((v_pt_direct - phase_space::covariance_pt(v)).cwiseAbs().maxCoeff(), tol);
        // <Q1 P2> changes sign
        acc.add(std::abs(v_pt_direct(0, 3) + v(0, 3)), tol);
    }

    // single mode: squeezed thermal
    {
        const Complex xi = r * std::exp(Complex(0, 0.7));
        const Matrix s = fock::squeeze1_op(xi, cutoff, 1e-6).mat;
        const double nbar = 0.3, x = nbar / (1.0 + nbar);
        Matrix core = Matrix::Zero(cutoff + 1, cutoff + 1);
        for (int k = 0; k <= cutoff; ++k) core(k, k) = (1.0 - x) * std::pow(x, k);
        FockOp rho1{1, cutoff, s * core * s.adjoint()};
        const Eigen::Matrix2d v = fock::covariance_fock(rho1);
        const Eigen::Matrix2d v_t_direct =
            fock::covariance_fock(fock::transpose_full(rho1));
        acc.add((v_t_direct - phase_space::covariance_transpose_single(v))
                    .cwiseAbs()
                    .maxCoeff(),
                tol);
    }

    std::ostringstream os;
    os << "r=" << fmt("%.3g", r) << (ch ? " decohered" : " pure");
    if (ch) os << ", " << channel_str(*ch);
    return make_report("covariance", os.str(), acc, cutoff, 0, 0, 0);
}

CheckReport check_channel_pipeline(double r, const ChannelParams& ch, int cutoff,
                                   int steps) {
    ErrAcc acc;
    const WignerParams p = phase_space::lambda_params(r, ch);
    const FockOp rho_lind = fock::lindblad_evolve(fock::tmsv_rho(r, cutoff), ch, steps);
    const FockOp rho_omega =
        fock::gaussian_rho_op(negativity::omega_from_lambda(p), cutoff);

    const double err_entry = max_abs(rho_lind.mat - rho_omega.mat);
    acc.add(err_entry, 1e-5);

    std::mt19937_64 rng(97);
    double err_wigner = 0.0, err_quad = 0.0;
    for (int i = 0; i < 10; ++i) {
        const Complex a1 = crand(rng, 0.6), a2 = crand(rng, 0.6);
        const double closed = phase_space::evolved_wigner_point(p, a1, a2);
        err_wigner = std::max(err_wigner,
                              std::abs(fock::wigner_point_fock(rho_lind, a1, a2) - closed));
        err_quad = std::max(err_quad,
                            std::abs(phase_space::convolve_wigner(r, ch, a1, a2) - closed));
    }
    acc.add(err_wigner, 1e-4);
    acc.add(err_quad, 1e-6);

    const double en_fock = fock::log_negativity_fock(rho_lind);
    const double en_closed = negativity::en_analytic(r, ch).en;
    acc.add(std::abs(en_fock - en_closed), 1e-3);

    std::ostringstream os;
    os << "r=" << fmt("%.3g", r) << ", " << channel_str(ch)
       << "; entrywise=" << fmt("%.3e", err_entry) << " wigner=" << fmt("%.3e", err_wigner)
       << " quadrature=" << fmt("%.3e", err_quad)
       << " en=" << fmt("%.3e", std::abs(en_fock - en_closed));
    return make_report("channel-pipeline", os.str(), acc, cutoff, steps, 10, 97);
}

CheckReport check_special_cases(int cutoff) {
    ErrAcc acc;
    const double ln2 = std::numbers::ln2;
    // r = 1 needs room for its Schmidt tail regardless of the suite cutoff
    const int fock_cutoff = std::max(cutoff, 26);

    // ideal TMSV on both routes
    for (double r : {0.2, 0.5, 1.0}) {
        const auto rep = negativity::en_analytic(r, {0, 0, 0, 0, 0});
        acc.add(std::abs(rep.en - 2.0 * r / ln2), 1e-12);
        acc.add(
            std::abs(fock::log_negativity_fock(fock::tmsv_rho(r, fock_cutoff, 1e-6)) -
                     2.0 * r / ln2),
            5e-3);
    }

    // bi-symmetric loss closed form and its M-matrix entries
    for (double T : {0.2, 0.5, 0.8}) {
        const double r = 0.5, kappa = -0.5 * std::log(T);
        const ChannelParams ch{kappa, 0, kappa, 0, 1.0};
        acc.add(std::abs(negativity::en_analytic(r, ch).en -
                         negativity::en_photon_loss(r, T)),
                1e-12);
        const auto m = negativity::m_params(
            negativity::omega_from_lambda(phase_space::lambda_params(r, ch)));
        const double th = std::tanh(r), R = 1.0 - T;
        const double den = std::pow(1.0 - R * R * th * th, 2);
        acc.add(std::abs(m.w - T * T * (1.0 + R * R * th * th) * th * th / den), 1e-12);
        acc.add(std::abs(m.u - m.w), 1e-12);
        acc.add(std::abs(m.v - 2.0 * R * T * T * th * th * th / den), 1e-12);
    }

    // single-side loss: dedicated formula vs the general pipeline
    {
        const double r = 0.5, T = 0.8;
        const ChannelParams ch{-0.5 * std::log(T), 0, 0, 0, 1.0};
        acc.add(std::abs(negativity::en_single_side_loss(r, T) -
                         negativity::en_analytic(r, ch).en),
                1e-10);
        acc.add(std::abs(negativity::en_single_side_loss(r, 1.0) - 2.0 * r / ln2), 1e-12);
        acc.add(std::abs(negativity::en_single_side_loss(r, 0.0)), 1e-12);
    }

    // gain+loss threshold: closed form is the zero of the analytic pipeline
    {
        const double r = 0.5, kappa = 0.2, g = 0.05;
        const double tc = negativity::threshold_time(r, kappa, g);
        auto report_at = [&](double t) {
            return negativity::en_analytic(r, {kappa, g, kappa, g, t});
        };
        acc.add(std::abs(std::log2(report_at(tc).trace_norm)), 1e-9);
        double lo = 0.5 * tc, hi = 2.0 * tc;
        for (int i = 0; i < 200; ++i) {
            const double mid = 0.5 * (lo + hi);
            (report_at(mid).entangled ? lo : hi) = mid;
        }
        acc.add(std::abs(0.5 * (lo + hi) - tc), 1e-8);
        acc.add(report_at(0.99 * tc).entangled ? 0.0 : 1.0, 0.5);
        acc.add(report_at(1.01 * tc).entangled ? 1.0 : 0.0, 0.5);
    }

    return make_report("special-cases",
                       "ideal TMSV, bi-symmetric loss, single-side loss, threshold",
                       acc, cutoff, 0, 0, 0);
}

namespace {

const std::vector<std::string>& registered_checks() {
    static const std::vector<std::string> names{
        "transpose-lemma", "operator-transposes", "transpose-positivity",
        "pt-squeezer",     "reflections",         "covariance",
        "channel-pipeline", "special-cases",      "coverage"};
    return names;
}

} // namespace

const std::vector<ClaimCoverage>& coverage_manifest() {
    static const std::vector<ClaimCoverage> manifest{
        {"fock-transpose-definition", {"transpose-lemma", "operator-transposes"}},
        {"normal-order-transpose-lemma", {"transpose-lemma"}},
        {"normal-order-pt-lemma", {"transpose-lemma"}},
        {"displacement-transpose", {"operator-transposes"}},
        {"wigner-operator-transpose", {"operator-transposes"}},
        {"squeeze1-transpose", {"operator-transposes"}},
        {"char-fn-reflection", {"reflections"}},
        {"wigner-fn-reflection", {"reflections"}},
        {"transpose-preserves-trace-hermiticity", {"reflections"}},
        {"single-mode-transpose-positivity", {"transpose-positivity"}},
        {"moment-transpose-rule", {"covariance"}},
        {"covariance-transpose-single", {"covariance"}},
        {"pt-fock-definition", {"transpose-lemma", "pt-squeezer"}},
        {"pt-squeezer-beam-splitter", {"pt-squeezer"}},
        {"covariance-pt", {"covariance"}},
        {"moment-sign-flip-pt", {"covariance"}},
        {"negativity-from-trace-norm", {"channel-pipeline", "special-cases"}},
        {"laser-channel-wigner-kernel", {"channel-pipeline"}},
        {"evolved-wigner-closed-form", {"channel-pipeline"}},
        {"normal-ordered-density-op", {"channel-pipeline"}},
        {"m-matrix-trace-norm", {"channel-pipeline", "special-cases"}},
        {"ideal-tmsv-negativity", {"special-cases"}},
        {"bi-symmetric-loss-negativity", {"special-cases"}},
        {"single-side-loss-negativity", {"special-cases"}},
        {"gain-loss-threshold-time", {"special-cases"}},
    };
    return manifest;
}

CheckReport check_coverage() {
    const auto& reg = registered_checks();
    int missing = 0;
    std::ostringstream os;
    for (const auto& claim : coverage_manifest()) {
        if (claim.checks.empty()) {
            ++missing;
            os << claim.claim << ":no-check ";
            continue;
        }
        for (const auto& c : claim.checks)
            if (std::find(reg.begin(), reg.end(), c) == reg.end()) {
                ++missing;
                os << claim.claim << ":unknown:" << c << " ";
            }
    }
    ErrAcc acc;
    acc.add(double(missing), 0.0);
    std::string params = missing == 0
                             ? std::to_string(coverage_manifest().size()) +
                                   " claims covered by " +
                                   std::to_string(reg.size() - 1) + " checks"
                             : os.str();
    return make_report("coverage", params, acc, 0, 0, int(coverage_manifest().size()), 0);
}

std::vector<std::string> suite_names() { return registered_checks(); }

std::vector<CheckReport> run_suite(const std::string& name, std::uint64_t seed,
                                   int cutoff) {
    std::vector<CheckReport> out;
    const bool all = name == "all";
    const auto want = [&](const char* n) { return all || name == n; };
    bool known = all;

    if (want("transpose-lemma")) {
        known = true;
        out.push_back(check_transpose_lemma(seed, 100, std::max(cutoff, 12)));
    }
    if (want("operator-transposes")) {
        known = true;
        out.push_back(check_operator_transposes(seed, 8, std::max(cutoff, 40)));
    }
    if (want("transpose-positivity")) {
        known = true;
        out.push_back(check_transpose_positivity(seed, 20, std::min(cutoff, 14)));
    }
    if (want("pt-squeezer")) {
        known = true;
        out.push_back(check_pt_squeezer({0.1, 0.3, 0.6}, std::min(cutoff, 24)));
    }
    if (want("reflections")) {
        known = true;
        const int c = std::min(cutoff, 20);
        out.push_back(check_reflections(0.5, std::nullopt, GridSpec{}, c));
        out.push_back(
            check_reflections(0.5, ChannelParams{0.15, 0, 0.1, 0, 1.0}, GridSpec{}, c));
    }
    if (want("covariance")) {
        known = true;
        const int c = std::min(cutoff, 20);
        out.push_back(check_covariance(0.5, std::nullopt, c));
        out.push_back(check_covariance(0.5, ChannelParams{0.15, 0, 0.1, 0, 1.0}, c));
    }
    if (want("channel-pipeline")) {
        known = true;
        const int c = std::min(cutoff, 30);
        const double k07 = -0.5 * std::log(0.7);
        out.push_back(check_channel_pipeline(0.4, {k07, 0, k07, 0, 1.0}, c, 1200));
        out.push_back(check_channel_pipeline(0.4, {0.2, 0, 0.05, 0, 1.0}, c, 1200));
        out.push_back(check_channel_pipeline(0.4, {0.1, 0.03, 0.1, 0.03, 1.0}, c, 1200));
    }
    if (want("special-cases")) {
        known = true;
        out.push_back(check_special_cases(std::min(cutoff, 30)));
    }
    if (want("coverage")) {
        known = true;
        out.push_back(check_coverage());
    }
    if (!known)
        throw std::invalid_argument("run_suite: unknown suite '" + name + "'");
    return out;
}

} // namespace cvneg::verify
