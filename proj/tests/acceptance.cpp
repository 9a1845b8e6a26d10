// Acceptance suite: each numbered criterion runs at its stated tolerance and
// prints exactly one PASS/FAIL line. Exit status is the number of failures.
// argv[1] (optional): path to the cvneg binary, needed for the determinism
// criterion.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "cvneg/fock.hpp"
#include "cvneg/negativity.hpp"
#include "cvneg/phase_space.hpp"
#include "cvneg/verify.hpp"

using namespace cvneg;
namespace neg = cvneg::negativity;

namespace {

int g_failures = 0;

void criterion(int number, bool pass, const std::string& detail) {
    std::printf("%s criterion %d: %s\n", pass ? "PASS" : "FAIL", number, detail.c_str());
    std::fflush(stdout);
    if (!pass) ++g_failures;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

} // namespace

int main(int argc, char** argv) {
    const std::string cli_binary = argc > 1 ? argv[1] : "";
    const double ln2 = std::numbers::ln2;
    char buf[256];

    // 1. ideal TMSV negativity: analytic exact to 1e-12, Fock within 5e-3 at
    //    cutoff 60, under 30 s
    {
        const auto t0 = std::chrono::steady_clock::now();
        double worst_analytic = 0.0, worst_fock = 0.0;
        for (double r : {0.2, 0.5, 1.0}) {
            const double expect = 2.0 * r / ln2;
            worst_analytic = std::max(
                worst_analytic, std::abs(neg::en_analytic(r, {0, 0, 0, 0, 0}).en - expect));
            worst_fock = std::max(
                worst_fock,
                std::abs(fock::log_negativity_fock(fock::tmsv_rho(r, 60)) - expect));
        }
        const double elapsed = seconds_since(t0);
        std::snprintf(buf, sizeof(buf),
                      "ideal TMSV E_N = 2r/ln2: analytic err %.2e (tol 1e-12), "
                      "Fock err %.2e (tol 5e-3) at cutoff 60, %.1f s (limit 30)",
                      worst_analytic, worst_fock, elapsed);
        criterion(1, worst_analytic <= 1e-12 && worst_fock <= 5e-3 && elapsed < 30.0, buf);
    }

    // 2. bi-symmetric loss: closed form to 1e-12, Lindblad+PT oracle within
    //    1e-3 at cutoff 40; spot value at T=0.8 near 1.0165 bits
    {
        double worst_closed = 0.0, worst_fock = 0.0, spot = 0.0;
        const double r = 0.5;
        for (double T : {0.2, 0.5, 0.8}) {
            const double kappa = -0.5 * std::log(T);
            const ChannelParams ch{kappa, 0, kappa, 0, 1.0};
            const double expect = std::log2(1.0 / (1.0 - T * (1.0 - std::exp(-2.0 * r))));
            const double analytic = neg::en_analytic(r, ch).en;
            worst_closed = std::max(worst_closed, std::abs(analytic - expect));
            const auto rho = fock::lindblad_evolve(fock::tmsv_rho(r, 40), ch, 1600);
            const double fock_en = fock::log_negativity_fock(rho);
            worst_fock = std::max(worst_fock, std::abs(fock_en - analytic));
            if (T == 0.8) spot = analytic;
        }
        std::snprintf(buf, sizeof(buf),
                      "bi-symmetric loss: closed-form err %.2e (tol 1e-12), Fock err "
                      "%.2e (tol 1e-3) at cutoff 40, spot E_N(T=0.8) = %.5f (expect "
                      "~1.0165)",
                      worst_closed, worst_fock, spot);
        criterion(2, worst_closed <= 1e-12 && worst_fock <= 1e-3 &&
                         std::abs(spot - 1.0165) <= 1e-3,
                  buf);
    }

    // 3. gain+loss threshold: bisection root to 1e-8; Fock E_N at 1.2 t_c
    //    below 2e-3; under 2 min
    {
        const auto t0 = std::chrono::steady_clock::now();
        const double r = 0.5, kappa = 0.2, g = 0.05;
        const double tc = neg::threshold_time(r, kappa, g);
        double lo = 0.25 * tc, hi = 4.0 * tc;
        for (int i = 0; i < 200; ++i) {
            const double mid = 0.5 * (lo + hi);
            (neg::en_analytic(r, {kappa, g, kappa, g, mid}).entangled ? lo : hi) = mid;
        }
        const double root_err = std::abs(0.5 * (lo + hi) - tc);
        const ChannelParams ch{kappa, g, kappa, g, 1.2 * tc};
        const auto rho = fock::lindblad_evolve(fock::tmsv_rho(r, 30), ch, 2000);
        const double en_fock = fock::log_negativity_fock(rho);
        const double elapsed = seconds_since(t0);
        std::snprintf(buf, sizeof(buf),
                      "threshold time t_c = %.6f: bisection err %.2e (tol 1e-8), Fock "
                      "E_N at 1.2 t_c = %.2e (tol 2e-3), %.1f s (limit 120)",
                      tc, root_err, en_fock, elapsed);
        criterion(3, root_err <= 1e-8 && en_fock <= 2e-3 && elapsed < 120.0, buf);
    }

    // 4. end-to-end density-operator identity at cutoff 30 for three channel
    //    points (symmetric loss, asymmetric loss, gain+loss), entrywise 1e-5
    {
        const double r = 0.4;
        const std::vector<ChannelParams> points{{0.15, 0, 0.15, 0, 1.0},
                                                {0.2, 0, 0.05, 0, 1.0},
                                                {0.1, 0.03, 0.1, 0.03, 1.0}};
        double worst = 0.0;
        for (const auto& ch : points) {
            const auto rho_lind = fock::lindblad_evolve(fock::tmsv_rho(r, 30), ch, 2000);
            const auto rho_closed = fock::gaussian_rho_op(
                neg::omega_from_lambda(phase_space::lambda_params(r, ch)), 30);
            worst = std::max(worst,
                             (rho_lind.mat - rho_closed.mat).cwiseAbs().maxCoeff());
        }
        std::snprintf(buf, sizeof(buf),
                      "Lindblad vs normally ordered density operator: entrywise err "
                      "%.2e (tol 1e-5) at cutoff 30, three channels",
                      worst);
        criterion(4, worst <= 1e-5, buf);
    }

    // 5. transpose lemma property suite: 100 seeded random polynomials per
    //    mode count, max error 1e-10
    {
        const auto rep = verify::check_transpose_lemma(42, 100, 20);
        std::snprintf(buf, sizeof(buf),
                      "transpose lemma on %d random normally ordered polynomials: max "
                      "err %.2e (tol 1e-10)",
                      rep.trials, rep.max_abs_error);
        criterion(5, rep.pass && rep.max_abs_error <= 1e-10, buf);
    }

    // 6. squeezer-PT / beam-splitter identity, entrywise 1e-9
    {
        const auto rep = verify::check_pt_squeezer({0.1, 0.3, 0.6}, 24);
        std::snprintf(buf, sizeof(buf),
                      "PT of two-mode squeezer vs cos(theta) B(theta): max err %.2e "
                      "(tol 1e-9) for r in {0.1,0.3,0.6}",
                      rep.max_abs_error);
        criterion(6, rep.pass && rep.max_abs_error <= 1e-9, buf);
    }

    // 7. characteristic/Wigner reflection identities on 5^4 grids, 1e-6
    {
        const auto pure = verify::check_reflections(0.5, std::nullopt,
                                                    verify::GridSpec{5, 1.2}, 20);
        const auto mixed = verify::check_reflections(
            0.5, ChannelParams{0.15, 0, 0.1, 0, 1.0}, verify::GridSpec{5, 1.2}, 20);
        const double worst = std::max(pure.max_abs_error, mixed.max_abs_error);
        std::snprintf(buf, sizeof(buf),
                      "chi and W reflections under transpose/PT: max err %.2e (tol "
                      "1e-6), pure and decohered states",
                      worst);
        criterion(7, pure.pass && mixed.pass && worst <= 1e-6, buf);
    }

    // 8. covariance transforms vs Fock moments, 1e-6
    {
        const auto pure = verify::check_covariance(0.5, std::nullopt, 20);
        const auto mixed =
            verify::check_covariance(0.5, ChannelParams{0.15, 0, 0.1, 0, 1.0}, 20);
        const double worst = std::max(pure.max_abs_error, mixed.max_abs_error);
        std::snprintf(buf, sizeof(buf),
                      "covariance sign-flip conjugations vs Fock moments: max err %.2e "
                      "(tol 1e-6)",
                      worst);
        criterion(8, pure.pass && mixed.pass && worst <= 1e-6, buf);
    }

    // 9. single-mode transpose positivity, min eigenvalue >= -1e-10
    {
        const auto rep = verify::check_transpose_positivity(42, 30, 12);
        std::snprintf(buf, sizeof(buf),
                      "transposed single-mode density operators stay positive: worst "
                      "negative excursion %.2e (tol 1e-10), %d trials",
                      rep.max_abs_error, rep.trials);
        criterion(9, rep.pass, buf);
    }

    // 10. determinism: verify with a fixed seed is byte-identical across runs
    {
        if (cli_binary.empty()) {
            criterion(10, false, "determinism: cvneg binary path not supplied");
        } else {
            const std::string args = " verify --suite all --seed 42 --cutoff 18";
            const int rc1 =
                std::system((cli_binary + args + " --output acceptance_v1.jsonl").c_str());
            const int rc2 =
                std::system((cli_binary + args + " --output acceptance_v2.jsonl").c_str());
            const std::string run1 = slurp("acceptance_v1.jsonl");
            const std::string run2 = slurp("acceptance_v2.jsonl");
            const bool ok = rc1 != -1 && rc2 != -1 && WEXITSTATUS(rc1) == 0 &&
                            WEXITSTATUS(rc2) == 0 && !run1.empty() && run1 == run2;
            std::snprintf(buf, sizeof(buf),
                          "verify --seed 42 twice: %zu bytes, byte-identical %s, both "
                          "exit 0",
                          run1.size(), run1 == run2 ? "yes" : "NO");
            criterion(10, ok, buf);
        }
    }

    std::printf("%d criterion failure(s)\n", g_failures);
    return g_failures;
}
