// cvneg -- logarithmic negativity of two-mode squeezed vacuum in gain/loss
// channels: single-point queries, parameter sweeps, threshold times, Wigner
// grids and the analytic-vs-Fock verification suite.
//
// Exit codes: 0 success, 1 verification failure, 2 invalid argument,
// 3 I/O error.

#include <atomic>
#include <cmath>
#include <complex>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <limits>
#include <numbers>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"

#include "cvneg/negativity.hpp"
#include "cvneg/phase_space.hpp"
#include "cvneg/verify.hpp"

namespace {

using cvneg::ChannelParams;
using cvneg::negativity::NegativityReport;

std::string num17(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

// "start:stop:count" or a single value
struct AxisSpec {
    double start = 0.0;
    double stop = 0.0;
    int count = 1;

    double at(int i) const {
        if (count == 1) return start;
        return start + (stop - start) * i / (count - 1);
    }
};

AxisSpec parse_axis(const std::string& text, const std::string& name) {
    AxisSpec ax;
    const auto c1 = text.find(':');
    try {
        if (c1 == std::string::npos) {
            ax.start = ax.stop = std::stod(text);
            ax.count = 1;
            return ax;
        }
        const auto c2 = text.find(':', c1 + 1);
        if (c2 == std::string::npos) throw std::invalid_argument("");
        ax.start = std::stod(text.substr(0, c1));
        ax.stop = std::stod(text.substr(c1 + 1, c2 - c1 - 1));
        ax.count = std::stoi(text.substr(c2 + 1));
    } catch (const std::exception&) {
        throw std::invalid_argument("--" + name + ": expected VALUE or START:STOP:COUNT");
    }
    if (ax.count < 1)
        throw std::invalid_argument("--" + name + ": count must be >= 1");
    return ax;
}

// deterministic-order parallel map over [0, n)
void parallel_for(int n, int threads, const std::function<void(int)>& body) {
    if (threads <= 1 || n <= 1) {
        for (int i = 0; i < n; ++i) body(i);
        return;
    }
    std::vector<std::thread> pool;
    std::atomic<int> next{0};
    const int workers = std::min(threads, n);
    for (int w = 0; w < workers; ++w)
        pool.emplace_back([&] {
            for (int i = next.fetch_add(1); i < n; i = next.fetch_add(1)) body(i);
        });
    for (auto& th : pool) th.join();
}

std::ostream& open_output(const std::string& path, std::ofstream& file) {
    if (path.empty()) return std::cout;
    file.open(path);
    if (!file) throw std::ios_base::failure("cannot open output file: " + path);
    return file;
}

void print_report(std::ostream& os, const NegativityReport& rep, bool as_json) {
    if (as_json) {
        os << "{\"en_bits\":" << num17(rep.en) << ",\"trace_norm\":" << num17(rep.trace_norm)
           << ",\"delta\":" << num17(rep.delta) << ",\"lambda_plus\":" << num17(rep.lambda_plus)
           << ",\"lambda_minus\":" << num17(rep.lambda_minus)
           << ",\"entangled\":" << (rep.entangled ? "true" : "false")
           << ",\"r\":" << num17(rep.r) << ",\"kappa1\":" << num17(rep.channel.kappa1)
           << ",\"g1\":" << num17(rep.channel.g1) << ",\"kappa2\":" << num17(rep.channel.kappa2)
           << ",\"g2\":" << num17(rep.channel.g2) << ",\"t\":" << num17(rep.channel.t)
           << "}\n";
        return;
    }
    os << "E_N (bits) : " << num17(rep.en) << "\n"
       << "trace norm : " << num17(rep.trace_norm) << "\n"
       << "Delta      : " << num17(rep.delta) << "\n"
       << "Lambda+    : " << num17(rep.lambda_plus) << "\n"
       << "Lambda-    : " << num17(rep.lambda_minus) << "\n"
       << "entangled  : " << (rep.entangled ? "yes" : "no") << "\n";
}

struct SweepRow {
    std::string var;
    double value = 0.0;
    NegativityReport rep;
};

NegativityReport eval_transmission(double r, double T) {
    // bi-symmetric loss expressed through the channel factors; exact at T = 0
    using namespace cvneg;
    const WignerParams p =
        phase_space::lambda_from_factors(r, 1.0 - T, std::sqrt(T), 1.0 - T, std::sqrt(T));
    const OmegaParams o = negativity::omega_from_lambda(p);
    const auto split = negativity::lambdas_delta(negativity::m_params(o));
    NegativityReport rep;
    rep.trace_norm = 4.0 * o.omega0 / split.delta;
    rep.en = std::max(0.0, std::log2(rep.trace_norm));
    rep.delta = split.delta;
    rep.lambda_plus = split.lambda_plus;
    rep.lambda_minus = split.lambda_minus;
    rep.entangled = 4.0 * o.omega0 > split.delta;
    rep.r = r;
    const double kappa = T > 0.0 ? -0.5 * std::log(T) : std::numeric_limits<double>::infinity();
    rep.channel = {kappa, 0.0, kappa, 0.0, 1.0};
    return rep;
}

void write_sweep(std::ostream& os, const std::vector<SweepRow>& rows, bool csv) {
    if (csv) {
        os << "sweep_var,sweep_value,r,kappa1,g1,kappa2,g2,t,en_bits,trace_norm,"
              "delta,lambda_plus,lambda_minus,entangled\n";
        for (const auto& row : rows) {
            const auto& ch = row.rep.channel;
            os << row.var << ',' << num17(row.value) << ',' << num17(row.rep.r) << ','
               << num17(ch.kappa1) << ',' << num17(ch.g1) << ',' << num17(ch.kappa2)
               << ',' << num17(ch.g2) << ',' << num17(ch.t) << ',' << num17(row.rep.en)
               << ',' << num17(row.rep.trace_norm) << ',' << num17(row.rep.delta) << ','
               << num17(row.rep.lambda_plus) << ',' << num17(row.rep.lambda_minus) << ','
               << (row.rep.entangled ? "true" : "false") << '\n';
        }
        return;
    }
    os << "[\n";
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const auto& row = rows[i];
        const auto& ch = row.rep.channel;
        os << "{\"sweep_var\":\"" << row.var << "\",\"sweep_value\":" << num17(row.value)
           << ",\"r\":" << num17(row.rep.r) << ",\"kappa1\":" << num17(ch.kappa1)
           << ",\"g1\":" << num17(ch.g1) << ",\"kappa2\":" << num17(ch.kappa2)
           << ",\"g2\":" << num17(ch.g2) << ",\"t\":" << num17(ch.t)
           << ",\"en_bits\":" << num17(row.rep.en)
           << ",\"trace_norm\":" << num17(row.rep.trace_norm)
           << ",\"delta\":" << num17(row.rep.delta)
           << ",\"lambda_plus\":" << num17(row.rep.lambda_plus)
           << ",\"lambda_minus\":" << num17(row.rep.lambda_minus)
           << ",\"entangled\":" << (row.rep.entangled ? "true" : "false") << "}"
           << (i + 1 < rows.size() ? ",\n" : "\n");
    }
    os << "]\n";
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"continuous-variable log-negativity toolkit"};
    app.require_subcommand(1);

    double r = 0.5, kappa1 = 0.0, g1 = 0.0, kappa2 = 0.0, g2 = 0.0, t = 0.0;
    double kappa = 0.1, g = 0.0;
    bool as_json = false;
    std::string output, format = "csv", var, suite = "all";
    std::string q1_spec = "0", p1_spec = "0", q2_spec = "0", p2_spec = "0";
    double start = 0.0, stop = 1.0;
    int count = 11, threads = int(std::thread::hardware_concurrency());
    std::uint64_t seed = 42;
    int cutoff = 30;

    auto add_channel = [&](CLI::App* cmd) {
        cmd->add_option("--r", r, "squeezing parameter")->check(CLI::NonNegativeNumber);
        cmd->add_option("--kappa1", kappa1, "loss rate, mode 1")->check(CLI::NonNegativeNumber);
        cmd->add_option("--g1", g1, "gain rate, mode 1")->check(CLI::NonNegativeNumber);
        cmd->add_option("--kappa2", kappa2, "loss rate, mode 2")->check(CLI::NonNegativeNumber);
        cmd->add_option("--g2", g2, "gain rate, mode 2")->check(CLI::NonNegativeNumber);
        cmd->add_option("--t", t, "evolution time")->check(CLI::NonNegativeNumber);
    };

    auto* cmd_point = app.add_subcommand("en-point", "log negativity at a single channel point");
    add_channel(cmd_point);
    cmd_point->add_flag("--json", as_json, "emit one JSON object instead of text");

    auto* cmd_sweep = app.add_subcommand("en-sweep", "log negativity over a parameter grid");
    add_channel(cmd_sweep);
    cmd_sweep->add_option("--var", var, "swept variable: t, r, T, kappa or g")
        ->required()
        ->check(CLI::IsMember({"t", "r", "T", "kappa", "g"}));
    cmd_sweep->add_option("--start", start, "grid start")->required();
    cmd_sweep->add_option("--stop", stop, "grid stop")->required();
    cmd_sweep->add_option("--count", count, "grid points")->check(CLI::Range(2, 1000000));
    cmd_sweep->add_option("--format", format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
    cmd_sweep->add_option("--output", output, "output path (default: stdout)");
    cmd_sweep->add_option("--threads", threads, "parallel evaluation threads")
        ->check(CLI::PositiveNumber);

    auto* cmd_threshold = app.add_subcommand("threshold", "disentanglement threshold time");
    cmd_threshold->add_option("--r", r, "squeezing parameter")->required();
    cmd_threshold->add_option("--kappa", kappa, "loss rate (both modes)")->required();
    cmd_threshold->add_option("--g", g, "gain rate (both modes)")->required();

    auto* cmd_verify = app.add_subcommand("verify", "run analytic-vs-Fock check suites");
    cmd_verify->add_option("--suite", suite, "suite name or 'all'");
    cmd_verify->add_option("--seed", seed, "RNG seed");
    cmd_verify->add_option("--cutoff", cutoff, "Fock cutoff")->check(CLI::Range(12, 200));
    cmd_verify->add_option("--output", output, "output path (default: stdout)");

    auto* cmd_wigner = app.add_subcommand("wigner-grid", "evolved Wigner function on a grid");
    add_channel(cmd_wigner);
    cmd_wigner->add_option("--q1", q1_spec, "axis spec VALUE or START:STOP:COUNT");
    cmd_wigner->add_option("--p1", p1_spec, "axis spec");
    cmd_wigner->add_option("--q2", q2_spec, "axis spec");
    cmd_wigner->add_option("--p2", p2_spec, "axis spec");
    cmd_wigner->add_option("--output", output, "output path (default: stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (cmd_point->parsed()) {
            const auto rep = cvneg::negativity::en_analytic(r, {kappa1, g1, kappa2, g2, t});
            print_report(std::cout, rep, as_json);
            return 0;
        }

        if (cmd_sweep->parsed()) {
            if (!(start < stop))
                throw std::invalid_argument("--start must be < --stop");
            std::vector<SweepRow> rows(count);
            const auto point = [&](int i) {
                const double v = start + (stop - start) * i / (count - 1);
                SweepRow row;
                row.var = var;
                row.value = v;
                if (var == "t")
                    row.rep = cvneg::negativity::en_analytic(r, {kappa1, g1, kappa2, g2, v});
                else if (var == "r")
                    row.rep = cvneg::negativity::en_analytic(v, {kappa1, g1, kappa2, g2, t});
                else if (var == "T")
                    row.rep = eval_transmission(r, v);
                else if (var == "kappa")
                    row.rep = cvneg::negativity::en_analytic(r, {v, g1, v, g2, t});
                else
                    row.rep = cvneg::negativity::en_analytic(r, {kappa1, v, kappa2, v, t});
                rows[i] = std::move(row);
            };
            if (var == "T" && (start < 0.0 || stop > 1.0))
                throw std::invalid_argument("--var T requires the grid inside [0, 1]");
            parallel_for(count, threads, point);
            std::ofstream file;
            auto& os = open_output(output, file);
            write_sweep(os, rows, format == "csv");
            return 0;
        }

        if (cmd_threshold->parsed()) {
            try {
                const double tc = cvneg::negativity::threshold_time(r, kappa, g);
                std::cout << "t_c : " << num17(tc) << "\n";
            } catch (const cvneg::no_threshold&) {
                std::cout << "no finite threshold: pure loss keeps E_N > 0 for all finite t\n";
            }
            return 0;
        }

        if (cmd_verify->parsed()) {
            const auto reports = cvneg::verify::run_suite(suite, seed, cutoff);
            std::ofstream file;
            auto& os = open_output(output, file);
            bool all_pass = true;
            for (const auto& rep : reports) {
                os << rep.to_json_line() << "\n";
                all_pass = all_pass && rep.pass;
            }
            return all_pass ? 0 : 1;
        }

        if (cmd_wigner->parsed()) {
            const auto q1 = parse_axis(q1_spec, "q1"), p1 = parse_axis(p1_spec, "p1");
            const auto q2 = parse_axis(q2_spec, "q2"), p2 = parse_axis(p2_spec, "p2");
            const auto params =
                cvneg::phase_space::lambda_params(r, {kappa1, g1, kappa2, g2, t});
            std::ofstream file;
            auto& os = open_output(output, file);
            os << "q1,p1,q2,p2,w\n";
            const double rt2 = std::numbers::sqrt2;
            for (int i1 = 0; i1 < q1.count; ++i1)
                for (int j1 = 0; j1 < p1.count; ++j1)
                    for (int i2 = 0; i2 < q2.count; ++i2)
                        for (int j2 = 0; j2 < p2.count; ++j2) {
                            const std::complex<double> a1(q1.at(i1) / rt2, p1.at(j1) / rt2);
                            const std::complex<double> a2(q2.at(i2) / rt2, p2.at(j2) / rt2);
                            const double w =
                                cvneg::phase_space::evolved_wigner_point(params, a1, a2);
                            os << num17(q1.at(i1)) << ',' << num17(p1.at(j1)) << ','
                               << num17(q2.at(i2)) << ',' << num17(p2.at(j2)) << ','
                               << num17(w) << '\n';
                        }
            return 0;
        }
    } catch (const std::ios_base::failure& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
