#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cvneg/params.hpp"

// Oracle cross-check harness: every closed-form claim of the analytic layers
// is compared against the truncated Fock-space brute force, with structured
// pass/fail reports. Checks never throw on a failed comparison; they report.
namespace cvneg::verify {

struct CheckReport {
    std::string name;
    std::string params;     // parameter echo, enough to reproduce the run
    double max_abs_error = 0.0;
    double tolerance = 0.0;
    bool pass = false;
    int cutoff = 0;
    int steps = 0;
    int trials = 0;
    std::uint64_t seed = 0;

    // One JSON object per line, fixed key order, no timestamps: identical
    // inputs serialize byte-identically.
    std::string to_json_line() const;
};

struct GridSpec {
    int points_per_axis = 5;
    double half_width = 1.2; // grid over (q,p) in [-hw, hw]
};

// Random normally ordered polynomials sum c_jk a^{+j} a^k (degrees <= 4),
// single- and two-mode: transpose/partial transpose must equal the polynomial
// with the transposed mode's exponents swapped.
CheckReport check_transpose_lemma(std::uint64_t seed, int trials, int cutoff);

// Closed-form transposes of the displacement, single-mode squeeze and Wigner
// operators: D(a)^T = D(-a*), S1(xi)^T = S1(-xi*),
// Delta(a)^T = Delta at the conjugated point.
CheckReport check_operator_transposes(std::uint64_t seed, int trials, int cutoff);

// Transposes of random single-mode density operators stay positive
// (min eigenvalue >= -1e-10).
CheckReport check_transpose_positivity(std::uint64_t seed, int trials, int cutoff);

// Partial transpose of the two-mode squeezer equals cos(theta) B(theta, phi)
// with sin(theta) = tanh r, entrywise.
CheckReport check_pt_squeezer(const std::vector<double>& r_values, int cutoff);

// Characteristic-function reflection chi -> chi(-q, p) under transpose and
// chi -> chi(q1,p1,-q2,p2) under partial transpose; Wigner reflections
// W -> W(q, -p) and W -> W(q1,p1,q2,-p2); trace and hermiticity preservation.
// The state is a TMSV (and a single-mode squeezed state), optionally
// decohered by the channel.
CheckReport check_reflections(double r, const std::optional<ChannelParams>& ch,
                              const GridSpec& grid, int cutoff);

// Fock-moment covariance before/after (partial) transpose against the
// sign-flip conjugations, including the <Q1 P2> sign flip.
CheckReport check_covariance(double r, const std::optional<ChannelParams>& ch,
                             int cutoff);

// End-to-end channel comparison: (i) Lindblad-evolved TMSV vs the normally
// ordered Gaussian density operator, entrywise; (ii) Fock Wigner points vs the
// closed-form evolved Wigner function and its quadrature route; (iii) Fock log
// negativity vs the analytic pipeline.
CheckReport check_channel_pipeline(double r, const ChannelParams& ch, int cutoff,
                                   int steps);

// Closed-form special cases: ideal TMSV value 2r/ln 2 on both routes,
// bi-symmetric loss formula, single-side loss consistency, threshold time as
// the zero of the analytic pipeline.
CheckReport check_special_cases(int cutoff);

// Verifies that every claim in coverage_manifest() maps to at least one check
// registered in the default suite.
CheckReport check_coverage();

// Claim -> check-name coverage ledger for the default suite.
struct ClaimCoverage {
    std::string claim;
    std::vector<std::string> checks;
};
const std::vector<ClaimCoverage>& coverage_manifest();

// Suites runnable by name; "all" runs every suite in a fixed order.
std::vector<std::string> suite_names();
std::vector<CheckReport> run_suite(const std::string& name, std::uint64_t seed,
                                   int cutoff);

} // namespace cvneg::verify
