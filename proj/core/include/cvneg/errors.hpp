#pragma once

#include <stdexcept>
#include <string>

namespace cvneg {

// Truncated-basis tail mass above the configured tolerance.
struct cutoff_too_small : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Fixed-step integrator drifted beyond its trace/hermiticity budget.
struct step_size_too_large : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A quantity that is positive/real/convergent by construction came out otherwise.
struct numerical_inconsistency : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Input state outside the supported family (e.g. nonzero mean quadratures).
struct unsupported_state : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A documented invariant of the parameter pipeline was violated.
struct invariant_violation : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Disentanglement threshold requested for a channel that never disentangles.
struct no_threshold : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace cvneg
