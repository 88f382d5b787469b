// errors.hpp — Exception types shared across the engine library

#pragma once

#include <stdexcept>

namespace qhe {

// Steady-state linear system is rank-deficient beyond the trace redundancy.
// Happens for parameter corners that conserve more than probability, e.g.
// p = +-1 with equal hot rates and zero splitting (a fully decoupled dark state).
struct SingularGenerator : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Fixed-step integrator asked to run with dt above the stability guard.
struct StepTooLarge : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Requested efficiency with zero hot heat flux.
struct EfficiencyUndefined : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Coherence asymmetry factor requested but its denominator vanishes.
struct XiUndefined : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Power maximization has no admissible search window (e.g. tau >= 1).
struct NoOperatingPoint : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace qhe
