// engine_ssd.hpp — Steady state and observables of the three-level maser engine

#pragma once

#include <complex>

#include <Eigen/Dense>

#include "qhe/params.hpp"

namespace qhe::ssd {

using Vec5 = Eigen::Matrix<double, 5, 1>;
using Mat5 = Eigen::Matrix<double, 5, 5>;

// State stored as real populations plus one complex coherence; rho_01 is
// the conjugate of rho_10 and not stored.
struct DensityMatrix3 {
    double rho_11;
    double rho_00;
    double rho_gg;
    std::complex<double> rho_10;

    // Layout of the real 5-vector: (rho_11, rho_00, rho_gg, Re rho_10, Im rho_10).
    static DensityMatrix3 from_vector(const Vec5& v);
    Vec5 to_vector() const;
    double trace() const { return rho_11 + rho_00 + rho_gg; }
};

struct Observables {
    double power;       // negative while the engine delivers work output
    double heat_hot;    // Q_h rate, positive when heat flows in from the hot bath
    double heat_cold;   // Q_c rate
    double efficiency;  // -power / heat_hot
    double power_out;   // -power, positive output for convenience
};

// Generator of d/dt v = L v in the rotating frame, acting on the real
// 5-vector. Population columns sum to zero exactly (trace conservation).
Mat5 build_generator3(const EngineParams3& params);

// Kernel of the generator normalized to unit trace, via trace-row
// replacement, full-pivot LU and iterative refinement. Throws
// SingularGenerator when rank deficient beyond the trace redundancy.
DensityMatrix3 steady_state3(const EngineParams3& params);

// Fixed-step RK4 of the same generator; test oracle, not a production path.
// Requires dt <= 0.1 / (max rate scale), else throws StepTooLarge.
DensityMatrix3 evolve3(const EngineParams3& params, const DensityMatrix3& rho0,
                       double t_final, double dt);

// Valid for any state, not only the steady one: heat fluxes come from the
// per-bath dissipator traces. Throws EfficiencyUndefined when heat_hot == 0.
Observables observables3(const EngineParams3& params, const DensityMatrix3& rho);

} // namespace qhe::ssd
