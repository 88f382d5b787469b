// engine_coherent.hpp — Four-level engine with noise-induced coherence

#pragma once

#include <complex>

#include <Eigen/Dense>

#include "qhe/params.hpp"
#include "qhe/engine_ssd.hpp"

namespace qhe::coherent {

using Vec10 = Eigen::Matrix<double, 10, 1>;
using Mat10 = Eigen::Matrix<double, 10, 10>;

struct DensityMatrix4 {
    double rho_11;
    double rho_22;
    double rho_00;
    double rho_gg;
    std::complex<double> rho_12;
    std::complex<double> rho_10;
    std::complex<double> rho_20;

    // Layout: (rho_11, rho_22, rho_00, rho_gg,
    //          Re rho_12, Im rho_12, Re rho_10, Im rho_10, Re rho_20, Im rho_20).
    static DensityMatrix4 from_vector(const Vec10& v);
    Vec10 to_vector() const;
    double trace() const { return rho_11 + rho_22 + rho_00 + rho_gg; }
};

struct CoherentObservables {
    double power;
    double heat_hot;
    double heat_cold;
    double efficiency;    // -power / heat_hot
    double power_out;
    double xi;            // coherence asymmetry factor
    double efficiency_q;  // 1 - omega_c / (omega_h + half_gap * xi)
};

// Rotating frame at the laser frequency (tuned midway between the split
// transitions), so the two optical coherences carry detunings +-half_gap.
// Cross terms scale with p * sqrt(Gamma_h1 Gamma_h2).
Mat10 build_generator4(const EngineParams4& params);

DensityMatrix4 steady_state4(const EngineParams4& params);

DensityMatrix4 evolve4(const EngineParams4& params, const DensityMatrix4& rho0,
                       double t_final, double dt);

// heat_hot is the laser-side hot flux (exact at steady state, where it
// matches the hot-bath dissipator trace); heat_cold is the cold dissipator
// trace. Throws EfficiencyUndefined on zero heat_hot, XiUndefined when the
// xi denominator Im(rho_10) + Im(rho_20) vanishes.
CoherentObservables observables4(const EngineParams4& params, const DensityMatrix4& rho);

} // namespace qhe::coherent
