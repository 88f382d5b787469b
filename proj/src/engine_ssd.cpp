// engine_ssd.cpp — Three-level single-shot-drive engine

#include "qhe/engine_ssd.hpp"

#include <cmath>

#include "qhe/errors.hpp"
#include "qhe/special.hpp"
#include "steady_detail.hpp"

namespace qhe::ssd {

DensityMatrix3 DensityMatrix3::from_vector(const Vec5& v) {
    DensityMatrix3 r;
    r.rho_11 = v(0);
    r.rho_00 = v(1);
    r.rho_gg = v(2);
    r.rho_10 = {v(3), v(4)};
    return r;
}

Vec5 DensityMatrix3::to_vector() const {
    Vec5 v;
    v << rho_11, rho_00, rho_gg, rho_10.real(), rho_10.imag();
    return v;
}

// Rows/cols ordered (rho_11, rho_00, rho_gg, Re rho_10, Im rho_10). The
// ground-state row is assembled as minus the sum of the excited rows so the
// population columns cancel exactly in floating point.
Mat5 build_generator3(const EngineParams3& params) {
    params.validate();
    const double nh = bose_occupation(params.omega_h, params.T_h);
    const double nc = bose_occupation(params.omega_c, params.T_c);
    const double gh = params.Gamma_h;
    const double gc = params.Gamma_c;
    const double lam = params.lambda;
    const double det = params.detuning;
    const double g = gh * (nh + 1.0) + gc * (nc + 1.0); // coherence decay rate

    Mat5 L = Mat5::Zero();
    // d rho_11 = -2 lam y - 2 gh [(nh+1) rho_11 - nh rho_gg]
    L(0, 0) = -2.0 * gh * (nh + 1.0);
    L(0, 2) = 2.0 * gh * nh;
    L(0, 4) = -2.0 * lam;
    // d rho_00 = +2 lam y - 2 gc [(nc+1) rho_00 - nc rho_gg]
    L(1, 1) = -2.0 * gc * (nc + 1.0);
    L(1, 2) = 2.0 * gc * nc;
    L(1, 4) = 2.0 * lam;
    L.row(2) = -(L.row(0) + L.row(1));
    // d x = -g x + det y ; d y = -det x - g y + lam (rho_11 - rho_00)
    L(3, 3) = -g;
    L(3, 4) = det;
    L(4, 0) = lam;
    L(4, 1) = -lam;
    L(4, 3) = -det;
    L(4, 4) = -g;
    return L;
}

DensityMatrix3 steady_state3(const EngineParams3& params) {
    const Mat5 L = build_generator3(params);
    return DensityMatrix3::from_vector(detail::steady_solve<5>(L, 3));
}

DensityMatrix3 evolve3(const EngineParams3& params, const DensityMatrix3& rho0,
                       double t_final, double dt) {
    if (!(t_final >= 0.0) || !std::isfinite(t_final))
        throw std::domain_error("evolve3: t_final must be finite and non-negative");
    if (!(dt > 0.0) || !std::isfinite(dt))
        throw std::domain_error("evolve3: dt must be finite and positive");
    const Mat5 L = build_generator3(params);
    if (dt > 0.1 / detail::max_rate_scale<5>(L))
        throw StepTooLarge("evolve3: dt exceeds 0.1 / max rate scale");
    if (t_final == 0.0) return rho0;
    return DensityMatrix3::from_vector(detail::rk4_evolve<5>(L, rho0.to_vector(), t_final, dt));
}

Observables observables3(const EngineParams3& params, const DensityMatrix3& rho) {
    params.validate();
    const double nh = bose_occupation(params.omega_h, params.T_h);
    const double nc = bose_occupation(params.omega_c, params.T_c);
    Observables obs;
    // Bath-side currents, valid on or off the steady state.
    obs.heat_hot =
        -params.omega_h * 2.0 * params.Gamma_h * ((nh + 1.0) * rho.rho_11 - nh * rho.rho_gg);
    obs.heat_cold =
        -params.omega_c * 2.0 * params.Gamma_c * ((nc + 1.0) * rho.rho_00 - nc * rho.rho_gg);
    obs.power = -2.0 * params.lambda * (params.omega_h - params.omega_c) * rho.rho_10.imag();
    obs.power_out = -obs.power;
    if (obs.heat_hot == 0.0)
        throw EfficiencyUndefined("observables3: no heat intake, efficiency undefined");
    obs.efficiency = -obs.power / obs.heat_hot;
    return obs;
}

} // namespace qhe::ssd
