// engine_coherent.cpp — Four-level engine with noise-induced coherence

#include "qhe/engine_coherent.hpp"

#include <cmath>

#include "qhe/errors.hpp"
#include "qhe/special.hpp"
#include "steady_detail.hpp"

namespace qhe::coherent {

DensityMatrix4 DensityMatrix4::from_vector(const Vec10& v) {
    DensityMatrix4 r;
    r.rho_11 = v(0);
    r.rho_22 = v(1);
    r.rho_00 = v(2);
    r.rho_gg = v(3);
    r.rho_12 = {v(4), v(5)};
    r.rho_10 = {v(6), v(7)};
    r.rho_20 = {v(8), v(9)};
    return r;
}

Vec10 DensityMatrix4::to_vector() const {
    Vec10 v;
    v << rho_11, rho_22, rho_00, rho_gg, rho_12.real(), rho_12.imag(), rho_10.real(),
        rho_10.imag(), rho_20.real(), rho_20.imag();
    return v;
}

// Rows/cols ordered (rho_11, rho_22, rho_00, rho_gg, Re rho_12, Im rho_12,
// Re rho_10, Im rho_10, Re rho_20, Im rho_20). Written in the frame rotating
// with the drive, so the upper doublet appears at detunings +/- half_gap and
// rho_12 precesses at 2*half_gap. The cross terms proportional to
// s = p sqrt(Gamma_h1 Gamma_h2) couple the doublet through the shared hot
// bath; they carry the opposite branch's occupation factor.
Mat10 build_generator4(const EngineParams4& params) {
    params.validate();
    const auto [nh1, nh2] = occupations_hot_pair(params);
    const double nc = bose_occupation(params.omega_c, params.T_c);
    const double g1 = params.Gamma_h1;
    const double g2 = params.Gamma_h2;
    const double gc = params.Gamma_c;
    const double lam = params.lambda;
    const double hg = params.half_gap;
    const double s = params.p * std::sqrt(g1 * g2);
    const double d12 = g1 * (nh1 + 1.0) + g2 * (nh2 + 1.0) + params.gamma_12;
    const double d10 = gc * (nc + 1.0) + g1 * (nh1 + 1.0);
    const double d20 = gc * (nc + 1.0) + g2 * (nh2 + 1.0);

    enum { i11, i22, i00, igg, ia, ib, ix1, iy1, ix2, iy2 };
    Mat10 L = Mat10::Zero();
    L(i11, i11) = -2.0 * g1 * (nh1 + 1.0);
    L(i11, igg) = 2.0 * g1 * nh1;
    L(i11, iy1) = -2.0 * lam;
    L(i11, ia) = -2.0 * s * (nh2 + 1.0);
    L(i22, i22) = -2.0 * g2 * (nh2 + 1.0);
    L(i22, igg) = 2.0 * g2 * nh2;
    L(i22, iy2) = -2.0 * lam;
    L(i22, ia) = -2.0 * s * (nh1 + 1.0);
    L(i00, i00) = -2.0 * gc * (nc + 1.0);
    L(i00, igg) = 2.0 * gc * nc;
    L(i00, iy1) = 2.0 * lam;
    L(i00, iy2) = 2.0 * lam;
    L.row(igg) = -(L.row(i11) + L.row(i22) + L.row(i00));
    L(ia, ia) = -d12;
    L(ia, ib) = 2.0 * hg;
    L(ia, iy1) = -lam;
    L(ia, iy2) = -lam;
    L(ia, i11) = -s * (nh1 + 1.0);
    L(ia, i22) = -s * (nh2 + 1.0);
    L(ia, igg) = s * (nh1 + nh2);
    L(ib, ia) = -2.0 * hg;
    L(ib, ib) = -d12;
    L(ib, ix1) = lam;
    L(ib, ix2) = -lam;
    L(ix1, ix1) = -d10;
    L(ix1, iy1) = hg;
    L(ix1, ib) = -lam;
    L(ix1, ix2) = -s * (nh2 + 1.0);
    L(iy1, ix1) = -hg;
    L(iy1, iy1) = -d10;
    L(iy1, i11) = lam;
    L(iy1, i00) = -lam;
    L(iy1, ia) = lam;
    L(iy1, iy2) = -s * (nh2 + 1.0);
    L(ix2, ix2) = -d20;
    L(ix2, iy2) = -hg;
    L(ix2, ib) = lam;
    L(ix2, ix1) = -s * (nh1 + 1.0);
    L(iy2, ix2) = hg;
    L(iy2, iy2) = -d20;
    L(iy2, i22) = lam;
    L(iy2, i00) = -lam;
    L(iy2, ia) = lam;
    L(iy2, iy1) = -s * (nh1 + 1.0);
    return L;
}

DensityMatrix4 steady_state4(const EngineParams4& params) {
    const Mat10 L = build_generator4(params);
    return DensityMatrix4::from_vector(detail::steady_solve<10>(L, 4));
}

DensityMatrix4 evolve4(const EngineParams4& params, const DensityMatrix4& rho0,
                       double t_final, double dt) {
    if (!(t_final >= 0.0) || !std::isfinite(t_final))
        throw std::domain_error("evolve4: t_final must be finite and non-negative");
    if (!(dt > 0.0) || !std::isfinite(dt))
        throw std::domain_error("evolve4: dt must be finite and positive");
    const Mat10 L = build_generator4(params);
    if (dt > 0.1 / detail::max_rate_scale<10>(L))
        throw StepTooLarge("evolve4: dt exceeds 0.1 / max rate scale");
    if (t_final == 0.0) return rho0;
    return DensityMatrix4::from_vector(
        detail::rk4_evolve<10>(L, rho0.to_vector(), t_final, dt));
}

CoherentObservables observables4(const EngineParams4& params, const DensityMatrix4& rho) {
    params.validate();
    const double nc = bose_occupation(params.omega_c, params.T_c);
    const double hg = params.half_gap;
    const double w10 = params.omega_h + hg - params.omega_c;
    const double w20 = params.omega_h - hg - params.omega_c;
    const double y1 = rho.rho_10.imag();
    const double y2 = rho.rho_20.imag();

    CoherentObservables obs;
    obs.power = -2.0 * params.lambda * (w10 * y1 + w20 * y2);
    obs.power_out = -obs.power;
    // Hot current through the drive-dressed doublet; equals the bath-side
    // expression on the steady state.
    obs.heat_hot =
        2.0 * params.lambda * ((params.omega_h + hg) * y1 + (params.omega_h - hg) * y2);
    obs.heat_cold = -params.omega_c * 2.0 * params.Gamma_c *
                    ((nc + 1.0) * rho.rho_00 - nc * rho.rho_gg);
    if (obs.heat_hot == 0.0)
        throw EfficiencyUndefined("observables4: no heat intake, efficiency undefined");
    obs.efficiency = -obs.power / obs.heat_hot;
    const double ysum = y1 + y2;
    if (ysum == 0.0)
        throw XiUndefined("observables4: coherence asymmetry undefined, y1 + y2 = 0");
    obs.xi = (y1 - y2) / ysum;
    obs.efficiency_q = 1.0 - params.omega_c / (params.omega_h + hg * obs.xi);
    return obs;
}

} // namespace qhe::coherent
