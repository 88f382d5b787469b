// special.cpp — Bose occupations, Lambert W, product log

#include "qhe/special.hpp"

#include <cmath>
#include <stdexcept>

namespace qhe {

double bose_occupation(double omega, double T) {
    if (!(omega > 0.0) || !(T > 0.0))
        throw std::domain_error("bose_occupation: omega and T must be > 0");
    const double x = omega / T;
    if (x > 40.0) return std::exp(-x);    // 1/(e^x - 1) to machine precision here
    return 1.0 / std::expm1(x);
}

std::pair<double, double> occupations_hot_pair(const EngineParams4& params) {
    params.validate();
    return {bose_occupation(params.omega_h + params.half_gap, params.T_h),
            bose_occupation(params.omega_h - params.half_gap, params.T_h)};
}

double gamma_p(double Gamma_h1, double Gamma_h2, double p, double Gamma_c) {
    if (Gamma_h1 < 0.0 || Gamma_h2 < 0.0)
        throw std::domain_error("gamma_p: hot rates must be >= 0");
    if (!(Gamma_c > 0.0)) throw std::domain_error("gamma_p: Gamma_c must be > 0");
    if (p < -1.0 || p > 1.0) throw std::domain_error("gamma_p: |p| must be <= 1");
    return (Gamma_h1 + Gamma_h2 + 2.0 * p * std::sqrt(Gamma_h1 * Gamma_h2)) / (2.0 * Gamma_c);
}

namespace {

// Halley refinement of w e^w = x; guess must already be on the right branch.
double halley_w(double x, double w) {
    for (int i = 0; i < 50; ++i) {
        const double ew = std::exp(w);
        const double f = w * ew - x;
        if (f == 0.0) break;
        const double denom = ew * (w + 1.0) - (w + 2.0) * f / (2.0 * (w + 1.0));
        const double step = f / denom;
        w -= step;
        if (std::fabs(step) < 1e-14 * (1.0 + std::fabs(w))) break;
    }
    return w;
}

} // namespace

double lambert_w0(double x) {
    const double inv_e = std::exp(-1.0);
    if (x < -inv_e) {
        // tolerate rounding right at the branch point
        if (x > -inv_e * (1.0 + 4e-16)) return -1.0;
        throw std::domain_error("lambert_w0: argument below -1/e");
    }
    if (x == 0.0) return 0.0;
    double w;
    if (x < -0.25) {
        // branch-point series in p = sqrt(2(1 + e x))
        const double q = std::fmax(0.0, 2.0 * (1.0 + std::exp(1.0) * x));
        const double p = std::sqrt(q);
        w = -1.0 + p * (1.0 - p * (1.0 / 3.0 - p * (11.0 / 72.0 - p * 43.0 / 540.0)));
        // Halley's denominator vanishes at w = -1; the series alone is
        // already at machine precision this close in.
        if (p < 1e-3) return w;
    } else if (x < 3.0) {
        w = x / (1.0 + x);   // crude but inside the basin
    } else {
        const double l1 = std::log(x);
        const double l2 = std::log(l1);
        w = l1 - l2 + l2 / l1;
    }
    return halley_w(x, w);
}

double product_log_exp(double z) {
    if (!std::isfinite(z)) throw std::domain_error("product_log_exp: non-finite argument");
    if (z < 600.0) return lambert_w0(std::exp(z));
    // Newton on g(w) = w + ln w - z; seed from the asymptotic inverse.
    double w = z - std::log(z);
    for (int i = 0; i < 50; ++i) {
        const double step = (w + std::log(w) - z) / (1.0 + 1.0 / w);
        w -= step;
        if (std::fabs(step) < 1e-14 * (1.0 + std::fabs(w))) break;
    }
    return w;
}

} // namespace qhe
