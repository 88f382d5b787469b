// analytics.hpp — Closed-form efficiency-at-maximum-power results and bounds

#pragma once

#include <utility>

#include "qhe/params.hpp"

namespace qhe::analytics {

enum class AsymptoticRegime { SmallGamma, LargeGamma };
enum class PowerModel { ThreeLevel, FourLevel };

struct EmpBounds {
    double lower;   // eta_C / 2
    double cnca;    // 1 - sqrt(tau)
    double upper;   // eta_C / (2 - eta_C)
};

// High-temperature EMP with the hot frequency held fixed. Written in a
// cancellation-free form, exact down to gamma = 0 where it returns (1-tau)/2.
double emp_fixed_hot(double tau, double gamma);

// Same with the cold frequency held fixed; gamma = 0 gives 1 - sqrt(tau).
double emp_fixed_cold(double tau, double gamma);

EmpBounds emp_bounds(double tau);

// The four printed expansion formulas around gamma_p -> 0 / infinity.
// Leading-order anchors are exact limits; the printed correction terms are
// kept as published.
double emp_asymptotics(double tau, double gamma_p, AsymptoticRegime regime, Scheme scheme);

// Low-temperature EMP closed forms through the product log, alpha = omega/T
// of the held frequency.
double emp_lowT_fixed_hot(double tau, double alpha_h);
double emp_lowT_fixed_cold(double tau, double alpha_c);

// Dimensionless high-T power P / (Gamma_c * omega_fixed) at frequency ratio c.
// Positive inside the engine window 1 < c < 1/tau.
double power_highT(double tau, double gamma, double c, Scheme scheme);

// Magnitude of the maximum of power_highT over c.
double power_max_highT(double tau, double gamma, Scheme scheme);

// The two limiting expressions (gamma -> 0 term first, gamma -> infinity
// second for FixedHot; reversed roles for FixedCold). Both are approached
// from below; their minimum bounds the attainable maximum power.
std::pair<double, double> power_bounds_highT(double tau, double gamma, Scheme scheme);

// Leading low-temperature power, occupations already evaluated by the caller.
double power_lowT(double omega_h, double omega_c, double n_h, double n_c,
                  double gamma_or_gamma_p, PowerModel model);

// Published small-coupling expression 4 gamma / (3 gamma_p) relating the
// maximal powers of the two engine models at high temperature.
double power_ratio_highT_small_gamma(double gamma, double gamma_p);

} // namespace qhe::analytics
