// special.hpp — Bose occupations and Lambert-W / product-log evaluation

#pragma once

#include <utility>

#include "qhe/params.hpp"

namespace qhe {

// Thermal occupation 1/(exp(omega/T) - 1). Stable at both ends: expm1 for
// small omega/T, plain exp(-omega/T) underflow for large. Throws
// std::domain_error unless omega > 0 and T > 0.
double bose_occupation(double omega, double T);

// Occupations of the split hot transitions, (n_h1, n_h2) at omega_h +- half_gap.
std::pair<double, double> occupations_hot_pair(const EngineParams4& params);

// (Gamma_h1 + Gamma_h2 + 2 p sqrt(Gamma_h1 Gamma_h2)) / (2 Gamma_c).
// Gamma_h1, Gamma_h2 >= 0; Gamma_c > 0; |p| <= 1.
double gamma_p(double Gamma_h1, double Gamma_h2, double p, double Gamma_c);

// Principal branch W0(x), x >= -1/e. Halley iteration, branch-aware start,
// converges to |w e^w - x| ~ 1e-12 relative.
double lambert_w0(double x);

// Solves w e^w = e^z for real z without forming e^z, i.e. w + ln w = z for
// large z. Covers arguments far beyond double range (z up to ~1e8).
double product_log_exp(double z);

} // namespace qhe
