// params.cpp — Parameter validation

#include "qhe/params.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace qhe {

namespace {

void require(bool ok, const std::string& what) {
    if (!ok) throw std::domain_error("invalid engine parameters: " + what);
}

bool finite(double x) { return std::isfinite(x); }

} // namespace

void EngineParams3::validate() const {
    require(finite(omega_h) && finite(omega_c) && finite(lambda) && finite(Gamma_h) &&
                finite(Gamma_c) && finite(T_h) && finite(T_c) && finite(detuning),
            "non-finite field");
    require(omega_c > 0.0, "omega_c must be > 0");
    require(omega_h > omega_c, "omega_h must exceed omega_c (engine condition)");
    require(lambda >= 0.0, "lambda must be >= 0");
    require(Gamma_h >= 0.0, "Gamma_h must be >= 0");
    require(Gamma_c > 0.0, "Gamma_c must be > 0");
    require(T_h > 0.0 && T_c > 0.0, "temperatures must be > 0");
}

bool EngineParams3::weak_dissipation() const {
    return Gamma_h < omega_h && Gamma_c < omega_c;
}

void EngineParams4::validate() const {
    require(finite(omega_h) && finite(omega_c) && finite(lambda) && finite(Gamma_h1) &&
                finite(Gamma_h2) && finite(Gamma_c) && finite(T_h) && finite(T_c) &&
                finite(half_gap) && finite(p) && finite(gamma_12),
            "non-finite field");
    require(omega_c > 0.0, "omega_c must be > 0");
    require(omega_h > omega_c, "omega_h must exceed omega_c (engine condition)");
    require(half_gap >= 0.0, "half_gap must be >= 0");
    require(omega_h - half_gap > 0.0, "omega_h - half_gap must be > 0");
    require(lambda >= 0.0, "lambda must be >= 0");
    require(Gamma_h1 >= 0.0 && Gamma_h2 >= 0.0, "hot rates must be >= 0");
    require(Gamma_c > 0.0, "Gamma_c must be > 0");
    require(T_h > 0.0 && T_c > 0.0, "temperatures must be > 0");
    require(p >= -1.0 && p <= 1.0, "alignment p must lie in [-1, 1]");
    require(gamma_12 >= 0.0, "gamma_12 must be >= 0");
}

bool EngineParams4::weak_dissipation() const {
    return Gamma_h1 < omega_h && Gamma_h2 < omega_h && Gamma_c < omega_c;
}

void ReducedParams::validate() const {
    require(finite(tau) && finite(c) && finite(gamma) && finite(gamma_p), "non-finite field");
    require(tau > 0.0 && tau <= 1.0, "tau must lie in (0, 1]");
    require(c > 1.0, "c must be > 1");
    require(gamma >= 0.0, "gamma must be >= 0");
    require(gamma_p >= 0.0, "gamma_p must be >= 0");
}

} // namespace qhe
