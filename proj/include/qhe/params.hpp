// params.hpp — Engine parameter sets and natural-unit conventions

#pragma once

namespace qhe {

// Units: hbar = k_B = 1. Rates, frequencies and temperatures all carry the
// same unit; the CLI fixes Gamma_c = 1 as the reference rate.
// Level scheme (3-level): ground |g> at energy 0, |0> at omega_c, |1> at omega_h.

enum class Scheme { FixedHot, FixedCold };

struct EngineParams3 {
    double omega_h;          // |1>-|g> transition frequency
    double omega_c;          // |0>-|g> transition frequency
    double lambda;           // laser coupling strength
    double Gamma_h;          // hot-bath dissipative rate
    double Gamma_c;          // cold-bath dissipative rate
    double T_h;              // hot-bath temperature
    double T_c;              // cold-bath temperature
    double detuning{0.0};    // laser detuning from the |1>-|0> gap

    // Throws std::domain_error on invalid values. lambda and Gamma_h may be
    // zero (field-free / decoupled limits used by tests); Gamma_c must not.
    void validate() const;

    // False when Gamma_h >= omega_h or Gamma_c >= omega_c, where the weak
    // dissipation assumption behind the master equation becomes doubtful.
    bool weak_dissipation() const;
};

struct EngineParams4 {
    double omega_h;          // mean frequency of the |1>,|2> doublet
    double omega_c;          // |0>-|g> transition frequency
    double lambda;           // laser coupling (same for both hot transitions)
    double Gamma_h1;         // hot-bath rate of |1>
    double Gamma_h2;         // hot-bath rate of |2>
    double Gamma_c;          // cold-bath rate
    double T_h;
    double T_c;
    double half_gap{0.0};    // half the |1>-|2> splitting; |1> sits above
    double p{0.0};           // dipole alignment factor, -1 <= p <= 1
    double gamma_12{0.0};    // extra pure dephasing of the |1>-|2> coherence

    void validate() const;
    bool weak_dissipation() const;
};

// Dimensionless ratios the closed-form results are written in.
struct ReducedParams {
    double tau;       // T_c / T_h, in (0,1]
    double c;         // omega_h / omega_c, > 1
    double gamma;     // Gamma_h / Gamma_c
    double gamma_p;   // coherence-weighted hot-to-cold ratio

    void validate() const;
};

} // namespace qhe
