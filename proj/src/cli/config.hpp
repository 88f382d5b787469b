// config.hpp — Experiment configuration: defaults, file parsing, config echo

#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "qhe/optimizer.hpp"
#include "qhe/params.hpp"

namespace qhe::cli {

enum class EngineKind { ThreeLevel, FourLevel };
enum class ExperimentKind { Fig2, Fig3HighT, Fig4LowT, BoundsTable, PowerBounds, CustomSweep };

// Parse / semantic problems in a config file; message carries "line N:" context.
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// All physical quantities in units of Gamma_c (the config may still rescale
// Gamma_c itself; the defaults keep it at 1).
struct Config {
    ExperimentKind experiment{ExperimentKind::CustomSweep};
    EngineKind engine{EngineKind::ThreeLevel};
    Scheme scheme{Scheme::FixedHot};

    double tau_min{0.05};
    double tau_max{0.95};
    int tau_count{50};

    double omega_fixed{3.0};
    double lambda{1000.0};
    double T_h{100.0};
    double Gamma_c{1.0};
    double Gamma_h{1.0};   // three-level hot rate
    double Gamma_h1{1.0};  // four-level doublet rates
    double Gamma_h2{1.0};
    double p{0.0};
    double half_gap{0.0};
    double gamma_12{0.0};

    double tolerance{1e-10};
    bool extend_scan{false};
    int threads{1};
    bool svg{false};
    std::string out_dir{"out"};

    std::vector<opt::CurveOverride> curves;

    std::vector<double> tau_grid() const;

    // Engine parameter template for the optimizer; the scheme-varied
    // frequency and T_c hold placeholders that every evaluation overwrites.
    opt::EngineTemplate engine_template(Scheme scheme_used) const;

    // Regime warnings (never fatal): weak drive for high-T comparisons,
    // dissipation rates rivalling the transition frequencies.
    std::vector<std::string> validate_warnings() const;

    // Deterministic data-affecting echo: fixed key order, 17-digit values.
    // Excludes out_dir/threads/svg so reruns hash identically.
    std::string canonical_text() const;
};

// Figure defaults. Every number traces to a figure caption or to the
// operating-regime choices documented in the README.
Config default_config(ExperimentKind kind);

// Flat key = value lines, # comments, [curve NAME] sections holding the
// per-curve knobs (gamma, p, half_gap, delta_gamma_tilde). Throws
// ConfigError with the offending line number.
Config parse_config_file(const std::string& path);

const char* experiment_name(ExperimentKind kind);

} // namespace qhe::cli
