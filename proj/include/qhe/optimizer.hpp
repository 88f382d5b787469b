// optimizer.hpp — Power maximization over the frequency ratio and EMP sweeps

#pragma once

#include <functional>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "qhe/params.hpp"

namespace qhe::opt {

using OptimizationScheme = Scheme;

// Either engine can be driven; the variant carries the parameter template
// whose fixed frequency, couplings and T_h are kept while c and T_c vary.
using EngineTemplate = std::variant<EngineParams3, EngineParams4>;

struct EmpResult {
    double c_star{0.0};      // maximizing frequency ratio
    double p_max{0.0};       // output power at c_star (positive when operating)
    double eta_star{0.0};    // efficiency at maximum power; 0 when not operating
    bool converged{false};
    int evaluations{0};      // steady-state solves spent
};

struct MaximizeOptions {
    double tol{1e-10};        // golden-section width termination, relative to c
    bool extend_scan{false};  // low-T runs: coarse-scan past 1/tau up to 50/tau
    int coarse_points{64};
};

// Deterministic scalar maximizer: coarse grid seed plus golden-section
// refinement inside the bracketing cell. Plateaus (|dP| < 1e-14) resolve to
// the smallest abscissa. Returns the argmax; *evaluations counts calls.
double argmax_scalar(const std::function<double(double)>& f, double a, double b,
                     double tol, int coarse_points, int* evaluations);

// EMP at maximum power for the given engine template and scheme. The search
// window is c in (1 + 1e-6, 1/tau - 1e-6); an empty window throws
// NoOperatingPoint. A scan whose best power is <= 0 returns converged=false
// with eta_star = 0 (non-operational, the figure convention).
EmpResult maximize_power(const EngineTemplate& engine, OptimizationScheme scheme,
                         double tau, const MaximizeOptions& options = {});

struct SweepRow {
    double tau;
    double eta_carnot;
    double eta_star;
    double eta_star_normalized;   // filled by the figure pipelines
    double p_max;
    double c_star;
    double bound_lower;
    double bound_cnca;
    double bound_upper;
    std::string flags;            // "ok" or "non-operational"
};

// One curve variation: any subset of the knobs the figures vary.
struct CurveOverride {
    std::string label;
    std::optional<double> gamma;              // hot/cold rate ratio
    std::optional<double> p;
    std::optional<double> half_gap;
    std::optional<double> delta_gamma_tilde;  // (Gamma_h1 - Gamma_h2) / Gamma_c
};

// Rows ordered by (override, tau). Rows are independent; `threads` > 1
// evaluates them in a worker pool and merges by index, so the output is
// identical to the sequential run.
std::vector<SweepRow> sweep_emp(const EngineTemplate& engine, OptimizationScheme scheme,
                                const std::vector<double>& tau_grid,
                                const std::vector<CurveOverride>& overrides,
                                const MaximizeOptions& options = {}, int threads = 1);

// Applies one override to a template (exposed for the figure pipelines).
EngineTemplate apply_override(const EngineTemplate& engine, const CurveOverride& ov);

} // namespace qhe::opt
