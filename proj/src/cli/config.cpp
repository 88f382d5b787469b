// config.cpp — Experiment configuration parsing and defaults

#include "config.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace qhe::cli {

namespace {

std::string trim(const std::string& s) {
    std::size_t b = 0;
    std::size_t e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

std::string g17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

double parse_double(const std::string& value, int line) {
    char* end = nullptr;
    const double v = std::strtod(value.c_str(), &end);
    if (end == value.c_str() || *end != '\0' || !std::isfinite(v))
        throw ConfigError("line " + std::to_string(line) + ": not a finite number: '" +
                          value + "'");
    return v;
}

int parse_int(const std::string& value, int line) {
    const double v = parse_double(value, line);
    if (v != std::floor(v) || std::fabs(v) > 1e9)
        throw ConfigError("line " + std::to_string(line) + ": not an integer: '" + value +
                          "'");
    return static_cast<int>(v);
}

bool parse_bool(const std::string& value, int line) {
    if (value == "true" || value == "1" || value == "yes") return true;
    if (value == "false" || value == "0" || value == "no") return false;
    throw ConfigError("line " + std::to_string(line) + ": not a boolean: '" + value + "'");
}

} // namespace

const char* experiment_name(ExperimentKind kind) {
    switch (kind) {
        case ExperimentKind::Fig2: return "fig2";
        case ExperimentKind::Fig3HighT: return "fig3-hight";
        case ExperimentKind::Fig4LowT: return "fig4-lowt";
        case ExperimentKind::BoundsTable: return "bounds";
        case ExperimentKind::PowerBounds: return "power-bounds";
        case ExperimentKind::CustomSweep: return "sweep";
    }
    return "unknown";
}

std::vector<double> Config::tau_grid() const {
    if (tau_count < 1) throw ConfigError("tau_count must be at least 1");
    if (!(tau_min > 0.0) || !(tau_max < 1.0) || !(tau_min <= tau_max))
        throw ConfigError("tau grid must satisfy 0 < tau_min <= tau_max < 1");
    std::vector<double> grid;
    grid.reserve(tau_count);
    if (tau_count == 1) {
        grid.push_back(tau_min);
        return grid;
    }
    const double h = (tau_max - tau_min) / (tau_count - 1);
    for (int i = 0; i < tau_count; ++i)
        grid.push_back(i == tau_count - 1 ? tau_max : tau_min + i * h);
    return grid;
}

opt::EngineTemplate Config::engine_template(Scheme scheme_used) const {
    // Placeholders for the varied frequency and T_c; every power evaluation
    // rebuilds them from (c, tau).
    const double wh = scheme_used == Scheme::FixedHot ? omega_fixed : 2.0 * omega_fixed;
    const double wc = scheme_used == Scheme::FixedHot ? omega_fixed / 2.0 : omega_fixed;
    if (engine == EngineKind::ThreeLevel) {
        EngineParams3 e{};
        e.omega_h = wh;
        e.omega_c = wc;
        e.lambda = lambda;
        e.Gamma_h = Gamma_h;
        e.Gamma_c = Gamma_c;
        e.T_h = T_h;
        e.T_c = T_h / 2.0;
        e.detuning = 0.0;
        return e;
    }
    EngineParams4 e{};
    e.omega_h = wh;
    e.omega_c = wc;
    e.lambda = lambda;
    e.Gamma_h1 = Gamma_h1;
    e.Gamma_h2 = Gamma_h2;
    e.Gamma_c = Gamma_c;
    e.T_h = T_h;
    e.T_c = T_h / 2.0;
    e.half_gap = half_gap;
    e.p = p;
    e.gamma_12 = gamma_12;
    return e;
}

std::vector<std::string> Config::validate_warnings() const {
    std::vector<std::string> w;
    const double gmax =
        engine == EngineKind::ThreeLevel ? Gamma_h : std::fmax(Gamma_h1, Gamma_h2);
    if (lambda < 10.0 * std::fmax(Gamma_c, gmax))
        w.push_back("strong-coupling assumption violated: lambda below 10x the dissipative "
                    "rates; analytic comparisons lose accuracy");
    if (gmax > omega_fixed || Gamma_c > omega_fixed)
        w.push_back("weak-dissipation assumption doubtful: a bath rate reaches the "
                    "transition frequency scale");
    if (T_h >= 10.0 * omega_fixed && lambda < 100.0 * Gamma_c)
        w.push_back("high-temperature run with a modest drive: increase lambda for "
                    "closer agreement with closed forms");
    return w;
}

std::string Config::canonical_text() const {
    std::ostringstream os;
    os << "experiment = " << experiment_name(experiment) << "\n";
    os << "engine = " << (engine == EngineKind::ThreeLevel ? "three-level" : "four-level")
       << "\n";
    os << "scheme = " << (scheme == Scheme::FixedHot ? "fixed-hot" : "fixed-cold") << "\n";
    os << "tau_min = " << g17(tau_min) << "\n";
    os << "tau_max = " << g17(tau_max) << "\n";
    os << "tau_count = " << tau_count << "\n";
    os << "omega_fixed = " << g17(omega_fixed) << "\n";
    os << "lambda = " << g17(lambda) << "\n";
    os << "T_h = " << g17(T_h) << "\n";
    os << "Gamma_c = " << g17(Gamma_c) << "\n";
    if (engine == EngineKind::ThreeLevel) {
        os << "Gamma_h = " << g17(Gamma_h) << "\n";
    } else {
        os << "Gamma_h1 = " << g17(Gamma_h1) << "\n";
        os << "Gamma_h2 = " << g17(Gamma_h2) << "\n";
        os << "p = " << g17(p) << "\n";
        os << "half_gap = " << g17(half_gap) << "\n";
        os << "gamma_12 = " << g17(gamma_12) << "\n";
    }
    os << "tolerance = " << g17(tolerance) << "\n";
    os << "extend_scan = " << (extend_scan ? "true" : "false") << "\n";
    for (const auto& c : curves) {
        os << "[curve " << c.label << "]\n";
        if (c.gamma) os << "gamma = " << g17(*c.gamma) << "\n";
        if (c.p) os << "p = " << g17(*c.p) << "\n";
        if (c.half_gap) os << "half_gap = " << g17(*c.half_gap) << "\n";
        if (c.delta_gamma_tilde)
            os << "delta_gamma_tilde = " << g17(*c.delta_gamma_tilde) << "\n";
    }
    return os.str();
}

Config default_config(ExperimentKind kind) {
    Config cfg;
    cfg.experiment = kind;
    switch (kind) {
        case ExperimentKind::Fig2:
            // High-temperature three-level EMP curves at two rate ratios.
            cfg.engine = EngineKind::ThreeLevel;
            cfg.omega_fixed = 3.0;
            cfg.lambda = 1000.0;
            cfg.T_h = 100.0;
            cfg.curves = {{.label = "gamma=1", .gamma = 1.0},
                          {.label = "gamma=0.05", .gamma = 0.05}};
            break;
        case ExperimentKind::Fig3HighT:
            // Four-level high-temperature panels: coherence ordering plus the
            // nondegenerate split-doublet variants.
            cfg.engine = EngineKind::FourLevel;
            cfg.omega_fixed = 3.0;
            cfg.lambda = 1000.0;
            cfg.T_h = 100.0;
            cfg.curves = {{.label = "p=0.9", .p = 0.9},
                          {.label = "p=0", .p = 0.0},
                          {.label = "p=-0.9", .p = -0.9},
                          {.label = "nondeg+", .p = 0.9, .half_gap = 0.1,
                           .delta_gamma_tilde = 0.01},
                          {.label = "nondeg-", .p = 0.9, .half_gap = 0.1,
                           .delta_gamma_tilde = -0.01}};
            break;
        case ExperimentKind::Fig4LowT:
            // Same curve set in the low-temperature regime; alpha = omega/T
            // is 10 for the held frequency at tau = 1 and grows as 1/tau on
            // the cold side.
            cfg.engine = EngineKind::FourLevel;
            cfg.omega_fixed = 1.0;
            cfg.lambda = 10.0;
            cfg.T_h = 0.1;
            cfg.extend_scan = true;
            cfg.curves = {{.label = "p=0.9", .p = 0.9},
                          {.label = "p=0", .p = 0.0},
                          {.label = "p=-0.9", .p = -0.9},
                          {.label = "nondeg+", .p = 0.9, .half_gap = 0.1,
                           .delta_gamma_tilde = 0.01},
                          {.label = "nondeg-", .p = 0.9, .half_gap = 0.1,
                           .delta_gamma_tilde = -0.01}};
            break;
        case ExperimentKind::BoundsTable:
            cfg.tau_count = 50;
            break;
        case ExperimentKind::PowerBounds:
            cfg.tau_count = 19;
            break;
        case ExperimentKind::CustomSweep:
            break;
    }
    return cfg;
}

Config parse_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file: " + path);

    Config cfg = default_config(ExperimentKind::CustomSweep);
    cfg.curves.clear();
    opt::CurveOverride* cur = nullptr;

    std::string raw;
    int line = 0;
    while (std::getline(in, raw)) {
        ++line;
        std::string s = trim(raw);
        if (s.empty() || s[0] == '#') continue;

        if (s.front() == '[') {
            if (s.back() != ']')
                throw ConfigError("line " + std::to_string(line) + ": unterminated section");
            std::string inner = trim(s.substr(1, s.size() - 2));
            if (inner.rfind("curve", 0) != 0)
                throw ConfigError("line " + std::to_string(line) +
                                  ": unknown section '" + inner + "' (expected [curve NAME])");
            std::string label = trim(inner.substr(5));
            if (label.empty())
                throw ConfigError("line " + std::to_string(line) + ": curve needs a name");
            cfg.curves.push_back(opt::CurveOverride{.label = label});
            cur = &cfg.curves.back();
            continue;
        }

        const auto eq = s.find('=');
        if (eq == std::string::npos)
            throw ConfigError("line " + std::to_string(line) + ": expected key = value");
        const std::string key = trim(s.substr(0, eq));
        const std::string value = trim(s.substr(eq + 1));
        if (key.empty() || value.empty())
            throw ConfigError("line " + std::to_string(line) + ": empty key or value");

        if (cur) {
            if (key == "gamma") cur->gamma = parse_double(value, line);
            else if (key == "p") cur->p = parse_double(value, line);
            else if (key == "half_gap") cur->half_gap = parse_double(value, line);
            else if (key == "delta_gamma_tilde")
                cur->delta_gamma_tilde = parse_double(value, line);
            else
                throw ConfigError("line " + std::to_string(line) +
                                  ": unknown curve key '" + key + "'");
            continue;
        }

        if (key == "experiment") {
            if (value == "fig2") cfg.experiment = ExperimentKind::Fig2;
            else if (value == "fig3-hight" || value == "fig3-highT")
                cfg.experiment = ExperimentKind::Fig3HighT;
            else if (value == "fig4-lowt" || value == "fig4-lowT")
                cfg.experiment = ExperimentKind::Fig4LowT;
            else if (value == "bounds" || value == "bounds-table")
                cfg.experiment = ExperimentKind::BoundsTable;
            else if (value == "power-bounds") cfg.experiment = ExperimentKind::PowerBounds;
            else if (value == "sweep" || value == "custom-sweep")
                cfg.experiment = ExperimentKind::CustomSweep;
            else
                throw ConfigError("line " + std::to_string(line) +
                                  ": unknown experiment '" + value + "'");
        } else if (key == "engine") {
            if (value == "three-level") cfg.engine = EngineKind::ThreeLevel;
            else if (value == "four-level") cfg.engine = EngineKind::FourLevel;
            else
                throw ConfigError("line " + std::to_string(line) + ": unknown engine '" +
                                  value + "'");
        } else if (key == "scheme") {
            if (value == "fixed-hot") cfg.scheme = Scheme::FixedHot;
            else if (value == "fixed-cold") cfg.scheme = Scheme::FixedCold;
            else
                throw ConfigError("line " + std::to_string(line) + ": unknown scheme '" +
                                  value + "'");
        } else if (key == "tau_min") cfg.tau_min = parse_double(value, line);
        else if (key == "tau_max") cfg.tau_max = parse_double(value, line);
        else if (key == "tau_count") cfg.tau_count = parse_int(value, line);
        else if (key == "omega_fixed") cfg.omega_fixed = parse_double(value, line);
        else if (key == "lambda") cfg.lambda = parse_double(value, line);
        else if (key == "T_h") cfg.T_h = parse_double(value, line);
        else if (key == "Gamma_c") cfg.Gamma_c = parse_double(value, line);
        else if (key == "Gamma_h") cfg.Gamma_h = parse_double(value, line);
        else if (key == "Gamma_h1") cfg.Gamma_h1 = parse_double(value, line);
        else if (key == "Gamma_h2") cfg.Gamma_h2 = parse_double(value, line);
        else if (key == "p") cfg.p = parse_double(value, line);
        else if (key == "half_gap") cfg.half_gap = parse_double(value, line);
        else if (key == "gamma_12") cfg.gamma_12 = parse_double(value, line);
        else if (key == "tolerance") cfg.tolerance = parse_double(value, line);
        else if (key == "extend_scan") cfg.extend_scan = parse_bool(value, line);
        else if (key == "threads") cfg.threads = parse_int(value, line);
        else if (key == "svg") cfg.svg = parse_bool(value, line);
        else if (key == "out_dir") cfg.out_dir = value;
        else
            throw ConfigError("line " + std::to_string(line) + ": unknown key '" + key +
                              "'");
    }
    return cfg;
}

} // namespace qhe::cli
