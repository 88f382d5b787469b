// qhe.cpp — Command-line front end
//
// Subcommands reproduce the standard experiments with their built-in
// defaults; `sweep --config FILE` runs a custom sweep. Exit codes:
// 0 success, 2 config problem, 3 numerical failure.

#include <exception>
#include <iostream>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>

#include "cli/config.hpp"
#include "cli/experiments.hpp"
#include "qhe/errors.hpp"

namespace {

struct GlobalFlags {
    std::string out_dir;
    bool svg = false;
    int threads = 0;
    double tolerance = 0.0;
};

void apply_globals(qhe::cli::Config& cfg, const GlobalFlags& g) {
    if (!g.out_dir.empty()) cfg.out_dir = g.out_dir;
    if (g.svg) cfg.svg = true;
    if (g.threads > 0) cfg.threads = g.threads;
    if (g.tolerance > 0.0) cfg.tolerance = g.tolerance;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Steady-state laser heat engine sweeps: EMP curves, bounds, figures"};
    app.require_subcommand(1);

    GlobalFlags g;
    app.add_option("--out-dir", g.out_dir, "Output directory (default: out)");
    app.add_flag("--svg", g.svg, "Also write SVG plots");
    app.add_option("--threads", g.threads, "Worker threads for sweep rows");
    app.add_option("--tolerance", g.tolerance, "Optimizer termination tolerance");

    using qhe::cli::ExperimentKind;
    struct Sub {
        const char* name;
        const char* alias;
        const char* help;
        ExperimentKind kind;
    };
    const Sub subs[] = {
        {"fig2", nullptr, "Three-level EMP curves vs Carnot efficiency (high T)",
         ExperimentKind::Fig2},
        {"fig3-hight", "fig3-highT",
         "Four-level EMP, high T, normalized to the p=0 curve", ExperimentKind::Fig3HighT},
        {"fig4-lowt", "fig4-lowT",
         "Four-level EMP, low T, normalized to eta_C/(2-eta_C)", ExperimentKind::Fig4LowT},
        {"bounds", "bounds-table", "Closed-form EMP expressions and bounds table",
         ExperimentKind::BoundsTable},
        {"power-bounds", nullptr, "Maximum-power closed forms and their envelopes",
         ExperimentKind::PowerBounds},
    };
    // Option values only land in the bound variables once the whole command
    // line is parsed, so the work happens after app.parse(), not in
    // subcommand callbacks.
    std::vector<std::pair<CLI::App*, ExperimentKind>> chosen;
    for (const auto& s : subs) {
        CLI::App* sub = app.add_subcommand(s.name, s.help);
        if (s.alias) sub->alias(s.alias);
        sub->fallthrough();  // global flags may follow the subcommand
        chosen.emplace_back(sub, s.kind);
    }

    std::string config_path;
    CLI::App* sweep = app.add_subcommand("sweep", "Custom sweep from a config file");
    sweep->alias("custom-sweep");
    sweep->fallthrough();
    sweep->add_option("--config", config_path, "Config file (key = value, [curve NAME] sections)")
        ->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        qhe::cli::Config cfg;
        if (sweep->parsed()) {
            cfg = qhe::cli::parse_config_file(config_path);
        } else {
            for (const auto& [sub, kind] : chosen)
                if (sub->parsed()) cfg = qhe::cli::default_config(kind);
        }
        apply_globals(cfg, g);
        return qhe::cli::run_experiment(cfg);
    } catch (const qhe::cli::ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return 3;
    }
}
