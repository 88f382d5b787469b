// experiments.hpp — Figure pipelines and sweep driver

#pragma once

#include "config.hpp"

namespace qhe::cli {

// Runs the configured experiment: evaluates the sweeps, writes one CSV per
// curve plus config.echo (and SVG plots when asked), prints a summary line
// per output file. Returns 0 on success; throws ConfigError for semantic
// config problems and lets engine/optimizer errors propagate.
int run_experiment(const Config& cfg);

} // namespace qhe::cli
