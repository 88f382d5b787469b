// csv.hpp — Sweep-row serialization with full-precision round-trip

#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "qhe/optimizer.hpp"

namespace qhe::cli {

// FNV-1a, 64-bit; stamps the config echo into every data file.
std::uint64_t fnv1a64(std::string_view s);

// Shortest-round-trip-safe decimal form (17 significant digits).
std::string g17(double v);

// Writes `# ` echo lines, a `# config_hash = ...` line, the header row with
// the SweepRow field names, then one row per entry. No timestamps: reruns
// are byte-identical.
void write_sweep_csv(const std::string& path, const std::vector<std::string>& echo_lines,
                     const std::vector<opt::SweepRow>& rows);

// Inverse of write_sweep_csv for the data rows (echo lines skipped).
std::vector<opt::SweepRow> read_sweep_csv(const std::string& path);

// Generic numeric table with the same conventions (bounds/power tables).
void write_table_csv(const std::string& path, const std::vector<std::string>& echo_lines,
                     const std::vector<std::string>& columns,
                     const std::vector<std::vector<double>>& rows);

} // namespace qhe::cli
