// svg.hpp — Minimal self-contained line plots

#pragma once

#include <array>
#include <string>
#include <vector>

namespace qhe::cli {

struct Series {
    std::string label;
    std::string color;   // CSS color
    bool dashed{false};
    std::vector<std::array<double, 2>> points;
};

// Polylines + axes + ticks + legend, nothing external, no timestamps.
// Ranges come from the data with a small margin; degenerate ranges widen
// to a unit box.
void write_svg(const std::string& path, const std::string& title,
               const std::string& xlabel, const std::string& ylabel,
               const std::vector<Series>& series);

} // namespace qhe::cli
