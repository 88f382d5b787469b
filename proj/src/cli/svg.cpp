// svg.cpp — Minimal self-contained line plots

#include "svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace qhe::cli {

namespace {

constexpr double kW = 840.0;
constexpr double kH = 600.0;
constexpr double kL = 80.0;   // left margin
constexpr double kR = 200.0;  // right margin (legend)
constexpr double kT = 50.0;
constexpr double kB = 70.0;

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

} // namespace

void write_svg(const std::string& path, const std::string& title,
               const std::string& xlabel, const std::string& ylabel,
               const std::vector<Series>& series) {
    double xmin = std::numeric_limits<double>::infinity();
    double xmax = -xmin;
    double ymin = xmin;
    double ymax = -xmin;
    for (const auto& s : series)
        for (const auto& p : s.points) {
            if (!std::isfinite(p[0]) || !std::isfinite(p[1])) continue;
            xmin = std::fmin(xmin, p[0]);
            xmax = std::fmax(xmax, p[0]);
            ymin = std::fmin(ymin, p[1]);
            ymax = std::fmax(ymax, p[1]);
        }
    if (!(xmin < xmax)) {
        xmin = std::isfinite(xmin) ? xmin - 0.5 : 0.0;
        xmax = xmin + 1.0;
    }
    if (!(ymin < ymax)) {
        ymin = std::isfinite(ymin) ? ymin - 0.5 : 0.0;
        ymax = ymin + 1.0;
    }
    const double ypad = 0.05 * (ymax - ymin);
    ymin -= ypad;
    ymax += ypad;

    const double px = kW - kL - kR;
    const double py = kH - kT - kB;
    const auto X = [&](double x) { return kL + (x - xmin) / (xmax - xmin) * px; };
    const auto Y = [&](double y) { return kT + py - (y - ymin) / (ymax - ymin) * py; };

    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kW << "\" height=\""
       << kH << "\" viewBox=\"0 0 " << kW << " " << kH << "\">\n";
    os << "<rect width=\"" << kW << "\" height=\"" << kH << "\" fill=\"white\"/>\n";
    os << "<text x=\"" << kL + px / 2 << "\" y=\"28\" text-anchor=\"middle\" "
          "font-family=\"sans-serif\" font-size=\"17\">"
       << title << "</text>\n";

    // axes
    os << "<line x1=\"" << kL << "\" y1=\"" << kT + py << "\" x2=\"" << kL + px
       << "\" y2=\"" << kT + py << "\" stroke=\"black\"/>\n";
    os << "<line x1=\"" << kL << "\" y1=\"" << kT << "\" x2=\"" << kL << "\" y2=\""
       << kT + py << "\" stroke=\"black\"/>\n";
    for (int i = 0; i <= 5; ++i) {
        const double fx = xmin + (xmax - xmin) * i / 5.0;
        const double fy = ymin + (ymax - ymin) * i / 5.0;
        os << "<line x1=\"" << X(fx) << "\" y1=\"" << kT + py << "\" x2=\"" << X(fx)
           << "\" y2=\"" << kT + py + 6 << "\" stroke=\"black\"/>\n";
        os << "<text x=\"" << X(fx) << "\" y=\"" << kT + py + 24
           << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"13\">"
           << num(fx) << "</text>\n";
        os << "<line x1=\"" << kL - 6 << "\" y1=\"" << Y(fy) << "\" x2=\"" << kL
           << "\" y2=\"" << Y(fy) << "\" stroke=\"black\"/>\n";
        os << "<text x=\"" << kL - 10 << "\" y=\"" << Y(fy) + 4
           << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"13\">"
           << num(fy) << "</text>\n";
    }
    os << "<text x=\"" << kL + px / 2 << "\" y=\"" << kH - 18
       << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"15\">"
       << xlabel << "</text>\n";
    os << "<text x=\"22\" y=\"" << kT + py / 2
       << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"15\" "
          "transform=\"rotate(-90 22 "
       << kT + py / 2 << ")\">" << ylabel << "</text>\n";

    // curves
    for (const auto& s : series) {
        os << "<polyline fill=\"none\" stroke=\"" << s.color << "\" stroke-width=\"2\"";
        if (s.dashed) os << " stroke-dasharray=\"6 4\"";
        os << " points=\"";
        bool first = true;
        for (const auto& p : s.points) {
            if (!std::isfinite(p[0]) || !std::isfinite(p[1])) continue;
            if (!first) os << ' ';
            os << num(X(p[0])) << ',' << num(Y(p[1]));
            first = false;
        }
        os << "\"/>\n";
    }

    // legend
    double ly = kT + 10;
    for (const auto& s : series) {
        os << "<line x1=\"" << kL + px + 18 << "\" y1=\"" << ly << "\" x2=\""
           << kL + px + 50 << "\" y2=\"" << ly << "\" stroke=\"" << s.color
           << "\" stroke-width=\"2\"";
        if (s.dashed) os << " stroke-dasharray=\"6 4\"";
        os << "/>\n";
        os << "<text x=\"" << kL + px + 56 << "\" y=\"" << ly + 4
           << "\" font-family=\"sans-serif\" font-size=\"13\">" << s.label << "</text>\n";
        ly += 22;
    }
    os << "</svg>\n";

    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << os.str();
}

} // namespace qhe::cli
