// experiments.cpp — Figure pipelines and sweep driver

#include "experiments.hpp"

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "csv.hpp"
#include "qhe/analytics.hpp"
#include "svg.hpp"

namespace qhe::cli {

namespace {

namespace fs = std::filesystem;

std::string sanitize(const std::string& label) {
    std::string out;
    for (const char c : label) {
        const bool ok = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
                        (c >= '0' && c <= '9') || c == '.' || c == '-' || c == '_' ||
                        c == '=' || c == '+';
        out += ok ? c : '_';
    }
    return out;
}

std::vector<std::string> echo_lines_of(const Config& cfg) {
    std::vector<std::string> lines;
    std::stringstream ss(cfg.canonical_text());
    std::string l;
    while (std::getline(ss, l)) lines.push_back(l);
    return lines;
}

const char* scheme_name(Scheme s) {
    return s == Scheme::FixedHot ? "fixed-hot" : "fixed-cold";
}

const std::vector<std::string>& palette() {
    static const std::vector<std::string> colors = {"#d62728", "#1f77b4", "#2ca02c",
                                                    "#9467bd", "#ff7f0e", "#8c564b",
                                                    "#17becf", "#e377c2"};
    return colors;
}

struct CurveData {
    std::string label;
    std::vector<opt::SweepRow> rows;
};

// One sweep over all configured curves (or one base curve) for a scheme.
std::vector<CurveData> sweep_scheme(const Config& cfg, Scheme scheme) {
    opt::MaximizeOptions options;
    options.tol = cfg.tolerance;
    options.extend_scan = cfg.extend_scan;
    std::vector<opt::CurveOverride> curves = cfg.curves;
    if (curves.empty()) curves.push_back(opt::CurveOverride{.label = "base"});

    const auto grid = cfg.tau_grid();
    const auto rows = opt::sweep_emp(cfg.engine_template(scheme), scheme, grid, curves,
                                     options, cfg.threads);
    std::vector<CurveData> result;
    for (std::size_t i = 0; i < curves.size(); ++i) {
        CurveData cd;
        cd.label = curves[i].label;
        cd.rows.assign(rows.begin() + i * grid.size(),
                       rows.begin() + (i + 1) * grid.size());
        result.push_back(std::move(cd));
    }
    return result;
}

enum class Normalization { Identity, ByPZeroCurve, ByUpperBound };

void normalize(std::vector<CurveData>& curves, Normalization mode) {
    switch (mode) {
        case Normalization::Identity:
            for (auto& c : curves)
                for (auto& r : c.rows) r.eta_star_normalized = r.eta_star;
            break;
        case Normalization::ByPZeroCurve: {
            const auto ref = std::find_if(curves.begin(), curves.end(),
                                          [](const CurveData& c) { return c.label == "p=0"; });
            const CurveData& base = ref != curves.end() ? *ref : curves.front();
            for (auto& c : curves)
                for (std::size_t i = 0; i < c.rows.size(); ++i) {
                    const double den = base.rows[i].eta_star;
                    c.rows[i].eta_star_normalized = den > 0.0 ? c.rows[i].eta_star / den : 0.0;
                }
            break;
        }
        case Normalization::ByUpperBound:
            for (auto& c : curves)
                for (auto& r : c.rows)
                    r.eta_star_normalized =
                        r.bound_upper > 0.0 ? r.eta_star / r.bound_upper : 0.0;
            break;
    }
}

void print_summary(const std::string& path, const std::vector<opt::SweepRow>& rows) {
    double lo = 0.0;
    double hi = 0.0;
    bool any = false;
    int dead = 0;
    for (const auto& r : rows) {
        if (r.flags != "ok") {
            ++dead;
            continue;
        }
        lo = any ? std::min(lo, r.eta_star) : r.eta_star;
        hi = any ? std::max(hi, r.eta_star) : r.eta_star;
        any = true;
    }
    std::cout << "wrote " << path << " (" << rows.size() << " rows";
    if (any) {
        char buf[80];
        std::snprintf(buf, sizeof buf, ", eta* in [%.4g, %.4g]", lo, hi);
        std::cout << buf;
    }
    if (dead > 0) std::cout << ", " << dead << " non-operational";
    std::cout << ")\n";
}

// Writes per-curve CSVs plus an optional multi-curve SVG; y picks the raw or
// normalized EMP column.
void emit_curves(const Config& cfg, Scheme scheme, const std::vector<CurveData>& curves,
                 const std::string& stem, bool normalized_plot,
                 const std::string& ylabel) {
    const auto echo = echo_lines_of(cfg);
    std::vector<Series> series;
    std::size_t ci = 0;
    for (const auto& c : curves) {
        const std::string path = (fs::path(cfg.out_dir) /
                                  (stem + "_" + std::string(scheme_name(scheme)) + "_" +
                                   sanitize(c.label) + ".csv"))
                                     .string();
        write_sweep_csv(path, echo, c.rows);
        print_summary(path, c.rows);

        Series s;
        s.label = c.label;
        s.color = palette()[ci % palette().size()];
        ++ci;
        for (const auto& r : c.rows)
            s.points.push_back({r.eta_carnot, normalized_plot ? r.eta_star_normalized
                                                              : r.eta_star});
        series.push_back(std::move(s));
    }
    if (cfg.svg) {
        if (!normalized_plot && !curves.empty()) {
            // bound envelopes as dashed guides
            const char* names[3] = {"eta_C/2", "1-sqrt(tau)", "eta_C/(2-eta_C)"};
            for (int b = 0; b < 3; ++b) {
                Series s;
                s.label = names[b];
                s.color = "#777777";
                s.dashed = true;
                for (const auto& r : curves.front().rows) {
                    const double v = b == 0   ? r.bound_lower
                                     : b == 1 ? r.bound_cnca
                                              : r.bound_upper;
                    s.points.push_back({r.eta_carnot, v});
                }
                series.push_back(std::move(s));
            }
        }
        const std::string path =
            (fs::path(cfg.out_dir) / (stem + "_" + scheme_name(scheme) + ".svg")).string();
        write_svg(path, stem + " (" + scheme_name(scheme) + ")", "eta_C", ylabel, series);
        std::cout << "wrote " << path << "\n";
    }
}

void run_emp_figure(const Config& cfg, const std::string& stem, Normalization mode) {
    for (const Scheme scheme : {Scheme::FixedHot, Scheme::FixedCold}) {
        auto curves = sweep_scheme(cfg, scheme);
        normalize(curves, mode);
        const bool norm_plot = mode != Normalization::Identity;
        emit_curves(cfg, scheme, curves, stem, norm_plot,
                    norm_plot ? "eta* (normalized)" : "eta*");
    }
}

void run_custom(const Config& cfg) {
    auto curves = sweep_scheme(cfg, cfg.scheme);
    normalize(curves, Normalization::Identity);
    emit_curves(cfg, cfg.scheme, curves, "sweep", false, "eta*");
}

void run_bounds_table(const Config& cfg) {
    const auto grid = cfg.tau_grid();
    const std::vector<double> gammas = {0.05, 1.0, 10.0};
    std::vector<std::string> cols = {"tau", "eta_carnot", "bound_lower", "bound_cnca",
                                     "bound_upper"};
    for (const double g : gammas) cols.push_back("emp_hot_gamma" + g17(g));
    for (const double g : gammas) cols.push_back("emp_cold_gamma" + g17(g));
    std::vector<std::vector<double>> rows;
    for (const double tau : grid) {
        const auto b = analytics::emp_bounds(tau);
        std::vector<double> row = {tau, 1.0 - tau, b.lower, b.cnca, b.upper};
        for (const double g : gammas) row.push_back(analytics::emp_fixed_hot(tau, g));
        for (const double g : gammas) row.push_back(analytics::emp_fixed_cold(tau, g));
        rows.push_back(std::move(row));
    }
    const std::string path = (fs::path(cfg.out_dir) / "bounds.csv").string();
    write_table_csv(path, echo_lines_of(cfg), cols, rows);
    std::cout << "wrote " << path << " (" << rows.size() << " rows)\n";

    if (cfg.svg) {
        std::vector<Series> series;
        const char* names[3] = {"eta_C/2", "1-sqrt(tau)", "eta_C/(2-eta_C)"};
        for (int b = 0; b < 3; ++b) {
            Series s;
            s.label = names[b];
            s.color = "#777777";
            s.dashed = true;
            for (const auto& r : rows) s.points.push_back({r[1], r[2 + b]});
            series.push_back(std::move(s));
        }
        std::size_t ci = 0;
        for (std::size_t k = 0; k < gammas.size(); ++k) {
            Series sh;
            sh.label = "hot gamma=" + g17(gammas[k]);
            sh.color = palette()[ci++ % palette().size()];
            Series sc;
            sc.label = "cold gamma=" + g17(gammas[k]);
            sc.color = palette()[ci++ % palette().size()];
            for (const auto& r : rows) {
                sh.points.push_back({r[1], r[5 + k]});
                sc.points.push_back({r[1], r[5 + gammas.size() + k]});
            }
            series.push_back(std::move(sh));
            series.push_back(std::move(sc));
        }
        const std::string spath = (fs::path(cfg.out_dir) / "bounds.svg").string();
        write_svg(spath, "EMP closed forms and bounds", "eta_C", "eta*", series);
        std::cout << "wrote " << spath << "\n";
    }
}

void run_power_bounds(const Config& cfg) {
    const auto grid = cfg.tau_grid();
    const std::vector<double> gammas = {0.1, 1.0, 10.0};
    const std::vector<std::string> cols = {
        "tau",
        "gamma",
        "p_max_fixed_hot",
        "p_max_fixed_cold",
        "pb_hot_small_gamma",
        "pb_hot_large_gamma",
        "pb_cold_small_gamma",
        "pb_cold_large_gamma"};
    std::vector<std::vector<double>> rows;
    for (const double tau : grid)
        for (const double g : gammas) {
            const auto bh = analytics::power_bounds_highT(tau, g, Scheme::FixedHot);
            const auto bc = analytics::power_bounds_highT(tau, g, Scheme::FixedCold);
            rows.push_back({tau, g, analytics::power_max_highT(tau, g, Scheme::FixedHot),
                            analytics::power_max_highT(tau, g, Scheme::FixedCold),
                            bh.first, bh.second, bc.first, bc.second});
        }
    const std::string path = (fs::path(cfg.out_dir) / "power_bounds.csv").string();
    write_table_csv(path, echo_lines_of(cfg), cols, rows);
    std::cout << "wrote " << path << " (" << rows.size() << " rows)\n";
}

} // namespace

int run_experiment(const Config& cfg) {
    if (!(cfg.tolerance > 0.0)) throw ConfigError("tolerance must be positive");
    if (cfg.threads < 1) throw ConfigError("threads must be at least 1");
    std::error_code ec;
    fs::create_directories(cfg.out_dir, ec);
    if (ec) throw ConfigError("cannot create out_dir '" + cfg.out_dir + "': " + ec.message());

    for (const auto& w : cfg.validate_warnings()) std::cerr << "warning: " << w << "\n";

    {
        const std::string path = (fs::path(cfg.out_dir) / "config.echo").string();
        std::ofstream echo(path, std::ios::binary);
        if (!echo) throw ConfigError("cannot write " + path);
        echo << cfg.canonical_text();
    }

    switch (cfg.experiment) {
        case ExperimentKind::Fig2:
            run_emp_figure(cfg, "fig2", Normalization::Identity);
            break;
        case ExperimentKind::Fig3HighT:
            run_emp_figure(cfg, "fig3-hight", Normalization::ByPZeroCurve);
            break;
        case ExperimentKind::Fig4LowT:
            run_emp_figure(cfg, "fig4-lowt", Normalization::ByUpperBound);
            break;
        case ExperimentKind::BoundsTable:
            run_bounds_table(cfg);
            break;
        case ExperimentKind::PowerBounds:
            run_power_bounds(cfg);
            break;
        case ExperimentKind::CustomSweep:
            run_custom(cfg);
            break;
    }
    return 0;
}

} // namespace qhe::cli
