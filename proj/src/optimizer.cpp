// optimizer.cpp — Deterministic power maximization and EMP sweeps

#include "qhe/optimizer.hpp"

#include <atomic>
#include <cmath>
#include <cstdio>
#include <exception>
#include <limits>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "qhe/analytics.hpp"
#include "qhe/engine_coherent.hpp"
#include "qhe/engine_ssd.hpp"
#include "qhe/errors.hpp"

namespace qhe::opt {

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

// Concrete parameters at frequency ratio c: the scheme's frequency is held,
// the other follows c, and T_c = tau * T_h.
EngineTemplate at_ratio(const EngineTemplate& tmpl, Scheme scheme, double tau, double c) {
    EngineTemplate out = tmpl;
    std::visit(
        [&](auto& e) {
            e.T_c = tau * e.T_h;
            if (scheme == Scheme::FixedHot)
                e.omega_c = e.omega_h / c;
            else
                e.omega_h = c * e.omega_c;
        },
        out);
    return out;
}

// Output power (work extracted per unit time, positive when operating),
// straight from the steady-state coherences so off-window points cannot trip
// the derived-observable guards.
double power_out_of(const EngineTemplate& concrete) {
    return std::visit(
        overloaded{
            [](const EngineParams3& e) {
                const auto rho = ssd::steady_state3(e);
                return 2.0 * e.lambda * (e.omega_h - e.omega_c) * rho.rho_10.imag();
            },
            [](const EngineParams4& e) {
                const auto rho = coherent::steady_state4(e);
                const double w10 = e.omega_h + e.half_gap - e.omega_c;
                const double w20 = e.omega_h - e.half_gap - e.omega_c;
                return 2.0 * e.lambda *
                       (w10 * rho.rho_10.imag() + w20 * rho.rho_20.imag());
            }},
        concrete);
}

double efficiency_of(const EngineTemplate& concrete) {
    return std::visit(overloaded{[](const EngineParams3& e) {
                                     return ssd::observables3(e, ssd::steady_state3(e))
                                         .efficiency;
                                 },
                                 [](const EngineParams4& e) {
                                     return coherent::observables4(
                                                e, coherent::steady_state4(e))
                                         .efficiency;
                                 }},
                      concrete);
}

constexpr double kPlateau = 1e-14;

// Golden-section ascent on [a, b]; ties shrink toward the left end so flat
// stretches resolve to the smallest abscissa.
double golden_max(const std::function<double(double)>& f, double a, double b,
                  double threshold, int& evals) {
    const double phi = 0.5 * (std::sqrt(5.0) - 1.0);
    double x1 = b - phi * (b - a);
    double x2 = a + phi * (b - a);
    double f1 = f(x1);
    double f2 = f(x2);
    evals += 2;
    while (b - a > threshold) {
        if (f1 >= f2) {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - phi * (b - a);
            f1 = f(x1);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + phi * (b - a);
            f2 = f(x2);
        }
        ++evals;
    }
    return 0.5 * (a + b);
}

} // namespace

double argmax_scalar(const std::function<double(double)>& f, double a, double b,
                     double tol, int coarse_points, int* evaluations) {
    if (!(a < b) || !std::isfinite(a) || !std::isfinite(b))
        throw std::domain_error("argmax_scalar: need finite a < b");
    if (!(tol > 0.0)) throw std::domain_error("argmax_scalar: tol must be positive");
    const int n = coarse_points < 2 ? 2 : coarse_points;
    int evals = 0;

    const double h = (b - a) / (n - 1);
    int best_i = 0;
    double best_f = -std::numeric_limits<double>::infinity();
    for (int i = 0; i < n; ++i) {
        const double x = (i == n - 1) ? b : a + i * h;
        const double fx = f(x);
        ++evals;
        if (fx > best_f + kPlateau) {
            best_f = fx;
            best_i = i;
        }
    }
    const double lo = (best_i == 0) ? a : a + (best_i - 1) * h;
    const double hi = (best_i == n - 1) ? b : a + (best_i + 1) * h;
    const double threshold = tol * std::fmax(1.0, std::fabs(a + best_i * h));
    const double x_star = (hi - lo > threshold) ? golden_max(f, lo, hi, threshold, evals)
                                                : 0.5 * (lo + hi);
    if (evaluations) *evaluations += evals;
    return x_star;
}

EmpResult maximize_power(const EngineTemplate& engine, OptimizationScheme scheme,
                         double tau, const MaximizeOptions& options) {
    if (!(tau > 0.0) || !std::isfinite(tau))
        throw std::domain_error("maximize_power: tau must be finite and positive");
    const double lo = 1.0 + 1e-6;
    const double hi = 1.0 / tau - 1e-6;
    if (!(hi > lo))
        throw NoOperatingPoint("maximize_power: empty frequency window, tau too close to 1");

    int evals = 0;
    const auto objective = [&](double c) -> double {
        try {
            return power_out_of(at_ratio(engine, scheme, tau, c));
        } catch (const std::domain_error&) {
            // c pushed a frequency out of the valid domain; dead region.
            return -std::numeric_limits<double>::infinity();
        }
    };

    double c_star = argmax_scalar(objective, lo, hi, options.tol, options.coarse_points, &evals);
    double p_star = objective(c_star);
    ++evals;

    if (options.extend_scan) {
        // Exploratory tail past the engine window; kept separate so the dense
        // window grid is not diluted.
        const double far = 50.0 / tau;
        const int m = options.coarse_points < 2 ? 2 : options.coarse_points;
        const double step = (far - hi) / m;
        int best_k = 0;
        double best_f = -std::numeric_limits<double>::infinity();
        for (int k = 1; k <= m; ++k) {
            const double fx = objective(hi + k * step);
            ++evals;
            if (fx > best_f + kPlateau) {
                best_f = fx;
                best_k = k;
            }
        }
        if (best_f > p_star + kPlateau) {
            const double xlo = hi + (best_k - 1) * step;
            const double xhi = hi + std::fmin(double(best_k + 1), double(m)) * step;
            const double threshold = options.tol * std::fmax(1.0, hi + best_k * step);
            const double c_ext = golden_max(objective, xlo, xhi, threshold, evals);
            const double p_ext = objective(c_ext);
            ++evals;
            if (p_ext > p_star + kPlateau) {
                c_star = c_ext;
                p_star = p_ext;
            }
        }
    }

    EmpResult r;
    r.c_star = c_star;
    r.p_max = std::isfinite(p_star) ? p_star : 0.0;
    r.converged = std::isfinite(p_star) && p_star > 0.0;
    r.eta_star = r.converged ? efficiency_of(at_ratio(engine, scheme, tau, c_star)) : 0.0;
    if (r.converged) ++evals;
    r.evaluations = evals;
    return r;
}

EngineTemplate apply_override(const EngineTemplate& engine, const CurveOverride& ov) {
    EngineTemplate out = engine;
    std::visit(overloaded{[&](EngineParams3& e) {
                              if (ov.p || ov.half_gap || ov.delta_gamma_tilde)
                                  throw std::domain_error(
                                      "apply_override: doublet knobs need the four-level "
                                      "engine");
                              if (ov.gamma) e.Gamma_h = *ov.gamma * e.Gamma_c;
                          },
                          [&](EngineParams4& e) {
                              if (ov.gamma) {
                                  e.Gamma_h1 = *ov.gamma * e.Gamma_c;
                                  e.Gamma_h2 = *ov.gamma * e.Gamma_c;
                              }
                              if (ov.p) e.p = *ov.p;
                              if (ov.half_gap) e.half_gap = *ov.half_gap;
                              if (ov.delta_gamma_tilde) {
                                  const double mean = 0.5 * (e.Gamma_h1 + e.Gamma_h2);
                                  const double half = 0.5 * *ov.delta_gamma_tilde * e.Gamma_c;
                                  e.Gamma_h1 = mean + half;
                                  e.Gamma_h2 = mean - half;
                              }
                          }},
               out);
    return out;
}

std::vector<SweepRow> sweep_emp(const EngineTemplate& engine, OptimizationScheme scheme,
                                const std::vector<double>& tau_grid,
                                const std::vector<CurveOverride>& overrides,
                                const MaximizeOptions& options, int threads) {
    std::vector<CurveOverride> ovs = overrides;
    if (ovs.empty()) ovs.push_back(CurveOverride{.label = "base"});

    const std::size_t n_rows = ovs.size() * tau_grid.size();
    std::vector<SweepRow> rows(n_rows);

    const auto compute = [&](std::size_t idx) {
        const std::size_t oi = idx / tau_grid.size();
        const double tau = tau_grid[idx % tau_grid.size()];
        const EngineTemplate varied = apply_override(engine, ovs[oi]);

        SweepRow row{};
        row.tau = tau;
        row.eta_carnot = 1.0 - tau;
        const auto bounds = analytics::emp_bounds(tau);
        row.bound_lower = bounds.lower;
        row.bound_cnca = bounds.cnca;
        row.bound_upper = bounds.upper;
        try {
            const EmpResult r = maximize_power(varied, scheme, tau, options);
            row.eta_star = r.eta_star;
            row.p_max = r.p_max;
            row.c_star = r.c_star;
            row.flags = r.converged ? "ok" : "non-operational";
        } catch (const NoOperatingPoint&) {
            row.flags = "non-operational";
        } catch (const std::exception& e) {
            // identify the failing row for the caller's diagnostics
            char buf[40];
            std::snprintf(buf, sizeof buf, "%.17g", tau);
            throw std::runtime_error("curve '" + ovs[oi].label + "', tau = " + buf + ": " +
                                     e.what());
        }
        row.eta_star_normalized = 0.0;
        rows[idx] = row;
    };

    int nt = threads < 1 ? 1 : threads;
    if (static_cast<std::size_t>(nt) > n_rows) nt = static_cast<int>(n_rows);
    if (nt <= 1) {
        for (std::size_t i = 0; i < n_rows; ++i) compute(i);
        return rows;
    }

    std::atomic<std::size_t> next{0};
    std::exception_ptr first_error;
    std::mutex error_mutex;
    std::vector<std::thread> pool;
    pool.reserve(nt);
    for (int t = 0; t < nt; ++t) {
        pool.emplace_back([&] {
            while (true) {
                const std::size_t i = next.fetch_add(1);
                if (i >= n_rows) return;
                try {
                    compute(i);
                } catch (...) {
                    std::lock_guard<std::mutex> lock(error_mutex);
                    if (!first_error) first_error = std::current_exception();
                }
            }
        });
    }
    for (auto& th : pool) th.join();
    if (first_error) std::rethrow_exception(first_error);
    return rows;
}

} // namespace qhe::opt
