// analytics.cpp — Closed-form EMP results, power laws and bounds

#include "qhe/analytics.hpp"

#include <cmath>
#include <stdexcept>

#include "qhe/special.hpp"

namespace qhe::analytics {

namespace {

void check_tau(double tau) {
    if (!(tau > 0.0) || !(tau < 1.0) || !std::isfinite(tau))
        throw std::domain_error("analytics: tau must lie in (0, 1)");
}

void check_nonneg(double x, const char* name) {
    if (!(x >= 0.0) || !std::isfinite(x))
        throw std::domain_error(std::string("analytics: ") + name +
                                " must be finite and non-negative");
}

} // namespace

double emp_fixed_hot(double tau, double gamma) {
    check_tau(tau);
    check_nonneg(gamma, "gamma");
    const double root = std::sqrt(tau * (1.0 + gamma) * (tau + gamma));
    return (1.0 - tau) * (tau + gamma) / (tau + gamma + root);
}

double emp_fixed_cold(double tau, double gamma) {
    check_tau(tau);
    check_nonneg(gamma, "gamma");
    const double root = std::sqrt((1.0 + gamma) * (tau + gamma));
    return 1.0 - tau * (root + gamma) / (tau + gamma * (1.0 + tau));
}

EmpBounds emp_bounds(double tau) {
    check_tau(tau);
    return {(1.0 - tau) / 2.0, 1.0 - std::sqrt(tau),
            (1.0 - tau) / (1.0 + tau)};
}

double emp_asymptotics(double tau, double gamma_p, AsymptoticRegime regime, Scheme scheme) {
    check_tau(tau);
    check_nonneg(gamma_p, "gamma_p");
    const double st = std::sqrt(tau);
    if (regime == AsymptoticRegime::SmallGamma) {
        if (scheme == Scheme::FixedHot)
            return (1.0 - tau) / 2.0 +
                   (1.0 - tau) * (1.0 - tau) * gamma_p * gamma_p / (16.0 * tau);
        return 1.0 - st + (1.0 - st) * (1.0 - st) / (4.0 * st) * gamma_p * gamma_p;
    }
    if (!(gamma_p > 0.0))
        throw std::domain_error("analytics: large-gamma expansion needs gamma_p > 0");
    if (scheme == Scheme::FixedHot)
        return 1.0 - st - st / (gamma_p * gamma_p) * (1.0 - st) * (1.0 - st);
    return (1.0 - tau) / (1.0 + tau) -
           tau * (1.0 - tau) * (1.0 - tau) /
               (gamma_p * gamma_p * (1.0 + tau) * (1.0 + tau));
}

double emp_lowT_fixed_hot(double tau, double alpha_h) {
    check_tau(tau);
    if (!(alpha_h > 0.0) || !std::isfinite(alpha_h))
        throw std::domain_error("analytics: alpha_h must be finite and positive");
    return (tau / alpha_h) * (product_log_exp(1.0 + alpha_h * (1.0 - tau) / tau) - 1.0);
}

double emp_lowT_fixed_cold(double tau, double alpha_c) {
    check_tau(tau);
    if (!(alpha_c > 0.0) || !std::isfinite(alpha_c))
        throw std::domain_error("analytics: alpha_c must be finite and positive");
    const double pl = product_log_exp(1.0 - alpha_c * (1.0 - tau));
    return 1.0 - alpha_c * tau / (1.0 + alpha_c * tau - pl);
}

double power_highT(double tau, double gamma, double c, Scheme scheme) {
    check_tau(tau);
    check_nonneg(gamma, "gamma");
    if (!(c > 0.0) || !std::isfinite(c))
        throw std::domain_error("analytics: c must be finite and positive");
    const double num = 2.0 * (c - 1.0) * (1.0 - c * tau) * gamma;
    if (scheme == Scheme::FixedHot) return num / (3.0 * c * (gamma + c * tau));
    return num / (3.0 * (gamma + c * tau));
}

double power_max_highT(double tau, double gamma, Scheme scheme) {
    check_tau(tau);
    check_nonneg(gamma, "gamma");
    const double omt = 1.0 - tau;
    if (scheme == Scheme::FixedHot) {
        // Conjugate form of (2/(3g))[g(1+tau)+2tau - 2 sqrt(tau(1+g)(tau+g))];
        // the numerator difference equals g^2 (1-tau)^2, so this stays exact
        // down to gamma = 0.
        const double root = std::sqrt(tau * (1.0 + gamma) * (tau + gamma));
        return 2.0 * gamma * omt * omt /
               (3.0 * (gamma * (1.0 + tau) + 2.0 * tau + 2.0 * root));
    }
    // (2g/3)(sqrt(1+g) - sqrt(tau+g))^2 / tau with the difference conjugated.
    const double sum = std::sqrt(1.0 + gamma) + std::sqrt(tau + gamma);
    return 2.0 * gamma * omt * omt / (3.0 * tau * sum * sum);
}

std::pair<double, double> power_bounds_highT(double tau, double gamma, Scheme scheme) {
    check_tau(tau);
    check_nonneg(gamma, "gamma");
    const double omt = 1.0 - tau;
    const double oms = 1.0 - std::sqrt(tau);
    if (scheme == Scheme::FixedHot)
        return {gamma / 6.0 * omt * omt / tau, 2.0 / 3.0 * oms * oms};
    return {2.0 * gamma / 3.0 * oms * oms / tau, omt * omt / (6.0 * tau)};
}

double power_lowT(double omega_h, double omega_c, double n_h, double n_c,
                  double gamma_or_gamma_p, PowerModel model) {
    if (!(omega_h > omega_c) || !(omega_c > 0.0))
        throw std::domain_error("analytics: need omega_h > omega_c > 0");
    check_nonneg(gamma_or_gamma_p, "rate ratio");
    const double g = gamma_or_gamma_p;
    const double base = (omega_h - omega_c) * (n_h - n_c);
    if (model == PowerModel::ThreeLevel) return -(2.0 * g / (g + 1.0)) * base;
    return -(g / (1.0 + g)) * base;
}

double power_ratio_highT_small_gamma(double gamma, double gamma_p) {
    check_nonneg(gamma, "gamma");
    if (!(gamma_p > 0.0) || !std::isfinite(gamma_p))
        throw std::domain_error("analytics: gamma_p must be finite and positive");
    return 4.0 * gamma / (3.0 * gamma_p);
}

} // namespace qhe::analytics
