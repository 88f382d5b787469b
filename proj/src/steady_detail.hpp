// steady_detail.hpp — Shared kernel-with-unit-trace solver and RK4 stepper

#pragma once

#include <cmath>

#include <Eigen/Dense>

#include "qhe/errors.hpp"

namespace qhe::detail {

// Solves L v = 0 with the first `npop` components summing to one. The
// redundant population row (index npop-1, the ground-state balance) is
// replaced by the trace row; a couple of iterative-refinement passes push
// the residual to ~eps * ||L||.
template <int N>
Eigen::Matrix<double, N, 1> steady_solve(const Eigen::Matrix<double, N, N>& L, int npop) {
    using Mat = Eigen::Matrix<double, N, N>;
    using Vec = Eigen::Matrix<double, N, 1>;
    Mat A = L;
    A.row(npop - 1).setZero();
    for (int j = 0; j < npop; ++j) A(npop - 1, j) = 1.0;
    Vec b = Vec::Zero();
    b(npop - 1) = 1.0;

    Eigen::FullPivLU<Mat> lu(A);
    if (lu.rank() < N)
        throw SingularGenerator(
            "steady state is not unique: generator rank-deficient beyond trace redundancy");
    Vec v = lu.solve(b);
    const double scale = A.template lpNorm<Eigen::Infinity>();
    for (int pass = 0; pass < 3; ++pass) {
        Vec r = b - A * v;
        const double rn = r.template lpNorm<Eigen::Infinity>();
        if (rn <= 1e-15 * scale) break;
        v += lu.solve(r);
    }
    if (!v.allFinite())
        throw SingularGenerator("steady-state solve produced non-finite entries");
    return v;
}

// Fixed-step RK4 for v' = L v. The caller enforces the dt guard; the final
// partial step lands exactly on t_final.
template <int N>
Eigen::Matrix<double, N, 1> rk4_evolve(const Eigen::Matrix<double, N, N>& L,
                                       Eigen::Matrix<double, N, 1> v, double t_final,
                                       double dt) {
    using Vec = Eigen::Matrix<double, N, 1>;
    double t = 0.0;
    while (t < t_final) {
        const double h = std::fmin(dt, t_final - t);
        const Vec k1 = L * v;
        const Vec k2 = L * (v + 0.5 * h * k1);
        const Vec k3 = L * (v + 0.5 * h * k2);
        const Vec k4 = L * (v + h * k3);
        v += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
        t += h;
    }
    return v;
}

// Stability guard shared by both engines: largest absolute row sum of L.
template <int N>
double max_rate_scale(const Eigen::Matrix<double, N, N>& L) {
    return L.cwiseAbs().rowwise().sum().maxCoeff();
}

} // namespace qhe::detail
