#pragma once

#include "orlicz/bvfunc.hpp"
#include "orlicz/phi.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace orlicz {

/// Samples u_i at x_i = x0 + i h.
struct Signal {
    std::vector<double> u;
    double h = 1.0;
    double x0 = 0.0;

    std::size_t size() const { return u.size(); }
    double x(std::size_t i) const { return x0 + static_cast<double>(i) * h; }
    void validate() const;
};

struct RestoreConfig {
    Phi phi;
    double fidelity_weight = 1.0;
    double epsilon = 1e-6;  // |d| -> sqrt(d^2 + eps^2) - eps inside phi
    std::size_t max_iters = 20000;
    double armijo_c = 1e-4;
    double initial_step = 1.0;
    double step_growth = 2.0;
    double rel_tol = 1e-10;

    explicit RestoreConfig(Phi p) : phi(std::move(p)) {}
    void validate() const;
};

/// sum_{i<n-1} phi(x_i, |u_{i+1} - u_i| / h) h with the epsilon smoothing.
double regularization(const Signal& u, const RestoreConfig& cfg);
/// regularization + fidelity_weight * sum_i |u_i - u0_i|^2 h
double energy(const Signal& u, const Signal& u0, const RestoreConfig& cfg);
std::vector<double> energy_gradient(const Signal& u, const Signal& u0, const RestoreConfig& cfg);

struct RestoreResult {
    Signal u;
    std::vector<double> trace;  // energy of every accepted iterate, starting point first
    std::size_t iterations = 0;
    bool converged = false;
};

/// Descent along the gradient preconditioned by the tridiagonal Hessian of the smoothed energy,
/// with Armijo backtracking (halving).
RestoreResult minimize(const Signal& u0, const RestoreConfig& cfg, const std::optional<Signal>& start = std::nullopt);

/// Piecewise-linear interpolant of the samples as a BV function on [x_0, x_{n-1}].
BVFunction interpolant(const Signal& s);

}  // namespace orlicz
