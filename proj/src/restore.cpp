#include "orlicz/restore.hpp"

#include "orlicz/error.hpp"
#include "orlicz/extended_real.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace orlicz {

void Signal::validate() const {
    if (u.size() < 2) throw Error(ErrorCode::InvalidArgument, "signal needs at least two samples");
    if (!(h > 0.0) || !std::isfinite(h)) throw Error(ErrorCode::InvalidArgument, "signal spacing must be > 0");
    for (std::size_t i = 0; i < u.size(); ++i)
        if (!std::isfinite(u[i]))
            throw Error(ErrorCode::InvalidArgument, "non-finite sample at index " + std::to_string(i));
}

void RestoreConfig::validate() const {
    if (!(fidelity_weight > 0.0)) throw Error(ErrorCode::InvalidArgument, "fidelity_weight must be > 0");
    if (!(epsilon >= 0.0)) throw Error(ErrorCode::InvalidArgument, "epsilon must be >= 0");
    if (!(armijo_c > 0.0 && armijo_c < 1.0)) throw Error(ErrorCode::InvalidArgument, "armijo_c must lie in (0, 1)");
    if (!(initial_step > 0.0)) throw Error(ErrorCode::InvalidArgument, "initial_step must be > 0");
    if (!(step_growth >= 1.0)) throw Error(ErrorCode::InvalidArgument, "step_growth must be >= 1");
    if (!phi.is_convex()) throw Error(ErrorCode::PreconditionViolated, "restoration needs phi convex in t");
}

namespace {

void check_grid(const Signal& u, const Signal& u0) {
    if (u.size() != u0.size() || u.h != u0.h || u.x0 != u0.x0)
        throw Error(ErrorCode::GridMismatch, "signals live on different grids");
}

double smoothed_abs(double d, double eps) {
    if (eps == 0.0) return std::abs(d);
    return std::sqrt(d * d + eps * eps) - eps;
}

double smoothed_abs_slope(double d, double eps) {
    if (eps == 0.0) return d > 0.0 ? 1.0 : (d < 0.0 ? -1.0 : 0.0);
    return d / std::sqrt(d * d + eps * eps);
}

}  // namespace

double regularization(const Signal& u, const RestoreConfig& cfg) {
    KahanSum s;
    for (std::size_t i = 0; i + 1 < u.size(); ++i) {
        const double d = (u.u[i + 1] - u.u[i]) / u.h;
        const double v = cfg.phi.eval(u.x(i), smoothed_abs(d, cfg.epsilon)) * u.h;
        if (!std::isfinite(v))
            throw Error(ErrorCode::NonFiniteEnergy, "phi is not finite at difference index " + std::to_string(i));
        s.add(v);
    }
    return s.value();
}

double energy(const Signal& u, const Signal& u0, const RestoreConfig& cfg) {
    check_grid(u, u0);
    KahanSum fid;
    for (std::size_t i = 0; i < u.size(); ++i) {
        const double r = u.u[i] - u0.u[i];
        fid.add(r * r * u.h);
    }
    return regularization(u, cfg) + cfg.fidelity_weight * fid.value();
}

std::vector<double> energy_gradient(const Signal& u, const Signal& u0, const RestoreConfig& cfg) {
    check_grid(u, u0);
    std::vector<double> g(u.size(), 0.0);
    for (std::size_t i = 0; i < u.size(); ++i) g[i] = 2.0 * cfg.fidelity_weight * u.h * (u.u[i] - u0.u[i]);
    for (std::size_t i = 0; i + 1 < u.size(); ++i) {
        const double d = (u.u[i + 1] - u.u[i]) / u.h;
        const double slope = cfg.phi.dt(u.x(i), smoothed_abs(d, cfg.epsilon)) * smoothed_abs_slope(d, cfg.epsilon);
        g[i + 1] += slope;
        g[i] -= slope;
    }
    return g;
}

namespace {

// psi(d) = phi(x, s(d)); curvature by central difference of psi'
double difference_curvature(const RestoreConfig& cfg, double x, double d) {
    const auto slope = [&](double v) {
        return cfg.phi.dt(x, smoothed_abs(v, cfg.epsilon)) * smoothed_abs_slope(v, cfg.epsilon);
    };
    const double delta = 1e-6 * (std::abs(d) + cfg.epsilon) + 1e-12;
    const double w = (slope(d + delta) - slope(d - delta)) / (2.0 * delta);
    if (!std::isfinite(w) || w < 0.0) return 0.0;
    return std::min(w, 1e12);
}

// tridiagonal solve; the matrix is diagonally dominant so no pivoting
std::vector<double> solve_tridiagonal(std::vector<double> sub, std::vector<double> diag, std::vector<double> sup,
                                      std::vector<double> rhs) {
    const std::size_t n = diag.size();
    for (std::size_t i = 1; i < n; ++i) {
        const double m = sub[i] / diag[i - 1];
        diag[i] -= m * sup[i - 1];
        rhs[i] -= m * rhs[i - 1];
    }
    std::vector<double> x(n);
    x[n - 1] = rhs[n - 1] / diag[n - 1];
    for (std::size_t i = n - 1; i-- > 0;) x[i] = (rhs[i] - sup[i] * x[i + 1]) / diag[i];
    return x;
}

}  // namespace

RestoreResult minimize(const Signal& u0, const RestoreConfig& cfg, const std::optional<Signal>& start) {
    u0.validate();
    cfg.validate();
    RestoreResult res;
    res.u = start ? *start : u0;
    check_grid(res.u, u0);
    const std::size_t n = u0.size();
    double e = energy(res.u, u0, cfg);
    res.trace.push_back(e);
    double step = cfg.initial_step;
    Signal trial = res.u;
    std::vector<double> sub(n, 0.0), diag(n), sup(n, 0.0);
    for (std::size_t it = 0; it < cfg.max_iters; ++it) {
        const auto g = energy_gradient(res.u, u0, cfg);
        bool zero = true;
        for (double v : g) zero = zero && v == 0.0;
        if (zero) {
            res.converged = true;
            break;
        }
        std::fill(diag.begin(), diag.end(), 2.0 * cfg.fidelity_weight * u0.h);
        std::fill(sub.begin(), sub.end(), 0.0);
        std::fill(sup.begin(), sup.end(), 0.0);
        for (std::size_t i = 0; i + 1 < n; ++i) {
            const double w = difference_curvature(cfg, res.u.x(i), (res.u.u[i + 1] - res.u.u[i]) / u0.h) / u0.h;
            diag[i] += w;
            diag[i + 1] += w;
            sup[i] -= w;
            sub[i + 1] -= w;
        }
        std::vector<double> dir = solve_tridiagonal(sub, diag, sup, g);
        double slope = 0.0;
        for (std::size_t i = 0; i < n; ++i) slope += g[i] * dir[i];
        if (!(slope > 0.0) || !std::isfinite(slope)) {
            dir = g;
            slope = 0.0;
            for (double v : g) slope += v * v;
        }
        bool accepted = false;
        double e_new = e;
        while (step > 1e-30) {
            for (std::size_t i = 0; i < n; ++i) trial.u[i] = res.u.u[i] - step * dir[i];
            e_new = energy(trial, u0, cfg);
            if (e_new <= e - cfg.armijo_c * step * slope) {
                accepted = true;
                break;
            }
            step *= 0.5;
        }
        if (!accepted) {
            res.converged = true;  // no descent left at machine precision
            break;
        }
        std::swap(res.u, trial);
        res.trace.push_back(e_new);
        ++res.iterations;
        const double rel = (e - e_new) / std::max(std::abs(e), 1e-300);
        e = e_new;
        step = std::min(cfg.initial_step, step * cfg.step_growth);
        if (rel < cfg.rel_tol) {
            res.converged = true;
            break;
        }
    }
    return res;
}

BVFunction interpolant(const Signal& s) {
    s.validate();
    const std::size_t n = s.size();
    std::vector<double> breaks(n), slopes;
    std::vector<std::vector<double>> coeffs;
    for (std::size_t i = 0; i < n; ++i) breaks[i] = s.x(i);
    for (std::size_t i = 0; i + 1 < n; ++i) coeffs.push_back({(s.u[i + 1] - s.u[i]) / s.h});
    return BVFunction(breaks.front(), breaks.back(), s.u.front(), PiecewisePolynomial(breaks, std::move(coeffs)));
}

}  // namespace orlicz
