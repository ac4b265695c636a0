#pragma once
// Independent oracles and seeded generators shared by the test binaries.
// Nothing here calls the library's quadrature or DP code.

#include "orlicz/bvfunc.hpp"
#include "orlicz/phi.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <random>
#include <vector>

namespace testing_support {

using orlicz::Atom;
using orlicz::BVFunction;
using orlicz::PiecewisePolynomial;

// Composite 5-point Gauss-Legendre on `pieces` equal panels per [cut, cut] span.
inline double gauss_legendre(const std::function<double(double)>& f, std::vector<double> cuts, int pieces = 64) {
    static constexpr double node[5] = {0.0, -0.5384693101056831, 0.5384693101056831, -0.9061798459386640,
                                       0.9061798459386640};
    static constexpr double weight[5] = {0.5688888888888889, 0.4786286704993665, 0.4786286704993665,
                                         0.2369268850561891, 0.2369268850561891};
    std::sort(cuts.begin(), cuts.end());
    double total = 0.0;
    for (std::size_t s = 0; s + 1 < cuts.size(); ++s) {
        const double w = (cuts[s + 1] - cuts[s]) / pieces;
        if (w <= 0) continue;
        for (int k = 0; k < pieces; ++k) {
            const double mid = cuts[s] + (k + 0.5) * w;
            for (int q = 0; q < 5; ++q) total += 0.5 * w * weight[q] * f(mid + 0.5 * w * node[q]);
        }
    }
    return total;
}

// Thomas algorithm: sub[i] u[i-1] + diag[i] u[i] + sup[i] u[i+1] = rhs[i].
inline std::vector<double> thomas(std::vector<double> sub, std::vector<double> diag, std::vector<double> sup,
                                  std::vector<double> rhs) {
    const std::size_t n = diag.size();
    for (std::size_t i = 1; i < n; ++i) {
        const double m = sub[i] / diag[i - 1];
        diag[i] -= m * sup[i - 1];
        rhs[i] -= m * rhs[i - 1];
    }
    std::vector<double> u(n);
    u[n - 1] = rhs[n - 1] / diag[n - 1];
    for (std::size_t i = n - 1; i-- > 0;) u[i] = (rhs[i] - sup[i] * u[i + 1]) / diag[i];
    return u;
}

// Max of sum_k phi^side_{I_k}(|f(l) - f(r)| / |I_k|) |I_k| over every subset
// of the interior grid points. Exponential; keep grids below ~16 points.
inline double brute_force_partition_max(const orlicz::Phi& phi, const BVFunction& f, const std::vector<double>& grid,
                                        orlicz::Side side) {
    const std::size_t inner = grid.size() - 2;
    double best = 0.0;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << inner); ++mask) {
        std::vector<double> pts{grid.front()};
        for (std::size_t k = 0; k < inner; ++k)
            if (mask >> k & 1u) pts.push_back(grid[k + 1]);
        pts.push_back(grid.back());
        double s = 0.0;
        for (std::size_t k = 0; k + 1 < pts.size(); ++k) {
            const double len = pts[k + 1] - pts[k];
            const double t = std::abs(f.evaluate(pts[k]) - f.evaluate(pts[k + 1])) / len;
            double env = side == orlicz::Side::Plus ? 0.0 : INFINITY;
            // envelope by dense sampling, adequate for the monotone profiles used with it
            for (int j = 0; j <= 400; ++j) {
                const double x = pts[k] + len * j / 400.0;
                const double v = phi.eval(x, t);
                env = side == orlicz::Side::Plus ? std::max(env, v) : std::min(env, v);
            }
            s += env * len;
        }
        best = std::max(best, s);
    }
    return best;
}

struct Corpus {
    std::mt19937_64 rng;
    explicit Corpus(std::uint64_t seed) : rng(seed) {}

    double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng); }
    int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

    std::vector<double> sorted_points(double a, double b, int n, double min_gap) {
        std::vector<double> pts;
        while (static_cast<int>(pts.size()) < n) {
            const double x = uniform(a + min_gap, b - min_gap);
            if (std::all_of(pts.begin(), pts.end(), [&](double p) { return std::abs(p - x) > min_gap; }))
                pts.push_back(x);
        }
        std::sort(pts.begin(), pts.end());
        return pts;
    }

    // Piecewise-linear function: piecewise-constant density on 1-4 pieces
    // plus n_atoms jumps at random interior points.
    BVFunction piecewise_linear(double a, double b, int n_atoms, double slope_scale = 2.0) {
        const int pieces = integer(1, 4);
        std::vector<double> breaks{a};
        for (double x : sorted_points(a, b, pieces - 1, 0.05 * (b - a))) breaks.push_back(x);
        breaks.push_back(b);
        std::vector<std::vector<double>> coeffs;
        for (int k = 0; k < pieces; ++k) coeffs.push_back({uniform(-slope_scale, slope_scale)});
        std::vector<Atom> atoms;
        for (double c : sorted_points(a, b, n_atoms, 0.05 * (b - a)))
            atoms.push_back({c, (integer(0, 1) ? 1.0 : -1.0) * uniform(0.2, 1.0)});
        return BVFunction(a, b, uniform(-1, 1), PiecewisePolynomial(breaks, coeffs), atoms);
    }
};

inline double rel_diff(double a, double b) { return std::abs(a - b) / (1.0 + std::abs(b)); }

}  // namespace testing_support
