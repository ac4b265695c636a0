#include "orlicz/variation.hpp"

#include "orlicz/error.hpp"
#include "orlicz/kernels.hpp"
#include "orlicz/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace orlicz {

const char* to_string(EstimateStatus s) {
    switch (s) {
        case EstimateStatus::Converged: return "Converged";
        case EstimateStatus::Divergent: return "Divergent";
        case EstimateStatus::BudgetExhausted: return "BudgetExhausted";
    }
    return "?";
}

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kBlowup = 1e12;
constexpr double kGrowth = 1.5;

void check_support(const Phi& phi, const BVFunction& f) {
    if (f.lower() < phi.lower() || f.upper() > phi.upper())
        throw Error(ErrorCode::OutOfDomain, "function interval is not inside the phi domain");
}

// Three successive growth factors >= 1.5 at the tail, or a value past 1e12.
bool diverging(const std::vector<MeshValue>& mv) {
    if (mv.empty()) return false;
    const double last = mv.back().value;
    if (!std::isfinite(last) || last > kBlowup) return true;
    if (mv.size() < 4) return false;
    for (std::size_t k = mv.size() - 3; k < mv.size(); ++k) {
        const double prev = mv[k - 1].value;
        if (!(prev > 0.0 && mv[k].value >= kGrowth * prev)) return false;
    }
    return true;
}

std::vector<double> structural_points(const Phi& phi, const BVFunction& f) {
    auto pts = f.mandatory_points();
    for (double x : phi.x_breakpoints())
        if (x > f.lower() && x < f.upper()) pts.push_back(x);
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    return pts;
}

std::vector<double> uniform_points(double a, double b, std::size_t cells) {
    std::vector<double> pts(cells + 1);
    for (std::size_t i = 0; i <= cells; ++i) pts[i] = a + (b - a) * static_cast<double>(i) / static_cast<double>(cells);
    pts.back() = b;
    return pts;
}

}  // namespace

ExtendedReal variation_on_partition(const Phi& phi, const BVFunction& f, const Partition& p, Side side) {
    check_support(phi, f);
    if (p.points().front() != f.lower() || p.points().back() != f.upper())
        throw Error(ErrorCode::InvalidArgument, "partition does not cover the function interval");
    const auto& pts = p.points();
    std::vector<double> vals(pts.size());
    for (std::size_t i = 0; i < pts.size(); ++i) vals[i] = f.evaluate(pts[i]);
    std::vector<double> terms(pts.size() - 1);
    kernels::partition_terms(phi, pts, vals, side, terms);
    return kernels::ordered_sum(terms);
}

VariationEstimate grid_dp_variation(const Phi& phi, const BVFunction& f, std::span<const double> grid, Side side) {
    check_support(phi, f);
    if (grid.size() < 2) throw Error(ErrorCode::InvalidArgument, "grid needs at least two points");
    const Partition whole(std::vector<double>(grid.begin(), grid.end()), f.lower(), f.upper());
    std::vector<double> vals(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) vals[i] = f.evaluate(grid[i]);
    const auto dp = kernels::partition_dp(grid.size(), [&](std::size_t i, std::size_t j) {
        return kernels::riesz_term(phi, grid[i], grid[j], vals[i], vals[j], side);
    });
    std::vector<double> cut_pts;
    for (std::size_t idx : dp.cuts) cut_pts.push_back(grid[idx]);
    Partition best(std::move(cut_pts), f.lower(), f.upper());

    VariationEstimate est;
    est.value = std::isfinite(dp.value) ? variation_on_partition(phi, f, best, side) : ExtendedReal::infinity();
    est.mesh_values.push_back({whole.mesh(), est.value.value()});
    est.status = EstimateStatus::Converged;
    est.partition_used = std::move(best);
    return est;
}

VariationEstimate sup_variation(const Phi& phi, const BVFunction& f, const SupOptions& opt) {
    check_support(phi, f);
    if (opt.grid_n < 2) throw Error(ErrorCode::InvalidArgument, "grid_n must be at least 2");
    const double a = f.lower(), b = f.upper();
    auto base = structural_points(phi, f);
    for (double x : opt.extra_points) {
        if (!(x >= a && x <= b)) throw Error(ErrorCode::OutOfDomain, "extra grid point outside the interval");
        base.push_back(x);
    }

    VariationEstimate est;
    double best_value = -1.0;
    for (std::size_t r = 0; r <= opt.refine_rounds; ++r) {
        const std::size_t cells = (opt.grid_n - 1) << r;
        const double spacing = (b - a) / static_cast<double>(cells);
        auto keep = base;
        for (const auto& at : f.atoms()) {
            const double probe = at.location + 1e-4 * spacing;
            if (probe < b) keep.push_back(probe);
        }
        const auto grid = merge_grid(keep, uniform_points(a, b, cells), 1e-9 * spacing);
        auto round = grid_dp_variation(phi, f, grid, opt.side);
        const double v = round.value.value();
        est.mesh_values.push_back({spacing, v});
        if (v > best_value) {
            best_value = v;
            est.partition_used = std::move(round.partition_used);
        }
        if (diverging(est.mesh_values)) break;
    }

    if (diverging(est.mesh_values)) {
        est.value = ExtendedReal::infinity();
        est.status = EstimateStatus::Divergent;
        return est;
    }
    est.value = best_value;
    const auto& mv = est.mesh_values;
    const bool settled =
        mv.size() >= 2 && std::abs(mv.back().value - mv[mv.size() - 2].value) <= 1e-6 * std::abs(mv.back().value);
    est.status = settled ? EstimateStatus::Converged : EstimateStatus::BudgetExhausted;
    return est;
}

double limsup_level(const Phi& phi, const BVFunction& f, Side side, std::size_t level, bool jitter,
                    int jitter_passes) {
    const double a = f.lower(), b = f.upper();
    // Home spacing is half the level mesh, so every point may move half a
    // cell without any interval exceeding the mesh.
    const std::size_t cells = std::size_t{1} << (level + 1);
    const double g = (b - a) / static_cast<double>(cells);
    const auto keep = structural_points(phi, f);

    // Near every structural point c the homes form the lattice c + k g,
    // |k| <= kLocal, replacing the uniform homes there; the local picture is
    // then the same at every level up to scale.
    constexpr int kLocal = 4;
    std::vector<double> homes;
    std::vector<double> centers(keep.begin() + 1, keep.end() - 1);
    for (const auto& at : f.atoms())
        if (at.location == a) centers.insert(centers.begin(), a);
    for (double c : centers)
        for (int k = -kLocal; k <= kLocal; ++k) {
            const double s = c + k * g;
            if (k != 0 && s > a && s < b) homes.push_back(s);
        }
    for (double x : uniform_points(a, b, cells)) {
        const auto it = std::lower_bound(centers.begin(), centers.end(), x);
        const double reach = (kLocal + 0.5) * g;
        const bool near = (it != centers.end() && *it - x < reach) || (it != centers.begin() && x - *(it - 1) < reach);
        if (!near) homes.push_back(x);
    }
    std::sort(homes.begin(), homes.end());
    homes.erase(std::unique(homes.begin(), homes.end()), homes.end());

    kernels::JitterState st;
    st.points = merge_grid(keep, homes, 1e-9 * g);
    st.home = st.points;
    st.half_cell = 0.5 * g;
    st.max_len = 2.0 * g;
    st.mobile.assign(st.points.size(), 0);
    for (std::size_t k = 1; k + 1 < st.points.size(); ++k)
        st.mobile[k] = std::binary_search(keep.begin(), keep.end(), st.points[k]) ? 0 : 1;
    st.values.resize(st.points.size());
    for (std::size_t k = 0; k < st.points.size(); ++k) st.values[k] = f.evaluate(st.points[k]);

    if (jitter) {
        const auto eval = [&f](double x) { return f.evaluate(x); };
        double step = 0.25 * g;
        for (int pass = 0; pass < jitter_passes; ++pass, step *= 0.5) kernels::jitter_pass(phi, side, st, step, eval);
    }
    std::vector<double> terms(st.points.size() - 1);
    kernels::partition_terms(phi, st.points, st.values, side, terms);
    return kernels::ordered_sum(terms);
}

VariationEstimate limsup_variation(const Phi& phi, const BVFunction& f, Side side, const LimsupOptions& opt) {
    check_support(phi, f);
    if (opt.mesh_rounds < 4) throw Error(ErrorCode::InvalidArgument, "mesh_rounds must be at least 4");
    const double len = f.upper() - f.lower();

    VariationEstimate est;
    for (std::size_t n = 1; n <= opt.mesh_rounds; ++n) {
        const double v = limsup_level(phi, f, side, n, opt.jitter, opt.jitter_passes);
        est.mesh_values.push_back({len / std::ldexp(1.0, static_cast<int>(n)), v});
        if (!std::isfinite(v) || v > kBlowup) break;
    }
    if (diverging(est.mesh_values)) {
        est.value = ExtendedReal::infinity();
        est.status = EstimateStatus::Divergent;
        return est;
    }

    const auto& mv = est.mesh_values;
    const std::size_t m = mv.size();
    const double v0 = mv[m - 3].value, v1 = mv[m - 2].value, v2 = mv[m - 1].value;
    const double d1 = v1 - v0, d2 = v2 - v1;
    const double scale = 1.0 + std::abs(v2);
    if (std::abs(d2) <= 1e-12 * scale) {
        est.value = v2;
        est.status = EstimateStatus::Converged;
        return est;
    }
    if (d1 * d2 > 0.0 && std::abs(d1) >= 1.05 * std::abs(d2)) {
        // Geometric tail with ratio d2 / d1.
        const double correction = d2 / (d1 / d2 - 1.0);
        est.value = v2 + correction;
        est.status = std::abs(correction) <= 1e-3 * (1.0 + std::abs(v2 + correction))
                         ? EstimateStatus::Converged
                         : EstimateStatus::BudgetExhausted;
        return est;
    }
    est.value = v2;
    est.status = std::abs(d2) <= 1e-6 * scale ? EstimateStatus::Converged : EstimateStatus::BudgetExhausted;
    return est;
}

namespace {

std::vector<double> abs_kinks(const PiecewisePolynomial& g) {
    std::vector<double> cuts = g.breaks();
    for (std::size_t k = 0; k < g.pieces(); ++k) {
        const double lo = g.breaks()[k];
        const double len = g.breaks()[k + 1] - lo;
        for (double r : polynomial_roots(g.coeffs()[k], 0.0, len)) cuts.push_back(lo + r);
    }
    return cuts;
}

ExtendedReal integrate_phi_of_abs(const Phi& phi, const PiecewisePolynomial& g) {
    auto cuts = abs_kinks(g);
    for (double x : phi.x_breakpoints()) cuts.push_back(x);
    const auto integrand = [&](double x) { return phi.eval(x, std::abs(g.value(x))); };
    const auto q = integrate_split(integrand, g.lower(), g.upper(), std::move(cuts));
    if (!std::isfinite(q.value)) return ExtendedReal::infinity();
    return q.value;
}

PiecewisePolynomial divided(const PiecewisePolynomial& g, double lambda) {
    auto coeffs = g.coeffs();
    for (auto& c : coeffs)
        for (double& v : c) v /= lambda;
    return PiecewisePolynomial(g.breaks(), std::move(coeffs));
}

}  // namespace

ExtendedReal representation_functional(const Phi& phi, const BVFunction& f) {
    check_support(phi, f);
    ExtendedReal total = integrate_phi_of_abs(phi, f.density());
    for (const auto& at : f.atoms()) total += phi.phi_prime_infinity(at.location) * ExtendedReal(std::abs(at.height));
    return total;
}

NormResult luxemburg_norm(const ScaledModular& rho) {
    NormResult out;
    constexpr int kMaxExp = 100;
    double lo = 0.0, hi = 0.0;
    double rho_hi = 0.0;
    const ExtendedReal r1 = rho(1.0);
    if (r1.value() <= 1.0) {
        hi = 1.0;
        rho_hi = r1.value();
        bool all_zero = r1.value() == 0.0;
        int e = 0;
        for (;;) {
            if (e == -kMaxExp) {
                out.value = all_zero ? 0.0 : hi;
                out.modular_at_value = all_zero ? 0.0 : rho_hi;
                return out;
            }
            const double lam = std::ldexp(1.0, --e);
            const ExtendedReal r = rho(lam);
            if (r.value() != 0.0) all_zero = false;
            if (r.value() > 1.0) {
                lo = lam;
                break;
            }
            hi = lam;
            rho_hi = r.value();
        }
    } else {
        lo = 1.0;
        int e = 0;
        for (;;) {
            if (e == kMaxExp) {
                out.value = ExtendedReal::infinity();
                out.modular_at_value = kInf;
                return out;
            }
            const double lam = std::ldexp(1.0, ++e);
            const ExtendedReal r = rho(lam);
            if (r.value() <= 1.0) {
                hi = lam;
                rho_hi = r.value();
                break;
            }
            lo = lam;
        }
    }
    while (hi - lo > 1e-8 * hi) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;
        const ExtendedReal r = rho(mid);
        ++out.bisection_iterations;
        if (r.value() <= 1.0) {
            hi = mid;
            rho_hi = r.value();
        } else {
            lo = mid;
        }
    }
    out.value = hi;
    out.modular_at_value = rho_hi;
    return out;
}

NormResult luxemburg_norm(const BVModular& modular, const BVFunction& f) {
    return luxemburg_norm([&](double lambda) { return modular(f.divided(lambda)); });
}

ExtendedReal lphi_modular(const Phi& phi, const PiecewisePolynomial& g) {
    if (g.lower() < phi.lower() || g.upper() > phi.upper())
        throw Error(ErrorCode::OutOfDomain, "function support is not inside the phi domain");
    return integrate_phi_of_abs(phi, g);
}

NormResult lphi_norm(const Phi& phi, const PiecewisePolynomial& g) {
    return luxemburg_norm([&](double lambda) { return lphi_modular(phi, divided(g, lambda)); });
}

double essential_variation_samples(std::span<const double> values) {
    if (values.size() < 2) return 0.0;
    return kernels::partition_dp(values.size(), [&](std::size_t i, std::size_t j) {
               return std::abs(values[i] - values[j]);
           }).value;
}

double essential_variation_grid(const std::function<double(double)>& f, double a, double b, std::size_t grid_n,
                                std::span<const double> extra) {
    if (grid_n < 2) throw Error(ErrorCode::InvalidArgument, "grid_n must be at least 2");
    if (!(a < b)) throw Error(ErrorCode::InvalidArgument, "essential variation needs a < b");
    std::vector<double> keep{a, b};
    for (double x : extra)
        if (x > a && x < b) keep.push_back(x);
    const double spacing = (b - a) / static_cast<double>(grid_n - 1);
    const auto grid = merge_grid(keep, uniform_points(a, b, grid_n - 1), 1e-12 * spacing);
    std::vector<double> vals(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) vals[i] = f(grid[i]);
    return essential_variation_samples(vals);
}

}  // namespace orlicz
