#pragma once

#include "orlicz/bvfunc.hpp"
#include "orlicz/extended_real.hpp"
#include "orlicz/phi.hpp"

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <vector>

namespace orlicz {

enum class EstimateStatus { Converged, Divergent, BudgetExhausted };

const char* to_string(EstimateStatus s);

struct MeshValue {
    double mesh = 0.0;
    double value = 0.0;
};

struct VariationEstimate {
    ExtendedReal value;
    std::vector<MeshValue> mesh_values;  // strictly decreasing mesh
    EstimateStatus status = EstimateStatus::BudgetExhausted;
    std::optional<Partition> partition_used;  // sup-type results only
};

struct NormResult {
    ExtendedReal value;
    double modular_at_value = 0.0;
    int bisection_iterations = 0;
};

/// sum_k phi^{side}_{I_k}(|f(a_k) - f(b_k)| / |I_k|) |I_k|, Kahan-summed left to right.
ExtendedReal variation_on_partition(const Phi& phi, const BVFunction& f, const Partition& p, Side side = Side::Plus);

struct SupOptions {
    std::size_t grid_n = 257;
    std::size_t refine_rounds = 3;
    Side side = Side::Plus;
    std::vector<double> extra_points;
};

/// Riesz phi-variation (sup over partitions) by a DP over grid partitions.
/// The grid always holds atoms, density breaks, phi's x-kinks and a probe
/// just right of every atom; it is doubled refine_rounds times.
VariationEstimate sup_variation(const Phi& phi, const BVFunction& f, const SupOptions& opt = {});

/// DP over partitions with endpoints in exactly the given sorted grid
/// (which must start at a and end at b).
VariationEstimate grid_dp_variation(const Phi& phi, const BVFunction& f, std::span<const double> grid,
                                    Side side = Side::Plus);

struct LimsupOptions {
    std::size_t mesh_rounds = 14;
    bool jitter = true;
    int jitter_passes = 3;
};

/// limsup over vanishing mesh: Plus gives the upper variant, Minus the lower.
VariationEstimate limsup_variation(const Phi& phi, const BVFunction& f, Side side, const LimsupOptions& opt = {});

/// Single mesh level n (mesh <= |I| / 2^n) of limsup_variation.
double limsup_level(const Phi& phi, const BVFunction& f, Side side, std::size_t level, bool jitter,
                    int jitter_passes);

/// int phi(x, |f'|) dx + sum_atoms phi'_inf(c) |h| with 0 * inf = 0.
ExtendedReal representation_functional(const Phi& phi, const BVFunction& f);

/// rho(f / lambda) as a function of lambda > 0.
using ScaledModular = std::function<ExtendedReal(double lambda)>;

/// inf{lambda > 0 : rho(f / lambda) <= 1} by bracketing from 1 and bisection
/// to 1e-8 relative; returns the upper end of the final bracket.
NormResult luxemburg_norm(const ScaledModular& rho);

using BVModular = std::function<ExtendedReal(const BVFunction&)>;
NormResult luxemburg_norm(const BVModular& modular, const BVFunction& f);

/// int phi(x, |g(x)|) dx over the support of g.
ExtendedReal lphi_modular(const Phi& phi, const PiecewisePolynomial& g);
NormResult lphi_norm(const Phi& phi, const PiecewisePolynomial& g);

/// Classical variation of f restricted to partitions with endpoints on the
/// grid (uniform grid_n points plus `extra`), by the phi(t) = t DP.
double essential_variation_grid(const std::function<double(double)>& f, double a, double b, std::size_t grid_n,
                                std::span<const double> extra = {});

/// Same DP on explicit samples.
double essential_variation_samples(std::span<const double> values);

}  // namespace orlicz
