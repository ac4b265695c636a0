#include "orlicz/bvfunc.hpp"

#include "orlicz/error.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace orlicz {

Interval::Interval(double lo_, double hi_) : lo(lo_), hi(hi_) {
    if (!(lo < hi)) throw Error(ErrorCode::InvalidArgument, "degenerate interval [" + std::to_string(lo) + ", " +
                                                              std::to_string(hi) + "]");
}

Partition::Partition(std::vector<double> points, double a, double b) : points_(std::move(points)) {
    if (points_.size() < 2) throw Error(ErrorCode::InvalidArgument, "partition needs at least one interval");
    if (points_.front() != a || points_.back() != b)
        throw Error(ErrorCode::InvalidArgument, "partition must start at a and end at b");
    for (std::size_t i = 1; i < points_.size(); ++i)
        if (!(points_[i] > points_[i - 1]))
            throw Error(ErrorCode::InvalidArgument, "partition intervals must be non-degenerate");
}

Partition Partition::uniform(double a, double b, std::size_t cells) {
    if (cells == 0) throw Error(ErrorCode::InvalidArgument, "uniform partition needs at least one cell");
    std::vector<double> pts(cells + 1);
    for (std::size_t i = 0; i <= cells; ++i) pts[i] = a + (b - a) * static_cast<double>(i) / static_cast<double>(cells);
    pts.back() = b;
    return Partition(std::move(pts), a, b);
}

double Partition::mesh() const {
    double m = 0.0;
    for (std::size_t i = 0; i + 1 < points_.size(); ++i) m = std::max(m, points_[i + 1] - points_[i]);
    return m;
}

BVFunction::BVFunction(double a, double b, double base, PiecewisePolynomial density, std::vector<Atom> atoms)
    : a_(a), b_(b), base_(base), density_(std::move(density)), atoms_(std::move(atoms)) {
    if (!(a < b)) throw Error(ErrorCode::InvalidArgument, "BV function needs a < b");
    if (!std::isfinite(base)) throw Error(ErrorCode::InvalidArgument, "base value must be finite");
    const double slack = 1e-12 * (b - a);
    if (std::abs(density_.lower() - a) > slack || std::abs(density_.upper() - b) > slack)
        throw Error(ErrorCode::InvalidArgument, "density support must equal the function interval");
    for (std::size_t i = 0; i < atoms_.size(); ++i) {
        const auto& at = atoms_[i];
        if (!(at.location >= a && at.location < b))
            throw Error(ErrorCode::InvalidArgument, "atom locations must lie in [a, b)");
        if (at.height == 0.0 || !std::isfinite(at.height))
            throw Error(ErrorCode::InvalidArgument, "atom heights must be finite and non-zero");
        if (i > 0 && !(at.location > atoms_[i - 1].location))
            throw Error(ErrorCode::InvalidArgument, "atom locations must be strictly increasing");
    }
    atom_prefix_.assign(atoms_.size() + 1, 0.0);
    for (std::size_t i = 0; i < atoms_.size(); ++i) atom_prefix_[i + 1] = atom_prefix_[i] + atoms_[i].height;
}

BVFunction BVFunction::affine(double a, double b, double base, double slope) {
    return BVFunction(a, b, base, PiecewisePolynomial::constant(a, b, slope));
}

double BVFunction::evaluate(double x) const {
    if (!(x >= a_ && x <= b_))
        throw Error(ErrorCode::OutOfDomain, "x = " + std::to_string(x) + " outside the function interval");
    const auto it = std::lower_bound(atoms_.begin(), atoms_.end(), x,
                                     [](const Atom& at, double v) { return at.location < v; });
    const std::size_t n = static_cast<std::size_t>(it - atoms_.begin());
    return base_ + density_.integral_to(x) + atom_prefix_[n];
}

double BVFunction::increment(const Interval& j) const { return evaluate(j.lo) - evaluate(j.hi); }

double BVFunction::total_variation() const {
    double tv = density_.abs_integral();
    for (const auto& at : atoms_) tv += std::abs(at.height);
    return tv;
}

double BVFunction::singular_mass(const std::function<bool(double)>& in_set) const {
    double m = 0.0;
    for (const auto& at : atoms_)
        if (in_set(at.location)) m += std::abs(at.height);
    return m;
}

BVFunction BVFunction::scaled(double s) const {
    if (s == 0.0) return BVFunction(a_, b_, 0.0, PiecewisePolynomial::constant(a_, b_, 0.0));
    auto atoms = atoms_;
    for (auto& at : atoms) at.height *= s;
    return BVFunction(a_, b_, base_ * s, density_.scaled(s), std::move(atoms));
}

BVFunction BVFunction::divided(double lambda) const {
    auto atoms = atoms_;
    for (auto& at : atoms) at.height /= lambda;
    auto coeffs = density_.coeffs();
    for (auto& c : coeffs)
        for (double& v : c) v /= lambda;
    return BVFunction(a_, b_, base_ / lambda, PiecewisePolynomial(density_.breaks(), std::move(coeffs)),
                      std::move(atoms));
}

BVFunction BVFunction::combine(double alpha, const BVFunction& f, double beta, const BVFunction& g) {
    if (f.a_ != g.a_ || f.b_ != g.b_)
        throw Error(ErrorCode::InvalidArgument, "cannot combine BV functions on different intervals");
    std::vector<Atom> atoms;
    std::size_t i = 0, j = 0;
    while (i < f.atoms_.size() || j < g.atoms_.size()) {
        Atom at;
        if (j == g.atoms_.size() || (i < f.atoms_.size() && f.atoms_[i].location < g.atoms_[j].location)) {
            at = {f.atoms_[i].location, alpha * f.atoms_[i].height};
            ++i;
        } else if (i == f.atoms_.size() || g.atoms_[j].location < f.atoms_[i].location) {
            at = {g.atoms_[j].location, beta * g.atoms_[j].height};
            ++j;
        } else {
            at = {f.atoms_[i].location, alpha * f.atoms_[i].height + beta * g.atoms_[j].height};
            ++i;
            ++j;
        }
        if (at.height != 0.0) atoms.push_back(at);
    }
    return BVFunction(f.a_, f.b_, alpha * f.base_ + beta * g.base_,
                      PiecewisePolynomial::combine(alpha, f.density_, beta, g.density_), std::move(atoms));
}

std::vector<double> BVFunction::mandatory_points() const {
    std::vector<double> pts{a_, b_};
    for (const auto& at : atoms_) pts.push_back(at.location);
    for (double br : density_.breaks())
        if (br > a_ && br < b_) pts.push_back(br);
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    return pts;
}

PiecewisePolynomial BVFunction::values() const {
    std::vector<double> at, h;
    for (const auto& a : atoms_) {
        at.push_back(a.location);
        h.push_back(a.height);
    }
    return density_.antiderivative(base_, at, h);
}

std::vector<double> merge_grid(std::span<const double> keep, std::span<const double> fill, double tol) {
    std::vector<double> k(keep.begin(), keep.end());
    std::sort(k.begin(), k.end());
    k.erase(std::unique(k.begin(), k.end()), k.end());
    std::vector<double> out;
    out.reserve(k.size() + fill.size());
    std::size_t ki = 0;
    for (double x : fill) {
        while (ki < k.size() && k[ki] <= x + tol) {
            if (out.empty() || k[ki] > out.back()) out.push_back(k[ki]);
            ++ki;
        }
        // fill point survives only if it is not within tol of a kept point
        const bool near_prev = !out.empty() && x - out.back() <= tol;
        const bool near_next = ki < k.size() && k[ki] - x <= tol;
        if (!near_prev && !near_next) out.push_back(x);
    }
    for (; ki < k.size(); ++ki)
        if (out.empty() || k[ki] > out.back()) out.push_back(k[ki]);
    return out;
}

}  // namespace orlicz
