#pragma once

#include "orlicz/piecewise.hpp"

#include <functional>
#include <span>
#include <vector>

namespace orlicz {

struct Interval {
    double lo = 0.0;
    double hi = 1.0;

    Interval() = default;
    Interval(double lo_, double hi_);  // rejects lo >= hi
    double length() const { return hi - lo; }
};

/// Closed intervals [p_k, p_{k+1}] with p_0 = a and p_n = b.
class Partition {
public:
    /// Validates strictly increasing points with the given endpoints.
    Partition(std::vector<double> points, double a, double b);
    static Partition uniform(double a, double b, std::size_t cells);

    const std::vector<double>& points() const { return points_; }
    std::size_t size() const { return points_.size() - 1; }
    Interval interval(std::size_t k) const { return Interval(points_[k], points_[k + 1]); }
    double mesh() const;

private:
    std::vector<double> points_;
};

/// Jump atom h * delta_c of the singular part. The step is open on the
/// left: it contributes to f(x) only for x > c.
struct Atom {
    double location = 0.0;
    double height = 0.0;
};

/// Left-continuous BV function on [a, b]:
///   f(x) = f(a) + int_a^x f'(t) dt + sum_{c < x} h_c.
/// The absolutely continuous part is a piecewise polynomial density; the
/// singular part is finitely many atoms. An atom may sit at a to model
/// a jump immediately right of the left endpoint.
class BVFunction {
public:
    BVFunction(double a, double b, double base, PiecewisePolynomial density, std::vector<Atom> atoms = {});

    /// f(x) = base + slope * (x - a)
    static BVFunction affine(double a, double b, double base, double slope);

    double lower() const { return a_; }
    double upper() const { return b_; }
    double base() const { return base_; }
    const PiecewisePolynomial& density() const { return density_; }
    const std::vector<Atom>& atoms() const { return atoms_; }

    double evaluate(double x) const;
    /// f(lo) - f(hi)
    double increment(const Interval& j) const;
    /// |Df|([a,b]) = int |f'| + sum |h|
    double total_variation() const;
    /// |D^s f|(S)
    double singular_mass(const std::function<bool(double)>& in_set) const;

    BVFunction scaled(double s) const;
    /// f / lambda, computed by division so that (2f)/(2 lambda) == f / lambda bit for bit.
    BVFunction divided(double lambda) const;
    static BVFunction combine(double alpha, const BVFunction& f, double beta, const BVFunction& g);

    /// Sorted points every partition grid should contain: endpoints, atom
    /// locations and density breaks.
    std::vector<double> mandatory_points() const;

    /// The values of f as a piecewise polynomial (right-continuous at atoms;
    /// differs from f only on the finite atom set).
    PiecewisePolynomial values() const;

private:
    double a_;
    double b_;
    double base_;
    PiecewisePolynomial density_;
    std::vector<Atom> atoms_;
    std::vector<double> atom_prefix_;  // atom_prefix_[i] = sum of heights of atoms [0, i)
};

/// Sorted union of the points with near-duplicates removed; entries of
/// `keep` win over `fill` when closer than tol.
std::vector<double> merge_grid(std::span<const double> keep, std::span<const double> fill, double tol);

}  // namespace orlicz
