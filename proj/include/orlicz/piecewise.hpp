#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace orlicz {

/// Real roots of sum_k c[k] u^k inside [lo, hi], sorted.
std::vector<double> polynomial_roots(std::span<const double> coeffs, double lo, double hi);

double polynomial_value(std::span<const double> coeffs, double u);

/// Piecewise polynomial on [breaks.front(), breaks.back()]. Piece k is
/// sum_j coeffs[k][j] * (x - breaks[k])^j on [breaks[k], breaks[k+1]].
/// Evaluation is right-continuous at interior breaks.
class PiecewisePolynomial {
public:
    PiecewisePolynomial() = default;
    PiecewisePolynomial(std::vector<double> breaks, std::vector<std::vector<double>> coeffs);

    static PiecewisePolynomial constant(double lower, double upper, double value);
    /// Linear interpolation through (x[i], v[i]).
    static PiecewisePolynomial linear_interpolant(std::span<const double> x, std::span<const double> v);

    double lower() const { return breaks_.front(); }
    double upper() const { return breaks_.back(); }
    std::size_t pieces() const { return coeffs_.size(); }
    const std::vector<double>& breaks() const { return breaks_; }
    const std::vector<std::vector<double>>& coeffs() const { return coeffs_; }

    std::size_t piece_index(double x) const;
    double value(double x) const;
    /// Value on piece k (for one-sided limits at breaks).
    double value_on_piece(std::size_t k, double x) const;

    /// Exact integral over [lower, x].
    double integral_to(double x) const;
    /// Exact integral of |p| over the whole support.
    double abs_integral() const;

    PiecewisePolynomial scaled(double s) const;
    /// Refines both operands to the union of breaks and adds.
    static PiecewisePolynomial combine(double alpha, const PiecewisePolynomial& f, double beta,
                                       const PiecewisePolynomial& g);
    /// Same function expressed on a finer break set (must contain the current breaks' span).
    PiecewisePolynomial refined(const std::vector<double>& new_breaks) const;

    /// Antiderivative starting at `value_at_lower`, plus jumps of size h[i]
    /// applied just right of location c[i] (left-continuous steps).
    PiecewisePolynomial antiderivative(double value_at_lower, std::span<const double> jump_at,
                                       std::span<const double> jump_height) const;

private:
    void rebuild_cumulative();

    std::vector<double> breaks_;
    std::vector<std::vector<double>> coeffs_;
    std::vector<double> cumulative_;  // integral over [lower, breaks_[k]]
};

/// Coefficients of p(u + shift) given those of p(u).
std::vector<double> shift_polynomial(std::span<const double> coeffs, double shift);

}  // namespace orlicz
