#include "orlicz/piecewise.hpp"

#include "orlicz/error.hpp"

#include <algorithm>
#include <cmath>

namespace orlicz {

double polynomial_value(std::span<const double> coeffs, double u) {
    double v = 0.0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) v = v * u + *it;
    return v;
}

namespace {

std::vector<double> derivative(std::span<const double> c) {
    if (c.size() <= 1) return {0.0};
    std::vector<double> d(c.size() - 1);
    for (std::size_t j = 1; j < c.size(); ++j) d[j - 1] = static_cast<double>(j) * c[j];
    return d;
}

std::vector<double> integrate_coeffs(std::span<const double> c) {
    std::vector<double> out(c.size() + 1, 0.0);
    for (std::size_t j = 0; j < c.size(); ++j) out[j + 1] = c[j] / static_cast<double>(j + 1);
    return out;
}

std::size_t effective_degree(std::span<const double> c) {
    std::size_t d = c.size();
    while (d > 0 && c[d - 1] == 0.0) --d;
    return d == 0 ? 0 : d - 1;
}

double bisect_root(std::span<const double> c, double lo, double hi) {
    double flo = polynomial_value(c, lo);
    for (int it = 0; it < 200 && hi - lo > 0.0; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (mid == lo || mid == hi) break;
        const double fm = polynomial_value(c, mid);
        if (fm == 0.0) return mid;
        if ((fm < 0.0) == (flo < 0.0)) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

}  // namespace

std::vector<double> polynomial_roots(std::span<const double> coeffs, double lo, double hi) {
    const std::size_t deg = effective_degree(coeffs);
    std::vector<double> roots;
    if (deg == 0) return roots;
    if (deg == 1) {
        const double r = -coeffs[0] / coeffs[1];
        if (r >= lo && r <= hi) roots.push_back(r);
        return roots;
    }
    // Between consecutive critical points the polynomial is monotone.
    const auto d = derivative(coeffs.subspan(0, deg + 1));
    std::vector<double> knots{lo};
    for (double c : polynomial_roots(d, lo, hi))
        if (c > knots.back()) knots.push_back(c);
    if (hi > knots.back()) knots.push_back(hi);
    for (std::size_t i = 0; i + 1 < knots.size(); ++i) {
        const double a = knots[i], b = knots[i + 1];
        const double fa = polynomial_value(coeffs, a), fb = polynomial_value(coeffs, b);
        if (fa == 0.0) {
            if (roots.empty() || roots.back() != a) roots.push_back(a);
        } else if (fb != 0.0 && (fa < 0.0) != (fb < 0.0)) {
            roots.push_back(bisect_root(coeffs, a, b));
        }
    }
    if (polynomial_value(coeffs, hi) == 0.0 && (roots.empty() || roots.back() != hi)) roots.push_back(hi);
    return roots;
}

std::vector<double> shift_polynomial(std::span<const double> coeffs, double shift) {
    // Horner-style Taylor shift.
    std::vector<double> c(coeffs.begin(), coeffs.end());
    const std::size_t n = c.size();
    for (std::size_t i = 0; i + 1 < n; ++i)
        for (std::size_t j = n - 1; j > i; --j) c[j - 1] += shift * c[j];
    return c;
}

PiecewisePolynomial::PiecewisePolynomial(std::vector<double> breaks, std::vector<std::vector<double>> coeffs)
    : breaks_(std::move(breaks)), coeffs_(std::move(coeffs)) {
    if (breaks_.size() < 2 || coeffs_.size() + 1 != breaks_.size())
        throw Error(ErrorCode::InvalidArgument, "piecewise polynomial needs n+1 breaks for n pieces");
    for (std::size_t i = 1; i < breaks_.size(); ++i)
        if (!(breaks_[i] > breaks_[i - 1]))
            throw Error(ErrorCode::InvalidArgument, "piecewise polynomial breaks must be strictly increasing");
    for (auto& c : coeffs_) {
        if (c.empty()) c.push_back(0.0);
        for (double v : c)
            if (!std::isfinite(v)) throw Error(ErrorCode::InvalidArgument, "polynomial coefficients must be finite");
    }
    rebuild_cumulative();
}

PiecewisePolynomial PiecewisePolynomial::constant(double lower, double upper, double value) {
    return PiecewisePolynomial({lower, upper}, {{value}});
}

PiecewisePolynomial PiecewisePolynomial::linear_interpolant(std::span<const double> x, std::span<const double> v) {
    if (x.size() < 2 || x.size() != v.size())
        throw Error(ErrorCode::InvalidArgument, "linear interpolant needs at least two matching samples");
    std::vector<std::vector<double>> coeffs;
    for (std::size_t i = 0; i + 1 < x.size(); ++i) coeffs.push_back({v[i], (v[i + 1] - v[i]) / (x[i + 1] - x[i])});
    return PiecewisePolynomial(std::vector<double>(x.begin(), x.end()), std::move(coeffs));
}

void PiecewisePolynomial::rebuild_cumulative() {
    cumulative_.assign(breaks_.size(), 0.0);
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        const auto anti = integrate_coeffs(coeffs_[k]);
        cumulative_[k + 1] = cumulative_[k] + polynomial_value(anti, breaks_[k + 1] - breaks_[k]);
    }
}

std::size_t PiecewisePolynomial::piece_index(double x) const {
    if (x <= breaks_.front()) return 0;
    if (x >= breaks_.back()) return coeffs_.size() - 1;
    const auto it = std::upper_bound(breaks_.begin(), breaks_.end(), x);
    return static_cast<std::size_t>(it - breaks_.begin()) - 1;
}

double PiecewisePolynomial::value_on_piece(std::size_t k, double x) const {
    return polynomial_value(coeffs_[k], x - breaks_[k]);
}

double PiecewisePolynomial::value(double x) const { return value_on_piece(piece_index(x), x); }

double PiecewisePolynomial::integral_to(double x) const {
    if (x <= breaks_.front()) return 0.0;
    if (x >= breaks_.back()) return cumulative_.back();
    const std::size_t k = piece_index(x);
    const auto anti = integrate_coeffs(coeffs_[k]);
    return cumulative_[k] + polynomial_value(anti, x - breaks_[k]);
}

double PiecewisePolynomial::abs_integral() const {
    double total = 0.0;
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        const double len = breaks_[k + 1] - breaks_[k];
        const auto anti = integrate_coeffs(coeffs_[k]);
        std::vector<double> cuts{0.0};
        for (double r : polynomial_roots(coeffs_[k], 0.0, len))
            if (r > cuts.back() && r < len) cuts.push_back(r);
        cuts.push_back(len);
        for (std::size_t i = 0; i + 1 < cuts.size(); ++i)
            total += std::abs(polynomial_value(anti, cuts[i + 1]) - polynomial_value(anti, cuts[i]));
    }
    return total;
}

PiecewisePolynomial PiecewisePolynomial::scaled(double s) const {
    auto coeffs = coeffs_;
    for (auto& c : coeffs)
        for (double& v : c) v *= s;
    return PiecewisePolynomial(breaks_, std::move(coeffs));
}

PiecewisePolynomial PiecewisePolynomial::refined(const std::vector<double>& new_breaks) const {
    std::vector<std::vector<double>> coeffs;
    coeffs.reserve(new_breaks.size() - 1);
    for (std::size_t i = 0; i + 1 < new_breaks.size(); ++i) {
        const double mid = 0.5 * (new_breaks[i] + new_breaks[i + 1]);
        const std::size_t k = piece_index(mid);
        coeffs.push_back(shift_polynomial(coeffs_[k], new_breaks[i] - breaks_[k]));
    }
    return PiecewisePolynomial(new_breaks, std::move(coeffs));
}

PiecewisePolynomial PiecewisePolynomial::combine(double alpha, const PiecewisePolynomial& f, double beta,
                                                 const PiecewisePolynomial& g) {
    if (f.lower() != g.lower() || f.upper() != g.upper())
        throw Error(ErrorCode::InvalidArgument, "cannot combine piecewise polynomials on different supports");
    std::vector<double> br;
    std::merge(f.breaks_.begin(), f.breaks_.end(), g.breaks_.begin(), g.breaks_.end(), std::back_inserter(br));
    br.erase(std::unique(br.begin(), br.end()), br.end());
    const auto fr = f.refined(br);
    const auto gr = g.refined(br);
    std::vector<std::vector<double>> coeffs(br.size() - 1);
    for (std::size_t k = 0; k + 1 < br.size(); ++k) {
        const auto& a = fr.coeffs_[k];
        const auto& b = gr.coeffs_[k];
        coeffs[k].assign(std::max(a.size(), b.size()), 0.0);
        for (std::size_t j = 0; j < a.size(); ++j) coeffs[k][j] += alpha * a[j];
        for (std::size_t j = 0; j < b.size(); ++j) coeffs[k][j] += beta * b[j];
    }
    return PiecewisePolynomial(std::move(br), std::move(coeffs));
}

PiecewisePolynomial PiecewisePolynomial::antiderivative(double value_at_lower, std::span<const double> jump_at,
                                                        std::span<const double> jump_height) const {
    std::vector<double> br = breaks_;
    for (double c : jump_at)
        if (c > lower() && c < upper()) br.push_back(c);
    std::sort(br.begin(), br.end());
    br.erase(std::unique(br.begin(), br.end()), br.end());
    const auto fine = refined(br);
    std::vector<std::vector<double>> coeffs(br.size() - 1);
    for (std::size_t k = 0; k + 1 < br.size(); ++k) {
        coeffs[k] = integrate_coeffs(fine.coeffs_[k]);
        double jumps = 0.0;
        for (std::size_t i = 0; i < jump_at.size(); ++i)
            if (jump_at[i] <= br[k]) jumps += jump_height[i];
        coeffs[k][0] = value_at_lower + fine.integral_to(br[k]) + jumps;
    }
    return PiecewisePolynomial(std::move(br), std::move(coeffs));
}

}  // namespace orlicz
