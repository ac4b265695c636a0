#include "orlicz/quadrature.hpp"

#include "orlicz/extended_real.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <algorithm>
#include <stdexcept>
#include <cmath>
#include <limits>

namespace orlicz {

// Tolerances near the rounding floor make the bisection run to full depth on every branch.
constexpr unsigned kMaxDepth = 18;

QuadratureResult integrate_split(const std::function<double(double)>& fn, double a, double b,
                                 std::vector<double> cuts, double rel_tol) {
    using boost::math::quadrature::gauss_kronrod;
    std::vector<double> pts{a};
    std::sort(cuts.begin(), cuts.end());
    for (double c : cuts)
        if (c > pts.back() && c < b) pts.push_back(c);
    pts.push_back(b);

    KahanSum total;
    double err_total = 0.0;
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
        double err = 0.0;
        double l1 = 0.0;
        double v = 0.0;
        try {
            v = gauss_kronrod<double, 31>::integrate(fn, pts[i], pts[i + 1], kMaxDepth, rel_tol, &err, &l1);
        } catch (const boost::math::evaluation_error&) {
            v = std::numeric_limits<double>::infinity();
        } catch (const std::domain_error&) {
            v = std::numeric_limits<double>::infinity();
        }
        if (!std::isfinite(v)) return {std::numeric_limits<double>::infinity(), 0.0};
        total.add(v);
        err_total += err;
    }
    return {total.value(), err_total};
}

}  // namespace orlicz
