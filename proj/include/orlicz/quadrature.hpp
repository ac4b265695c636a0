#pragma once

#include <functional>
#include <vector>

namespace orlicz {

struct QuadratureResult {
    double value = 0.0;
    double error = 0.0;  // summed Gauss-Kronrod error estimates
};

/// Integral of fn over [a, b], split at every cut inside (a, b) and
/// integrated piece by piece with adaptive Gauss-Kronrod. Non-finite
/// integrand values make the result +inf.
QuadratureResult integrate_split(const std::function<double(double)>& fn, double a, double b,
                                 std::vector<double> cuts, double rel_tol = 1e-11);

}  // namespace orlicz
