#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace orlicz {

/// Exact extrema of a profile over a closed interval, with a location attaining each.
struct Range {
    double lo = 0.0;
    double hi = 0.0;
    double argmin = 0.0;
    double argmax = 0.0;
};

/// Declared Hölder bound |g(x) - g(y)| <= constant * |x - y|^exponent.
struct HolderBound {
    double exponent = 1.0;
    double constant = 0.0;
};

/// A scalar function of position used for exponents p(x), q(x) and
/// coefficients a(x), w(x). Three representations:
///  - Constant
///  - PiecewiseLinear (constant extension outside the knot range)
///  - Analytic: a callable plus metadata that makes sup/inf over an interval
///    certifiable (monotone segments and/or a modulus of continuity).
class Profile {
public:
    struct Constant {
        double value = 0.0;
    };
    struct PiecewiseLinear {
        std::vector<double> knots;
        std::vector<double> values;
    };
    struct Analytic {
        std::function<double(double)> fn;
        // Points splitting the line into pieces on which fn is monotone.
        // An empty vector with has_segments == true means fn is monotone everywhere.
        std::vector<double> monotone_breaks;
        bool has_segments = false;
        std::function<double(double)> modulus;  // may be empty
        std::optional<HolderBound> holder;
        // Named analytic families round-trip through JSON; "custom" does not.
        std::string type = "custom";
        std::map<std::string, std::vector<double>> params;
    };
    using Representation = std::variant<Constant, PiecewiseLinear, Analytic>;

    Profile() : rep_(Constant{0.0}) {}

    static Profile constant(double value);
    static Profile piecewise_linear(std::vector<double> knots, std::vector<double> values);
    static Profile analytic(std::function<double(double)> fn, std::vector<double> monotone_breaks,
                            std::function<double(double)> modulus = {});
    static Profile analytic_with_modulus(std::function<double(double)> fn,
                                         std::function<double(double)> modulus);

    /// 1 + 1/log(1/|x - origin|), extended by 1 at the origin. Needs |x - origin| < 1.
    static Profile log_blowup(double origin);
    /// scale * min_c |x - c|^exponent: Hölder, vanishing exactly on the centers.
    static Profile holder_distance(std::vector<double> centers, double exponent, double scale);
    /// `low` on [plateau_lo, plateau_hi], `high` beyond a smoothstep ramp of width `ramp`.
    static Profile smooth_plateau(double low, double high, double plateau_lo, double plateau_hi,
                                  double ramp);

    double value(double x) const;
    Range range(double l, double r) const;

    /// Points where the profile has kinks or changes monotonicity.
    std::vector<double> breakpoints() const;

    bool is_constant() const { return std::holds_alternative<Constant>(rep_); }
    bool is_piecewise_linear() const { return std::holds_alternative<PiecewiseLinear>(rep_); }
    bool is_analytic() const { return std::holds_alternative<Analytic>(rep_); }

    /// Hölder bound known in closed form: constants and piecewise-linear
    /// profiles are Lipschitz; analytic profiles only if declared.
    std::optional<HolderBound> holder() const;

    /// Modulus of continuity if one is known.
    std::optional<double> modulus(double r) const;

    const Representation& representation() const { return rep_; }

private:
    explicit Profile(Representation rep) : rep_(std::move(rep)) {}
    Range sampled_range(const Analytic& a, double l, double r) const;

    Representation rep_;
};

}  // namespace orlicz
