#pragma once

#include "orlicz/extended_real.hpp"
#include "orlicz/profile.hpp"

#include <string>
#include <variant>
#include <vector>

namespace orlicz {

enum class Side { Plus, Minus };

/// t^p
struct PowerPhi {
    double p = 2.0;
};

/// w(x) t^p with w > 0.
struct WeightedPowerPhi {
    double p = 2.0;
    Profile weight;
};

/// One convex, non-decreasing summand of an x-independent Orlicz function.
struct OrliczTerm {
    enum class Type {
        Power,       // coef * t^exponent
        Saturating,  // coef * t^2 / (shift + t), slope tends to coef
        Hinge,       // coef * max(0, t - shift)^exponent
    };
    Type type = Type::Power;
    double coef = 1.0;
    double exponent = 1.0;
    double shift = 0.0;
};

/// Sum of convex terms; the hinge shifts act as breakpoints in t.
struct OrliczPhi {
    std::vector<OrliczTerm> terms;
};

/// t^{p(x)}
struct VariableExponentPhi {
    Profile p;
};

/// t + a(x) t^q
struct DoublePhasePhi {
    double q = 2.0;
    Profile a;
};

/// t^{p(x)}/p(x) for t <= 1 and a linear branch for t > 1. The printed
/// linear branch t - 1 - 1/q(x) does not meet the first branch at t = 1;
/// with continuity_corrected it is replaced by t - 1 + 1/p(x).
struct ChenLevineRaoPhi {
    Profile p;
    Profile q;
    bool continuity_corrected = true;
};

struct EnvelopeValue {
    double value = 0.0;
    double where = 0.0;  // a point of the interval attaining the envelope
};

/// A generalized Phi-function phi(x, t) on a closed interval [lower, upper].
/// Immutable; every member is safe to call concurrently.
class Phi {
public:
    using Family = std::variant<PowerPhi, WeightedPowerPhi, OrliczPhi, VariableExponentPhi, DoublePhasePhi,
                                ChenLevineRaoPhi>;

    Phi(Family family, double lower, double upper);

    static Phi power(double p, double lower = 0.0, double upper = 1.0);
    static Phi weighted_power(double p, Profile weight, double lower, double upper);
    static Phi orlicz(std::vector<OrliczTerm> terms, double lower = 0.0, double upper = 1.0);
    static Phi variable_exponent(Profile p, double lower, double upper);
    static Phi double_phase(double q, Profile a, double lower, double upper);
    static Phi chen_levine_rao(Profile p, Profile q, bool continuity_corrected, double lower, double upper);

    const Family& family() const { return family_; }
    double lower() const { return lower_; }
    double upper() const { return upper_; }
    std::string kind_name() const;

    /// phi(x, t); throws OutOfDomain outside [lower, upper].
    double eval(double x, double t) const;

    /// Exact sup (Plus) or inf (Minus) of phi(., t) over [l, r].
    EnvelopeValue envelope_at(double l, double r, double t, Side side) const;
    double envelope(double l, double r, double t, Side side) const { return envelope_at(l, r, t, side).value; }

    /// lim_{t -> inf} phi(x, t) / t in closed form.
    ExtendedReal phi_prime_infinity(double x) const;

    /// Right derivative in t.
    double dt(double x, double t) const;

    bool x_independent() const;
    bool is_convex() const;

    /// Constant L with phi(x,s)/s <= L phi(x,t)/t for s < t.
    double almost_increasing_constant() const { return is_convex() ? 1.0 : 2.0; }

    /// Quasi-convexity constant of the induced modulars (1 when convex).
    double modular_beta() const { return is_convex() ? 1.0 : 1.0 / (2.0 * almost_increasing_constant()); }

    /// Kinks of the x-profiles inside the domain, for splitting quadrature and grids.
    std::vector<double> x_breakpoints() const;

    /// The profile carrying x-dependence (p, a or w); nullptr if x-independent.
    const Profile* primary_profile() const;

private:
    void check_x(double x) const;

    Family family_;
    double lower_;
    double upper_;
};

double orlicz_term_value(const OrliczTerm& term, double t);

}  // namespace orlicz
