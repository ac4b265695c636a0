#include "orlicz/phi.hpp"

#include "orlicz/error.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace orlicz {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

void require_profile_within(const Profile& prof, double lower, double upper, const char* name) {
    if (prof.is_piecewise_linear()) {
        const auto knots = prof.breakpoints();
        const double slack = 1e-12 * (upper - lower);
        if (knots.front() < lower - slack || knots.back() > upper + slack)
            throw Error(ErrorCode::InvalidArgument, std::string(name) + " knots must lie inside the domain");
    }
}

double orlicz_term_slope(const OrliczTerm& term, double t) {
    switch (term.type) {
        case OrliczTerm::Type::Power:
            if (term.exponent == 1.0) return term.coef;
            return term.coef * term.exponent * std::pow(t, term.exponent - 1.0);
        case OrliczTerm::Type::Saturating: {
            const double d = term.shift + t;
            return term.coef * (t * t + 2.0 * term.shift * t) / (d * d);
        }
        case OrliczTerm::Type::Hinge:
            if (t < term.shift) return 0.0;
            if (term.exponent == 1.0) return term.coef;
            return term.coef * term.exponent * std::pow(t - term.shift, term.exponent - 1.0);
    }
    return 0.0;
}

ExtendedReal orlicz_term_asymptote(const OrliczTerm& term) {
    if (term.coef == 0.0) return 0.0;
    switch (term.type) {
        case OrliczTerm::Type::Saturating:
            return term.coef;
        case OrliczTerm::Type::Power:
        case OrliczTerm::Type::Hinge:
            return term.exponent == 1.0 ? ExtendedReal(term.coef) : ExtendedReal::infinity();
    }
    return 0.0;
}

// t^p with 0^p = 0 for the p >= 1 used throughout.
double tpow(double t, double p) {
    if (t == 0.0) return 0.0;
    if (p == 1.0) return t;
    if (p == 2.0) return t * t;
    return std::pow(t, p);
}

}  // namespace

double orlicz_term_value(const OrliczTerm& term, double t) {
    switch (term.type) {
        case OrliczTerm::Type::Power:
            return term.coef * tpow(t, term.exponent);
        case OrliczTerm::Type::Saturating:
            return term.coef * t * t / (term.shift + t);
        case OrliczTerm::Type::Hinge:
            return t <= term.shift ? 0.0 : term.coef * tpow(t - term.shift, term.exponent);
    }
    return 0.0;
}

Phi::Phi(Family family, double lower, double upper) : family_(std::move(family)), lower_(lower), upper_(upper) {
    if (!(lower < upper) || !std::isfinite(lower) || !std::isfinite(upper))
        throw Error(ErrorCode::InvalidArgument, "phi domain must be a finite interval with lower < upper");
    std::visit(overloaded{
                   [](const PowerPhi& f) {
                       if (!(f.p >= 1.0) || !std::isfinite(f.p))
                           throw Error(ErrorCode::InvalidArgument, "power exponent must be finite and >= 1");
                   },
                   [&](const WeightedPowerPhi& f) {
                       if (!(f.p >= 1.0) || !std::isfinite(f.p))
                           throw Error(ErrorCode::InvalidArgument, "weighted power exponent must be >= 1");
                       require_profile_within(f.weight, lower, upper, "weight");
                       if (!(f.weight.range(lower, upper).lo > 0.0))
                           throw Error(ErrorCode::InvalidArgument, "weight must be positive on the domain");
                   },
                   [](const OrliczPhi& f) {
                       bool positive = false;
                       for (const auto& term : f.terms) {
                           if (!(term.coef >= 0.0))
                               throw Error(ErrorCode::InvalidArgument, "orlicz coefficients must be >= 0");
                           if (term.type != OrliczTerm::Type::Saturating && !(term.exponent >= 1.0))
                               throw Error(ErrorCode::InvalidArgument, "orlicz exponents must be >= 1");
                           if (term.type == OrliczTerm::Type::Saturating && !(term.shift > 0.0))
                               throw Error(ErrorCode::InvalidArgument, "saturating term needs shift > 0");
                           if (term.type == OrliczTerm::Type::Hinge && !(term.shift >= 0.0))
                               throw Error(ErrorCode::InvalidArgument, "hinge term needs shift >= 0");
                           positive = positive || term.coef > 0.0;
                       }
                       if (!positive) throw Error(ErrorCode::InvalidArgument, "orlicz function must not vanish");
                   },
                   [&](const VariableExponentPhi& f) {
                       require_profile_within(f.p, lower, upper, "exponent");
                       if (!(f.p.range(lower, upper).lo >= 1.0))
                           throw Error(ErrorCode::InvalidArgument, "variable exponent must be >= 1");
                   },
                   [&](const DoublePhasePhi& f) {
                       if (!(f.q > 1.0) || !std::isfinite(f.q))
                           throw Error(ErrorCode::InvalidArgument, "double phase needs finite q > 1");
                       require_profile_within(f.a, lower, upper, "coefficient");
                       if (!(f.a.range(lower, upper).lo >= 0.0))
                           throw Error(ErrorCode::InvalidArgument, "double phase coefficient must be >= 0");
                   },
                   [&](const ChenLevineRaoPhi& f) {
                       require_profile_within(f.p, lower, upper, "exponent");
                       require_profile_within(f.q, lower, upper, "exponent q");
                       if (!(f.p.range(lower, upper).lo >= 1.0))
                           throw Error(ErrorCode::InvalidArgument, "Chen-Levine-Rao exponent p must be >= 1");
                       if (!(f.q.range(lower, upper).lo > 0.0))
                           throw Error(ErrorCode::InvalidArgument, "Chen-Levine-Rao exponent q must be > 0");
                   },
               },
               family_);
}

Phi Phi::power(double p, double lower, double upper) { return Phi(PowerPhi{p}, lower, upper); }

Phi Phi::weighted_power(double p, Profile weight, double lower, double upper) {
    return Phi(WeightedPowerPhi{p, std::move(weight)}, lower, upper);
}

Phi Phi::orlicz(std::vector<OrliczTerm> terms, double lower, double upper) {
    return Phi(OrliczPhi{std::move(terms)}, lower, upper);
}

Phi Phi::variable_exponent(Profile p, double lower, double upper) {
    return Phi(VariableExponentPhi{std::move(p)}, lower, upper);
}

Phi Phi::double_phase(double q, Profile a, double lower, double upper) {
    return Phi(DoublePhasePhi{q, std::move(a)}, lower, upper);
}

Phi Phi::chen_levine_rao(Profile p, Profile q, bool continuity_corrected, double lower, double upper) {
    return Phi(ChenLevineRaoPhi{std::move(p), std::move(q), continuity_corrected}, lower, upper);
}

std::string Phi::kind_name() const {
    return std::visit(overloaded{
                          [](const PowerPhi&) { return std::string("power"); },
                          [](const WeightedPowerPhi&) { return std::string("weighted_power"); },
                          [](const OrliczPhi&) { return std::string("orlicz"); },
                          [](const VariableExponentPhi&) { return std::string("variable_exponent"); },
                          [](const DoublePhasePhi&) { return std::string("double_phase"); },
                          [](const ChenLevineRaoPhi&) { return std::string("chen_levine_rao"); },
                      },
                      family_);
}

void Phi::check_x(double x) const {
    if (!(x >= lower_ && x <= upper_))
        throw Error(ErrorCode::OutOfDomain, "x = " + std::to_string(x) + " outside [" + std::to_string(lower_) +
                                                ", " + std::to_string(upper_) + "]");
}

double Phi::eval(double x, double t) const {
    check_x(x);
    if (!(t >= 0.0)) throw Error(ErrorCode::InvalidArgument, "phi argument t must be >= 0");
    return std::visit(overloaded{
                          [t](const PowerPhi& f) { return tpow(t, f.p); },
                          [x, t](const WeightedPowerPhi& f) { return f.weight.value(x) * tpow(t, f.p); },
                          [t](const OrliczPhi& f) {
                              double s = 0.0;
                              for (const auto& term : f.terms) s += orlicz_term_value(term, t);
                              return s;
                          },
                          [x, t](const VariableExponentPhi& f) { return tpow(t, f.p.value(x)); },
                          [x, t](const DoublePhasePhi& f) { return t + f.a.value(x) * tpow(t, f.q); },
                          [x, t](const ChenLevineRaoPhi& f) {
                              const double p = f.p.value(x);
                              if (t <= 1.0) return tpow(t, p) / p;
                              if (f.continuity_corrected) return t - 1.0 + 1.0 / p;
                              return t - 1.0 - 1.0 / f.q.value(x);
                          },
                      },
                      family_);
}

EnvelopeValue Phi::envelope_at(double l, double r, double t, Side side) const {
    if (r < l) std::swap(l, r);
    check_x(l);
    check_x(r);
    if (!(t >= 0.0)) throw Error(ErrorCode::InvalidArgument, "phi argument t must be >= 0");
    const bool plus = side == Side::Plus;
    // For every family phi(x, t) is monotone in the profile value, so the
    // envelope is phi evaluated at the profile's exact extremum.
    return std::visit(
        overloaded{
            [&](const PowerPhi& f) { return EnvelopeValue{tpow(t, f.p), l}; },
            [&](const OrliczPhi&) { return EnvelopeValue{eval(l, t), l}; },
            [&](const WeightedPowerPhi& f) {
                const Range w = f.weight.range(l, r);
                return plus ? EnvelopeValue{w.hi * tpow(t, f.p), w.argmax}
                            : EnvelopeValue{w.lo * tpow(t, f.p), w.argmin};
            },
            [&](const VariableExponentPhi& f) {
                const Range p = f.p.range(l, r);
                // t >= 1: larger exponent is larger; t < 1: smaller exponent is larger.
                const bool use_hi = (t >= 1.0) == plus;
                return use_hi ? EnvelopeValue{tpow(t, p.hi), p.argmax} : EnvelopeValue{tpow(t, p.lo), p.argmin};
            },
            [&](const DoublePhasePhi& f) {
                const Range a = f.a.range(l, r);
                const double tq = tpow(t, f.q);
                return plus ? EnvelopeValue{t + a.hi * tq, a.argmax} : EnvelopeValue{t + a.lo * tq, a.argmin};
            },
            [&](const ChenLevineRaoPhi& f) {
                if (t <= 1.0 || f.continuity_corrected) {
                    // decreasing in p on both branches
                    const Range p = f.p.range(l, r);
                    const double pe = plus ? p.lo : p.hi;
                    const double where = plus ? p.argmin : p.argmax;
                    const double v = t <= 1.0 ? tpow(t, pe) / pe : t - 1.0 + 1.0 / pe;
                    return EnvelopeValue{v, where};
                }
                const Range q = f.q.range(l, r);
                return plus ? EnvelopeValue{t - 1.0 - 1.0 / q.hi, q.argmax}
                            : EnvelopeValue{t - 1.0 - 1.0 / q.lo, q.argmin};
            },
        },
        family_);
}

ExtendedReal Phi::phi_prime_infinity(double x) const {
    check_x(x);
    return std::visit(overloaded{
                          [](const PowerPhi& f) { return f.p == 1.0 ? ExtendedReal(1.0) : ExtendedReal::infinity(); },
                          [x](const WeightedPowerPhi& f) {
                              return f.p == 1.0 ? ExtendedReal(f.weight.value(x)) : ExtendedReal::infinity();
                          },
                          [](const OrliczPhi& f) {
                              ExtendedReal k = 0.0;
                              for (const auto& term : f.terms) k += orlicz_term_asymptote(term);
                              return k;
                          },
                          [x](const VariableExponentPhi& f) {
                              return f.p.value(x) == 1.0 ? ExtendedReal(1.0) : ExtendedReal::infinity();
                          },
                          [x](const DoublePhasePhi& f) {
                              return f.a.value(x) == 0.0 ? ExtendedReal(1.0) : ExtendedReal::infinity();
                          },
                          [](const ChenLevineRaoPhi&) { return ExtendedReal(1.0); },
                      },
                      family_);
}

double Phi::dt(double x, double t) const {
    check_x(x);
    return std::visit(overloaded{
                          [t](const PowerPhi& f) { return f.p == 1.0 ? 1.0 : f.p * std::pow(t, f.p - 1.0); },
                          [x, t](const WeightedPowerPhi& f) {
                              const double w = f.weight.value(x);
                              return f.p == 1.0 ? w : w * f.p * std::pow(t, f.p - 1.0);
                          },
                          [t](const OrliczPhi& f) {
                              double s = 0.0;
                              for (const auto& term : f.terms) s += orlicz_term_slope(term, t);
                              return s;
                          },
                          [x, t](const VariableExponentPhi& f) {
                              const double p = f.p.value(x);
                              return p == 1.0 ? 1.0 : p * std::pow(t, p - 1.0);
                          },
                          [x, t](const DoublePhasePhi& f) {
                              return 1.0 + f.a.value(x) * f.q * std::pow(t, f.q - 1.0);
                          },
                          [x, t](const ChenLevineRaoPhi& f) {
                              if (t > 1.0) return 1.0;
                              const double p = f.p.value(x);
                              return p == 1.0 ? 1.0 : std::pow(t, p - 1.0);
                          },
                      },
                      family_);
}

bool Phi::x_independent() const {
    if (std::holds_alternative<PowerPhi>(family_) || std::holds_alternative<OrliczPhi>(family_)) return true;
    const Profile* prof = primary_profile();
    if (prof && !prof->is_constant()) return false;
    if (const auto* clr = std::get_if<ChenLevineRaoPhi>(&family_)) return clr->q.is_constant();
    return true;
}

bool Phi::is_convex() const {
    if (const auto* clr = std::get_if<ChenLevineRaoPhi>(&family_)) return clr->continuity_corrected;
    return true;
}

std::vector<double> Phi::x_breakpoints() const {
    std::vector<double> out;
    auto add = [&](const Profile& p) {
        for (double b : p.breakpoints())
            if (b > lower_ && b < upper_) out.push_back(b);
    };
    std::visit(overloaded{
                   [](const PowerPhi&) {},
                   [](const OrliczPhi&) {},
                   [&](const WeightedPowerPhi& f) { add(f.weight); },
                   [&](const VariableExponentPhi& f) { add(f.p); },
                   [&](const DoublePhasePhi& f) { add(f.a); },
                   [&](const ChenLevineRaoPhi& f) {
                       add(f.p);
                       add(f.q);
                   },
               },
               family_);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

const Profile* Phi::primary_profile() const {
    return std::visit(overloaded{
                          [](const PowerPhi&) -> const Profile* { return nullptr; },
                          [](const OrliczPhi&) -> const Profile* { return nullptr; },
                          [](const WeightedPowerPhi& f) -> const Profile* { return &f.weight; },
                          [](const VariableExponentPhi& f) -> const Profile* { return &f.p; },
                          [](const DoublePhasePhi& f) -> const Profile* { return &f.a; },
                          [](const ChenLevineRaoPhi& f) -> const Profile* { return &f.p; },
                      },
                      family_);
}

}  // namespace orlicz
