#include "orlicz/profile.hpp"

#include "orlicz/error.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace orlicz {

namespace {

void include(Range& r, double x, double v) {
    if (v < r.lo) {
        r.lo = v;
        r.argmin = x;
    }
    if (v > r.hi) {
        r.hi = v;
        r.argmax = x;
    }
}

Range empty_range() {
    Range r;
    r.lo = std::numeric_limits<double>::infinity();
    r.hi = -std::numeric_limits<double>::infinity();
    return r;
}

double smoothstep(double u) {
    u = std::clamp(u, 0.0, 1.0);
    return u * u * (3.0 - 2.0 * u);
}

}  // namespace

Profile Profile::constant(double value) {
    if (!std::isfinite(value)) throw Error(ErrorCode::Unsupported, "profile value must be finite");
    return Profile(Constant{value});
}

Profile Profile::piecewise_linear(std::vector<double> knots, std::vector<double> values) {
    if (knots.empty() || knots.size() != values.size())
        throw Error(ErrorCode::InvalidArgument, "piecewise-linear profile needs matching non-empty knots/values");
    for (std::size_t i = 1; i < knots.size(); ++i)
        if (!(knots[i] > knots[i - 1]))
            throw Error(ErrorCode::InvalidArgument, "profile knots must be strictly increasing");
    for (double v : values)
        if (!std::isfinite(v)) throw Error(ErrorCode::Unsupported, "profile values must be finite");
    if (knots.size() == 1) return Profile(Constant{values.front()});
    return Profile(PiecewiseLinear{std::move(knots), std::move(values)});
}

Profile Profile::analytic(std::function<double(double)> fn, std::vector<double> monotone_breaks,
                          std::function<double(double)> modulus) {
    std::sort(monotone_breaks.begin(), monotone_breaks.end());
    Analytic a;
    a.fn = std::move(fn);
    a.monotone_breaks = std::move(monotone_breaks);
    a.has_segments = true;
    a.modulus = std::move(modulus);
    return Profile(std::move(a));
}

Profile Profile::analytic_with_modulus(std::function<double(double)> fn,
                                       std::function<double(double)> modulus) {
    Analytic a;
    a.fn = std::move(fn);
    a.has_segments = false;
    a.modulus = std::move(modulus);
    return Profile(std::move(a));
}

Profile Profile::log_blowup(double origin) {
    Analytic a;
    a.fn = [origin](double x) {
        const double d = std::abs(x - origin);
        if (d == 0.0) return 1.0;
        if (d >= 1.0) throw Error(ErrorCode::OutOfDomain, "log_blowup profile needs |x - origin| < 1");
        return 1.0 + 1.0 / std::log(1.0 / d);
    };
    a.monotone_breaks = {origin};
    a.has_segments = true;
    a.type = "log_blowup";
    a.params["origin"] = {origin};
    return Profile(std::move(a));
}

Profile Profile::holder_distance(std::vector<double> centers, double exponent, double scale) {
    if (centers.empty()) throw Error(ErrorCode::InvalidArgument, "holder_distance needs at least one center");
    if (!(exponent > 0.0 && exponent <= 1.0))
        throw Error(ErrorCode::InvalidArgument, "holder_distance exponent must lie in (0,1]");
    if (!(scale >= 0.0)) throw Error(ErrorCode::InvalidArgument, "holder_distance scale must be >= 0");
    std::sort(centers.begin(), centers.end());
    Analytic a;
    a.fn = [centers, exponent, scale](double x) {
        double d = std::numeric_limits<double>::infinity();
        for (double c : centers) d = std::min(d, std::abs(x - c));
        return scale * std::pow(d, exponent);
    };
    for (std::size_t i = 0; i < centers.size(); ++i) {
        a.monotone_breaks.push_back(centers[i]);
        if (i + 1 < centers.size()) a.monotone_breaks.push_back(0.5 * (centers[i] + centers[i + 1]));
    }
    a.has_segments = true;
    a.holder = HolderBound{exponent, scale};
    a.modulus = [exponent, scale](double r) { return scale * std::pow(r, exponent); };
    a.type = "holder_distance";
    a.params["centers"] = centers;
    a.params["exponent"] = {exponent};
    a.params["scale"] = {scale};
    return Profile(std::move(a));
}

Profile Profile::smooth_plateau(double low, double high, double plateau_lo, double plateau_hi, double ramp) {
    if (!(plateau_hi >= plateau_lo) || !(ramp > 0.0))
        throw Error(ErrorCode::InvalidArgument, "smooth_plateau needs plateau_lo <= plateau_hi and ramp > 0");
    Analytic a;
    a.fn = [=](double x) {
        if (x >= plateau_lo && x <= plateau_hi) return low;
        const double u = x < plateau_lo ? (plateau_lo - x) / ramp : (x - plateau_hi) / ramp;
        if (u >= 1.0) return high;
        return low + (high - low) * smoothstep(u);
    };
    a.monotone_breaks = {plateau_lo - ramp, plateau_lo, plateau_hi, plateau_hi + ramp};
    a.has_segments = true;
    const double lip = 1.5 * std::abs(high - low) / ramp;
    a.holder = HolderBound{1.0, lip};
    a.modulus = [lip](double r) { return lip * r; };
    a.type = "smooth_plateau";
    a.params["low"] = {low};
    a.params["high"] = {high};
    a.params["plateau"] = {plateau_lo, plateau_hi};
    a.params["ramp"] = {ramp};
    return Profile(std::move(a));
}

double Profile::value(double x) const {
    return std::visit(
        [x](const auto& rep) -> double {
            using T = std::decay_t<decltype(rep)>;
            if constexpr (std::is_same_v<T, Constant>) {
                return rep.value;
            } else if constexpr (std::is_same_v<T, PiecewiseLinear>) {
                const auto& k = rep.knots;
                if (x <= k.front()) return rep.values.front();
                if (x >= k.back()) return rep.values.back();
                const auto it = std::upper_bound(k.begin(), k.end(), x);
                const std::size_t i = static_cast<std::size_t>(it - k.begin());
                const double w = (x - k[i - 1]) / (k[i] - k[i - 1]);
                return rep.values[i - 1] + w * (rep.values[i] - rep.values[i - 1]);
            } else {
                return rep.fn(x);
            }
        },
        rep_);
}

Range Profile::range(double l, double r) const {
    if (r < l) std::swap(l, r);
    if (const auto* c = std::get_if<Constant>(&rep_)) return Range{c->value, c->value, l, l};

    Range out = empty_range();
    include(out, l, value(l));
    include(out, r, value(r));

    if (const auto* pl = std::get_if<PiecewiseLinear>(&rep_)) {
        auto it = std::upper_bound(pl->knots.begin(), pl->knots.end(), l);
        for (; it != pl->knots.end() && *it < r; ++it)
            include(out, *it, pl->values[static_cast<std::size_t>(it - pl->knots.begin())]);
        return out;
    }

    const auto& a = std::get<Analytic>(rep_);
    if (a.has_segments) {
        auto it = std::upper_bound(a.monotone_breaks.begin(), a.monotone_breaks.end(), l);
        for (; it != a.monotone_breaks.end() && *it < r; ++it) include(out, *it, a.fn(*it));
        return out;
    }
    if (!a.modulus)
        throw Error(ErrorCode::NoModulus,
                    "analytic profile declares neither monotone segments nor a modulus of continuity");
    return sampled_range(a, l, r);
}

Range Profile::sampled_range(const Analytic& a, double l, double r) const {
    // The bracket for the true extremum is [sampled, sampled + omega(spacing/2)].
    for (std::size_t n = 65; n <= (std::size_t{1} << 22) + 1; n = 2 * n - 1) {
        Range out = empty_range();
        const double step = (r - l) / static_cast<double>(n - 1);
        for (std::size_t i = 0; i < n; ++i) {
            const double x = (i + 1 == n) ? r : l + step * static_cast<double>(i);
            include(out, x, a.fn(x));
        }
        const double width = a.modulus(0.5 * step);
        const double scale = 1.0 + std::max(std::abs(out.lo), std::abs(out.hi));
        if (width <= 1e-9 * scale || r == l) return out;
    }
    throw Error(ErrorCode::NoModulus, "declared modulus too weak to certify the extremum by sampling");
}

std::vector<double> Profile::breakpoints() const {
    if (const auto* pl = std::get_if<PiecewiseLinear>(&rep_)) return pl->knots;
    if (const auto* a = std::get_if<Analytic>(&rep_)) return a->monotone_breaks;
    return {};
}

std::optional<HolderBound> Profile::holder() const {
    if (std::holds_alternative<Constant>(rep_)) return HolderBound{1.0, 0.0};
    if (const auto* pl = std::get_if<PiecewiseLinear>(&rep_)) {
        double lip = 0.0;
        for (std::size_t i = 1; i < pl->knots.size(); ++i)
            lip = std::max(lip, std::abs(pl->values[i] - pl->values[i - 1]) / (pl->knots[i] - pl->knots[i - 1]));
        return HolderBound{1.0, lip};
    }
    return std::get<Analytic>(rep_).holder;
}

std::optional<double> Profile::modulus(double r) const {
    if (const auto* a = std::get_if<Analytic>(&rep_)) {
        if (a->modulus) return a->modulus(r);
        if (a->holder) return a->holder->constant * std::pow(r, a->holder->exponent);
        return std::nullopt;
    }
    const auto h = holder();
    return h->constant * r;
}

}  // namespace orlicz
