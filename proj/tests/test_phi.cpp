#include "orlicz/error.hpp"
#include "orlicz/phi.hpp"
#include "support.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>

using namespace orlicz;

namespace {

std::vector<Phi> convex_families() {
    return {
        Phi::power(1.0),
        Phi::power(2.5),
        Phi::weighted_power(2.0, Profile::piecewise_linear({0, 1}, {1, 2}), 0, 1),
        Phi::orlicz({{OrliczTerm::Type::Power, 1.0, 1.0, 0.0}, {OrliczTerm::Type::Saturating, 1.0, 2.0, 1.0}}),
        Phi::orlicz({{OrliczTerm::Type::Hinge, 2.0, 1.5, 0.5}, {OrliczTerm::Type::Power, 0.5, 1.0, 0.0}}),
        Phi::variable_exponent(Profile::piecewise_linear({0, 0.3, 1}, {1.0, 2.5, 1.5}), 0, 1),
        Phi::variable_exponent(Profile::log_blowup(0.0), 0, 0.5),
        Phi::variable_exponent(Profile::smooth_plateau(1.0, 2.0, 0.4, 0.6, 0.1), 0, 1),
        Phi::double_phase(2.0, Profile::piecewise_linear({0, 1}, {0, 1}), 0, 1),
        Phi::double_phase(1.5, Profile::holder_distance({0.3, 0.7}, 0.5, 2.0), 0, 1),
        Phi::chen_levine_rao(Profile::piecewise_linear({0, 1}, {1.2, 1.8}), Profile::constant(2.0), true, 0, 1),
    };
}

}  // namespace

TEST_CASE("eval: closed-form values") {
    CHECK(Phi::power(2.0).eval(0.3, 3.0) == doctest::Approx(9.0).epsilon(1e-15));
    const Phi dp = Phi::double_phase(2.0, Profile::piecewise_linear({0, 1}, {0, 1}), 0, 1);
    CHECK(dp.eval(0.5, 2.0) == doctest::Approx(4.0).epsilon(1e-15));
    const Phi ve = Phi::variable_exponent(Profile::log_blowup(0.0), 0, 0.5);
    const double x = std::exp(-1.0);
    CHECK(ve.eval(x, std::numbers::e) == doctest::Approx(std::exp(2.0)).epsilon(1e-13));
}

TEST_CASE("eval: domain errors") {
    const Phi p = Phi::power(2.0, 0, 1);
    CHECK_THROWS_AS(p.eval(1.5, 1.0), Error);
    try {
        p.eval(-0.1, 1.0);
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::OutOfDomain);
    }
    CHECK_THROWS_AS(Profile::constant(INFINITY), Error);
}

TEST_CASE("envelope: log-exponent example") {
    const Phi ve = Phi::variable_exponent(Profile::log_blowup(0.0), 0, 0.5);
    for (double x0 : {1e-2, 1e-4, 1e-8}) {
        const double t = 1.0 / x0;
        CHECK(ve.envelope(0, x0, t, Side::Plus) * x0 == doctest::Approx(std::numbers::e).epsilon(1e-12));
        CHECK(ve.envelope(0, x0, t, Side::Minus) * x0 == doctest::Approx(1.0).epsilon(1e-12));
    }
}

TEST_CASE("envelope: double phase with monotone a") {
    const Phi dp = Phi::double_phase(2.0, Profile::piecewise_linear({0, 1}, {0, 1}), 0, 1);
    CHECK(dp.envelope(0, 1, 1.0, Side::Plus) == doctest::Approx(2.0));
    CHECK(dp.envelope(0, 1, 1.0, Side::Minus) == doctest::Approx(1.0));
    const auto at = dp.envelope_at(0.2, 0.6, 3.0, Side::Plus);
    CHECK(at.where == doctest::Approx(0.6));
}

TEST_CASE("envelope: analytic profile without metadata cannot be certified") {
    try {
        const Phi ve =
            Phi::variable_exponent(Profile::analytic_with_modulus([](double x) { return 1.5 + x; }, {}), 0, 1);
        ve.envelope(0.1, 0.4, 2.0, Side::Plus);
        FAIL("expected NoModulus");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::NoModulus);
    }
}

TEST_CASE("phi_prime_infinity") {
    CHECK(Phi::orlicz({{OrliczTerm::Type::Power, 1.0, 1.0, 0.0}}).phi_prime_infinity(0.5).value() == 1.0);
    CHECK(Phi::orlicz({{OrliczTerm::Type::Power, 1.0, 1.0, 0.0}, {OrliczTerm::Type::Saturating, 1.0, 2.0, 1.0}})
              .phi_prime_infinity(0.2)
              .value() == doctest::Approx(2.0));
    const Phi ve = Phi::variable_exponent(Profile::piecewise_linear({0, 1}, {1.3, 1.3}), 0, 1);
    CHECK(ve.phi_prime_infinity(0.5).is_infinite());
    const Phi dp = Phi::double_phase(2.0, Profile::holder_distance({0.5}, 1.0, 1.0), 0, 1);
    CHECK(dp.phi_prime_infinity(0.5).value() == 1.0);
    CHECK(dp.phi_prime_infinity(0.6).is_infinite());
    CHECK(Phi::power(1.0).phi_prime_infinity(0.0).value() == 1.0);
    CHECK(Phi::power(1.01).phi_prime_infinity(0.0).is_infinite());
}

TEST_CASE("chen-levine-rao branches") {
    const Profile p = Profile::constant(1.5), q = Profile::constant(2.0);
    const Phi fixed = Phi::chen_levine_rao(p, q, true, 0, 1);
    // continuous at t = 1: 1/p from both sides
    CHECK(fixed.eval(0.5, 1.0) == doctest::Approx(1.0 / 1.5));
    CHECK(fixed.eval(0.5, 1.0 + 1e-9) == doctest::Approx(1.0 / 1.5).epsilon(1e-8));
    CHECK(fixed.is_convex());
    const Phi printed = Phi::chen_levine_rao(p, q, false, 0, 1);
    CHECK(printed.eval(0.5, 2.0) == doctest::Approx(2.0 - 1.0 - 0.5));
    CHECK_FALSE(printed.is_convex());
}

TEST_CASE("property: envelope sandwich and monotonicity") {
    testing_support::Corpus gen(11);
    for (const Phi& phi : convex_families()) {
        const double a = phi.lower(), b = phi.upper();
        for (int trial = 0; trial < 40; ++trial) {
            double l = gen.uniform(a, b), r = gen.uniform(a, b);
            if (l > r) std::swap(l, r);
            if (r - l < 1e-6) continue;
            const double t = std::exp(gen.uniform(-6, 6));
            const double hi = phi.envelope(l, r, t, Side::Plus), lo = phi.envelope(l, r, t, Side::Minus);
            for (int k = 0; k <= 20; ++k) {
                const double v = phi.eval(l + (r - l) * k / 20.0, t);
                CHECK(lo <= v * (1 + 1e-12));
                CHECK(v <= hi * (1 + 1e-12));
            }
            // nested intervals
            const double l2 = l + 0.25 * (r - l), r2 = r - 0.25 * (r - l);
            CHECK(phi.envelope(l2, r2, t, Side::Plus) <= hi * (1 + 1e-12));
            CHECK(phi.envelope(l2, r2, t, Side::Minus) >= lo * (1 - 1e-12));
            // monotone in t
            CHECK(phi.envelope(l, r, 1.5 * t, Side::Plus) >= hi);
            CHECK(phi.envelope(l, r, 1.5 * t, Side::Minus) >= lo);
        }
    }
}

TEST_CASE("property: almost increasing, convexity and phi' at infinity") {
    testing_support::Corpus gen(12);
    for (const Phi& phi : convex_families()) {
        const double L = phi.almost_increasing_constant();
        for (int trial = 0; trial < 10; ++trial) {
            const double x = gen.uniform(phi.lower(), phi.upper());
            // (aInc)_1 surrogate on a log grid
            for (int i = 0; i < 30; ++i) {
                const double s = std::pow(10.0, -4 + i * 0.3), t = s * 1.7;
                CHECK(phi.eval(x, s) / s <= L * phi.eval(x, t) / t * (1 + 1e-12));
            }
            for (int i = 0; i < 20; ++i) {
                const double t1 = std::exp(gen.uniform(-5, 5)), t2 = std::exp(gen.uniform(-5, 5));
                CHECK(phi.eval(x, 0.5 * (t1 + t2)) <= 0.5 * (phi.eval(x, t1) + phi.eval(x, t2)) * (1 + 1e-12));
            }
            const ExtendedReal lim = phi.phi_prime_infinity(x);
            double prev = 0.0, last = 0.0;
            for (int i = 0; i < 20; ++i) {
                const double t = std::pow(10.0, -7 + i);
                last = phi.eval(x, t) / t;
                CHECK(last >= prev * (1 - 1e-12));
                prev = last;
            }
            CHECK(last <= lim.value() * (1 + 1e-6));
            if (lim.is_finite() && phi.eval(x, 1e12) < 1e300) CHECK(std::abs(last - lim.value()) <= 1e-6 * lim.value());
        }
    }
}
