#include "orlicz/bvfunc.hpp"
#include "orlicz/error.hpp"
#include "orlicz/piecewise.hpp"
#include "orlicz/variation.hpp"
#include "support.hpp"

#include <doctest.h>

#include <cmath>

using namespace orlicz;

TEST_CASE("piecewise polynomial basics") {
    const PiecewisePolynomial p({0, 1, 3}, {{1, 2, 3}, {-1}});
    CHECK(p.value(0.5) == doctest::Approx(1 + 1 + 0.75));
    CHECK(p.value(1.0) == -1.0);  // right-continuous at breaks
    CHECK(p.value_on_piece(0, 1.0) == doctest::Approx(6.0));
    CHECK(p.integral_to(1.0) == doctest::Approx(1 + 1 + 1));
    CHECK(p.integral_to(3.0) == doctest::Approx(3.0 - 2.0));
    CHECK(p.abs_integral() == doctest::Approx(5.0));
    const auto r = p.refined({0, 0.5, 1, 2, 3});
    for (double x : {0.1, 0.7, 1.5, 2.9}) CHECK(r.value(x) == doctest::Approx(p.value(x)));
    CHECK_THROWS_AS(PiecewisePolynomial({0, 0}, {{1}}), Error);
}

TEST_CASE("polynomial roots") {
    const std::vector<double> c{-2, 0, 1};  // u^2 - 2
    const auto roots = polynomial_roots(c, 0, 3);
    REQUIRE(roots.size() == 1);
    CHECK(roots[0] == doctest::Approx(std::sqrt(2.0)).epsilon(1e-14));
    const std::vector<double> cubic{0, -1, 0, 1};  // u^3 - u
    CHECK(polynomial_roots(cubic, -2, 2).size() == 3);
}

TEST_CASE("evaluate") {
    // indicator of (0, 1/2] with the jump at the left endpoint
    const BVFunction chi(0, 0.5, 0, PiecewisePolynomial::constant(0, 0.5, 0), {{0.0, 1.0}});
    CHECK(chi.evaluate(0.0) == 0.0);
    CHECK(chi.evaluate(0.3) == 1.0);
    const BVFunction id = BVFunction::affine(0, 1, 0, 1);
    CHECK(id.evaluate(0.5) == 0.5);
    const BVFunction step(0, 1, 0, PiecewisePolynomial::constant(0, 1, 1.0), {{0.5, 1.0}});
    CHECK(step.evaluate(0.5) == doctest::Approx(0.5));
    CHECK(step.evaluate(0.5 + 1e-9) == doctest::Approx(1.5 + 1e-9));
    CHECK_THROWS_AS(step.evaluate(1.2), Error);
}

TEST_CASE("increment and total variation") {
    const BVFunction id = BVFunction::affine(0, 1, 0, 1);
    CHECK(id.increment({0.2, 0.7}) == doctest::Approx(-0.5));
    CHECK(BVFunction::affine(0, 1, 3, 0).increment({0.1, 0.9}) == 0.0);
    const BVFunction chi(0, 0.5, 0, PiecewisePolynomial::constant(0, 0.5, 0), {{0.0, 1.0}});
    for (double x0 : {0.5, 0.1, 1e-6}) CHECK(chi.increment({0, x0}) == -1.0);
    const BVFunction f(0, 1, 0, PiecewisePolynomial::constant(0, 1, 1.0), {{0.4, -2.0}});
    CHECK(f.total_variation() == doctest::Approx(3.0));
    CHECK(BVFunction::affine(0, 1, 0, 0).total_variation() == 0.0);
    CHECK(chi.total_variation() == 1.0);
    CHECK(f.singular_mass([](double c) { return c < 0.5; }) == 2.0);
    CHECK(f.singular_mass([](double c) { return c > 0.5; }) == 0.0);
}

TEST_CASE("construction errors") {
    CHECK_THROWS_AS(Interval(1, 1), Error);
    CHECK_THROWS_AS(Partition({0, 0.5, 0.5, 1}, 0, 1), Error);
    CHECK_THROWS_AS(Partition({0, 0.5}, 0, 1), Error);
    CHECK_THROWS_AS(BVFunction(0, 1, 0, PiecewisePolynomial::constant(0, 1, 0), {{1.5, 1.0}}), Error);
    CHECK(Partition::uniform(0, 1, 4).mesh() == doctest::Approx(0.25));
}

TEST_CASE("scaling, division and combination") {
    const BVFunction f(0, 1, 0.5, PiecewisePolynomial({0, 0.3, 1}, {{1, 2}, {-1}}), {{0.2, 0.7}});
    const BVFunction g = BVFunction::affine(0, 1, 1, -2);
    for (double x : {0.0, 0.15, 0.2, 0.25, 0.6, 1.0}) {
        CHECK(f.scaled(-3).evaluate(x) == doctest::Approx(-3 * f.evaluate(x)));
        CHECK(f.divided(4).evaluate(x) == doctest::Approx(f.evaluate(x) / 4));
        CHECK(BVFunction::combine(2, f, -1, g).evaluate(x) == doctest::Approx(2 * f.evaluate(x) - g.evaluate(x)));
    }
    const BVFunction f2 = f.scaled(2.0);
    for (double x : {0.1, 0.2, 0.5}) CHECK(f2.divided(2.0).evaluate(x) == f.divided(1.0).evaluate(x));
    const auto v = f.values();
    CHECK(v.value(0.6) == doctest::Approx(f.evaluate(0.6)));
}

TEST_CASE("property: additivity and left continuity") {
    testing_support::Corpus gen(5);
    for (int i = 0; i < 50; ++i) {
        const BVFunction f = gen.piecewise_linear(-1, 2, gen.integer(0, 3));
        for (int k = 0; k < 20; ++k) {
            double x = gen.uniform(-1, 2), y = gen.uniform(-1, 2), z = gen.uniform(-1, 2);
            if (x > y) std::swap(x, y);
            if (y > z) std::swap(y, z);
            if (x > y) std::swap(x, y);
            if (!(x < y && y < z)) continue;
            CHECK(f.increment({x, z}) == doctest::Approx(f.increment({x, y}) + f.increment({y, z})).epsilon(1e-12));
        }
        for (const auto& at : f.atoms()) {
            const double c = at.location;
            if (c - 1e-12 < f.lower()) continue;
            CHECK(std::abs(f.evaluate(c) - f.evaluate(c - 1e-12)) <= 1e-9 * (1 + std::abs(f.evaluate(c))));
        }
    }
}

TEST_CASE("property: grid essential variation approaches total variation") {
    testing_support::Corpus gen(6);
    for (int i = 0; i < 20; ++i) {
        const BVFunction f = gen.piecewise_linear(0, 1, gen.integer(0, 3));
        std::vector<double> extra = f.mandatory_points();
        for (const auto& at : f.atoms()) extra.push_back(at.location + 1e-10);
        const double ev = essential_variation_grid([&](double x) { return f.evaluate(x); }, 0, 1, 129, extra);
        CHECK(ev == doctest::Approx(f.total_variation()).epsilon(1e-6));
    }
}
