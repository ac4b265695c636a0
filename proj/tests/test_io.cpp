#include "orlicz/error.hpp"
#include "orlicz/io.hpp"
#include "support.hpp"

#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>

using namespace orlicz;
using io::Json;

namespace {

std::string temp_file(const std::string& name, const std::string& content) {
    const auto path = std::filesystem::temp_directory_path() / ("orlicz_test_" + name);
    std::ofstream(path) << content;
    return path.string();
}

}  // namespace

TEST_CASE("dump prints doubles with 17 significant digits and inf as a string") {
    Json j;
    j["a"] = 0.1;
    j["b"] = std::numeric_limits<double>::infinity();
    j["c"] = Json::array({1.0, 2.5});
    const std::string s = io::dump(j);
    CHECK(s.find("0.10000000000000001") != std::string::npos);
    CHECK(s.find("\"inf\"") != std::string::npos);
    CHECK(s.find("[1, 2.5]") != std::string::npos);
    CHECK(io::dump(j) == s);
}

TEST_CASE("parse errors carry line and column") {
    try {
        io::parse("{\n  \"kind\": \"power\",\n  \"p\": \n}", "p.json");
        FAIL("expected a parse error");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::Parse);
        CHECK(std::string(e.what()).find("p.json:4:") != std::string::npos);
    }
}

TEST_CASE("phi JSON round trip") {
    const std::vector<Phi> phis = {
        Phi::power(2.5, -1, 1),
        Phi::weighted_power(2.0, Profile::piecewise_linear({0, 1}, {1, 2}), 0, 1),
        Phi::orlicz({{OrliczTerm::Type::Power, 1.0, 1.0, 0.0},
                     {OrliczTerm::Type::Saturating, 1.0, 2.0, 1.0},
                     {OrliczTerm::Type::Hinge, 0.5, 1.5, 2.0}}),
        Phi::variable_exponent(Profile::log_blowup(0.0), 0, 0.5),
        Phi::variable_exponent(Profile::smooth_plateau(1.0, 2.0, 0.4, 0.6, 0.1), 0, 1),
        Phi::double_phase(2.0, Profile::holder_distance({0.2, 0.6}, 0.5, 3.0), 0, 1),
        Phi::chen_levine_rao(Profile::constant(1.5), Profile::constant(2.0), false, 0, 1),
    };
    testing_support::Corpus gen(23);
    for (const Phi& phi : phis) {
        const std::string text = io::dump(io::to_json(phi));
        const Phi back = io::phi_from_json(io::parse(text));
        CHECK(io::dump(io::to_json(back)) == text);
        for (int k = 0; k < 10; ++k) {
            const double x = gen.uniform(phi.lower(), phi.upper()), t = gen.uniform(0, 5);
            CHECK(back.eval(x, t) == phi.eval(x, t));
        }
    }
    const Phi custom = Phi::variable_exponent(Profile::analytic([](double x) { return 1 + x; }, {}), 0, 1);
    CHECK_THROWS_AS(io::to_json(custom), Error);
}

TEST_CASE("phi JSON from the documented schema") {
    const Phi phi = io::phi_from_json(io::parse(
        R"({"kind": "double_phase", "q": 2.0, "a": {"type":"piecewise_linear","knots":[0,1],"values":[0,1]}, "domain":[0,1]})"));
    CHECK(phi.eval(0.5, 2.0) == doctest::Approx(4.0));
    CHECK_THROWS_AS(io::phi_from_json(io::parse(R"({"kind": "cubic"})")), Error);
    try {
        io::phi_from_json(io::parse(R"({"kind": "power", "domain": [0, 1]})"));
        FAIL("expected a missing-field error");
    } catch (const Error& e) {
        CHECK(std::string(e.what()).find("phi.p") != std::string::npos);
    }
}

TEST_CASE("function JSON round trip") {
    testing_support::Corpus gen(24);
    for (int i = 0; i < 10; ++i) {
        const BVFunction f = gen.piecewise_linear(0, 1, gen.integer(0, 3));
        const std::string text = io::dump(io::to_json(f));
        const BVFunction back = io::bv_from_json(io::parse(text));
        CHECK(io::dump(io::to_json(back)) == text);
        for (int k = 0; k <= 20; ++k) CHECK(back.evaluate(k / 20.0) == f.evaluate(k / 20.0));
    }
    const BVFunction g = io::bv_from_json(io::parse(
        R"({"interval":[0,1],"base":0,"density":{"type":"sampled","x":[0,0.5,1],"values":[0,1,0]},"atoms":[[0.5,1.0]]})"));
    CHECK(g.evaluate(0.5) == doctest::Approx(0.25));
    CHECK(g.evaluate(1.0) == doctest::Approx(1.5));
    CHECK_THROWS_AS(io::bv_from_json(io::parse(R"({"interval":[0,1],"atoms":[[0.5]]})")), Error);
}

TEST_CASE("estimate and norm JSON round trip") {
    const BVFunction f(0, 1, 0, PiecewisePolynomial::constant(0, 1, 1.0), {{0.5, 1.0}});
    for (const auto& e : {limsup_variation(Phi::power(2.0), f, Side::Plus),
                          sup_variation(Phi::power(1.5), BVFunction::affine(0, 1, 0, 1))}) {
        const std::string text = io::dump(io::to_json(e));
        const auto back = io::estimate_from_json(io::parse(text));
        CHECK(io::dump(io::to_json(back)) == text);
        CHECK(back.status == e.status);
    }
    NormResult n;
    n.value = 1.25;
    n.modular_at_value = 0.999;
    n.bisection_iterations = 7;
    const std::string text = io::dump(io::to_json(n));
    CHECK(io::dump(io::to_json(io::norm_from_json(io::parse(text)))) == text);
}

TEST_CASE("CSV ingestion") {
    const std::string ok = temp_file("ok.csv", "x,value\n0,0\n0.25,0.25\n0.5,0.5\n0.75,2\n1,2.25\n");
    const auto s = io::read_xy_csv(ok);
    CHECK(s.x.size() == 5);
    const BVFunction f = io::bv_from_samples(s);
    REQUIRE(f.atoms().size() == 1);
    CHECK(f.atoms()[0].location == 0.5);
    CHECK(f.atoms()[0].height == doctest::Approx(1.5));
    CHECK(f.total_variation() == doctest::Approx(2.25));
    CHECK(io::bv_from_samples(s, -1.0).atoms().empty());
    CHECK(io::bv_from_samples(s, 2.0).atoms().empty());

    const std::string bad = temp_file("bad.csv", "x,value\n0,0\n0.5,abc\n");
    try {
        io::read_xy_csv(bad);
        FAIL("expected a parse error");
    } catch (const Error& e) {
        CHECK(std::string(e.what()).find(":3:") != std::string::npos);
    }
    CHECK_THROWS_AS(io::read_xy_csv(temp_file("dec.csv", "x,value\n0,0\n0,1\n")), Error);
    CHECK_THROWS_AS(io::signal_from_samples(io::read_xy_csv(temp_file("nu.csv", "x,value\n0,0\n1,1\n3,0\n"))), Error);
    const Signal sig = io::signal_from_samples(s);
    CHECK(sig.h == 0.25);
}

TEST_CASE("restore config JSON") {
    const RestoreConfig cfg = io::restore_config_from_json(io::parse(
        R"({"phi": {"kind": "power", "p": 1.5, "domain": [0, 1]}, "fidelity_weight": 2, "epsilon": 0.01, "max_iters": 10})"));
    CHECK(cfg.fidelity_weight == 2.0);
    CHECK(cfg.epsilon == 0.01);
    CHECK(cfg.max_iters == 10);
    CHECK_THROWS_AS(io::restore_config_from_json(io::parse(R"({"phi": {"kind": "power", "p": 2}, "epsilon": -1})")),
                    Error);
}
