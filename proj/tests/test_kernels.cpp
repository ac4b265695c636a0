#include "orlicz/kernels.hpp"
#include "orlicz/variation.hpp"
#include "support.hpp"

#include <doctest.h>

#include <omp.h>

#include <cmath>
#include <cstdlib>

using namespace orlicz;

namespace {

struct ThreadGuard {
    int saved = omp_get_max_threads();
    explicit ThreadGuard(int n) { omp_set_num_threads(n); }
    ~ThreadGuard() { omp_set_num_threads(saved); }
};

const Phi& mixed_phi() {
    static const Phi phi = Phi::double_phase(1.5, Profile::holder_distance({0.25, 0.75}, 0.5, 1.0), 0, 1);
    return phi;
}

}  // namespace

TEST_CASE("partition terms: parallel equals serial bit for bit") {
    ThreadGuard guard(4);
    const std::size_t n = 10000;
    std::vector<double> pts(n + 1), vals(n + 1), s(n), p(n);
    for (std::size_t i = 0; i <= n; ++i) {
        pts[i] = static_cast<double>(i) / n;
        vals[i] = std::sin(9 * pts[i]) + (pts[i] > 0.3 ? 0.5 : 0.0);
    }
    kernels::serial::partition_terms(mixed_phi(), pts, vals, Side::Plus, s);
    kernels::partition_terms(mixed_phi(), pts, vals, Side::Plus, p);
    CHECK(s == p);
    CHECK(kernels::ordered_sum(s) == kernels::ordered_sum(p));
}

TEST_CASE("partition DP: parallel equals serial including cuts") {
    ThreadGuard guard(4);
    testing_support::Corpus gen(13);
    for (int trial = 0; trial < 3; ++trial) {
        const std::size_t m = 700 + 100 * trial;
        std::vector<double> g(m), v(m);
        for (std::size_t i = 0; i < m; ++i) {
            g[i] = static_cast<double>(i) / (m - 1);
            v[i] = std::round(gen.uniform(0, 4)) * 0.25;  // many ties
        }
        const auto term = [&](std::size_t i, std::size_t j) {
            return kernels::riesz_term(mixed_phi(), g[i], g[j], v[i], v[j], Side::Plus);
        };
        const auto s = kernels::serial::partition_dp(m, term);
        const auto p = kernels::partition_dp(m, term);
        CHECK(s.value == p.value);
        CHECK(s.cuts == p.cuts);
    }
}

TEST_CASE("jitter pass: parallel equals serial") {
    ThreadGuard guard(4);
    const std::size_t n = 9000;
    const auto f = [](double x) { return std::sin(7.0 * x) + (x > 0.5 ? 1.0 : 0.0); };
    kernels::JitterState base;
    for (std::size_t i = 0; i <= n; ++i) {
        base.points.push_back(static_cast<double>(i) / n);
        base.values.push_back(f(base.points.back()));
    }
    base.home = base.points;
    base.mobile.assign(base.points.size(), 1);
    base.mobile.front() = base.mobile.back() = 0;
    base.half_cell = 0.5 / n;
    auto s = base, p = base;
    for (double step : {0.25 / n, 0.125 / n}) {
        kernels::serial::jitter_pass(mixed_phi(), Side::Plus, s, step, f);
        kernels::jitter_pass(mixed_phi(), Side::Plus, p, step, f);
    }
    CHECK(s.points == p.points);
    CHECK(s.values == p.values);
    // every point stays in its cell and the order is preserved
    for (std::size_t i = 1; i < s.points.size(); ++i) {
        CHECK(s.points[i] > s.points[i - 1]);
        CHECK(std::abs(s.points[i] - s.home[i]) <= s.half_cell * (1 + 1e-12));
    }
}

TEST_CASE("jitter never lowers the partition sum") {
    const std::size_t n = 64;
    const auto f = [](double x) { return x * x + (x > 0.37 ? 0.3 : 0.0); };
    kernels::JitterState st;
    for (std::size_t i = 0; i <= n; ++i) {
        st.points.push_back(static_cast<double>(i) / n);
        st.values.push_back(f(st.points.back()));
    }
    st.home = st.points;
    st.mobile.assign(st.points.size(), 1);
    st.mobile.front() = st.mobile.back() = 0;
    st.half_cell = 0.5 / n;
    std::vector<double> terms(n);
    kernels::serial::partition_terms(mixed_phi(), st.points, st.values, Side::Plus, terms);
    const double before = kernels::ordered_sum(terms);
    kernels::serial::jitter_pass(mixed_phi(), Side::Plus, st, 0.25 / n, f);
    kernels::serial::partition_terms(mixed_phi(), st.points, st.values, Side::Plus, terms);
    CHECK(kernels::ordered_sum(terms) >= before);
}

TEST_CASE("estimates do not depend on the thread count") {
    testing_support::Corpus gen(14);
    const BVFunction f = gen.piecewise_linear(0, 1, 2);
    VariationEstimate one, many;
    {
        ThreadGuard guard(1);
        one = limsup_variation(mixed_phi(), f, Side::Plus);
    }
    {
        ThreadGuard guard(4);
        many = limsup_variation(mixed_phi(), f, Side::Plus);
    }
    CHECK(one.value == many.value);
    REQUIRE(one.mesh_values.size() == many.mesh_values.size());
    for (std::size_t i = 0; i < one.mesh_values.size(); ++i) CHECK(one.mesh_values[i].value == many.mesh_values[i].value);
}

TEST_CASE("ORLICZ_THREADS caps the team size") {
    const int saved = omp_get_max_threads();
    setenv("ORLICZ_THREADS", "2", 1);
    kernels::apply_thread_cap_from_env();
    CHECK(kernels::max_threads() <= 2);
    unsetenv("ORLICZ_THREADS");
    omp_set_num_threads(saved);
}
