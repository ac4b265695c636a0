// Serial reference vs OpenMP kernels: wall time and agreement.
// Usage: bench_kernels [grid_points] [repeats]

#include "orlicz/kernels.hpp"
#include "orlicz/phi.hpp"
#include "orlicz/profile.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <vector>

using namespace orlicz;

namespace {

template <class F>
double seconds(F&& f, int repeats) {
    const auto t0 = std::chrono::steady_clock::now();
    for (int i = 0; i < repeats; ++i) f();
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count() / repeats;
}

}  // namespace

int main(int argc, char** argv) {
    kernels::apply_thread_cap_from_env();
    const std::size_t n = argc > 1 ? std::strtoul(argv[1], nullptr, 10) : 1u << 20;
    const int repeats = argc > 2 ? std::atoi(argv[2]) : 3;
    const Phi phi = Phi::double_phase(1.5, Profile::holder_distance({0.25, 0.75}, 0.5, 1.0), 0.0, 1.0);
    const auto f = [](double x) { return std::sin(7.0 * x) + (x > 0.5 ? 1.0 : 0.0); };

    std::vector<double> pts(n + 1), vals(n + 1), out_s(n), out_p(n);
    for (std::size_t i = 0; i <= n; ++i) {
        pts[i] = static_cast<double>(i) / static_cast<double>(n);
        vals[i] = f(pts[i]);
    }
    std::printf("threads %d\n", kernels::max_threads());

    double sum_s = 0.0, sum_p = 0.0;
    const double ts = seconds([&] {
        kernels::serial::partition_terms(phi, pts, vals, Side::Plus, out_s);
        sum_s = kernels::ordered_sum(out_s);
    }, repeats);
    const double tp = seconds([&] {
        kernels::partition_terms(phi, pts, vals, Side::Plus, out_p);
        sum_p = kernels::ordered_sum(out_p);
    }, repeats);
    std::printf("partition_terms  n=%zu  serial %.4fs  parallel %.4fs  speedup %.2f  identical %s\n", n, ts, tp,
                ts / tp, sum_s == sum_p ? "yes" : "no");

    const std::size_t m = std::min<std::size_t>(n, 4096);
    std::vector<double> g(m), gv(m);
    for (std::size_t i = 0; i < m; ++i) {
        g[i] = static_cast<double>(i) / static_cast<double>(m - 1);
        gv[i] = f(g[i]);
    }
    const auto term = [&](std::size_t i, std::size_t j) {
        return kernels::riesz_term(phi, g[i], g[j], gv[i], gv[j], Side::Plus);
    };
    kernels::DpResult ds, dp;
    const double tds = seconds([&] { ds = kernels::serial::partition_dp(m, term); }, 1);
    const double tdp = seconds([&] { dp = kernels::partition_dp(m, term); }, 1);
    std::printf("partition_dp     n=%zu  serial %.4fs  parallel %.4fs  speedup %.2f  identical %s\n", m, tds, tdp,
                tds / tdp, ds.value == dp.value && ds.cuts == dp.cuts ? "yes" : "no");

    kernels::JitterState base;
    base.points = pts;
    base.home = pts;
    base.values = vals;
    base.half_cell = 0.5 / static_cast<double>(n);
    base.mobile.assign(pts.size(), 1);
    base.mobile.front() = base.mobile.back() = 0;
    kernels::JitterState js = base, jp = base;
    const double tjs = seconds([&] { kernels::serial::jitter_pass(phi, Side::Plus, js, base.half_cell / 2, f); }, 1);
    const double tjp = seconds([&] { kernels::jitter_pass(phi, Side::Plus, jp, base.half_cell / 2, f); }, 1);
    std::printf("jitter_pass      n=%zu  serial %.4fs  parallel %.4fs  speedup %.2f  identical %s\n", n, tjs, tjp,
                tjs / tjp, js.points == jp.points ? "yes" : "no");
    return 0;
}
