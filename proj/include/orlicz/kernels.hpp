#pragma once

// Data-parallel inner loops of the variation functionals. Every kernel has
// an OpenMP version and a serial reference in orlicz::kernels::serial; the
// two are required to agree bit for bit (tests/test_kernels.cpp), so the
// parallel versions only ever reduce in a fixed order or with an exact,
// order-independent operation (max with smallest-index tie break).

#include "orlicz/bvfunc.hpp"
#include "orlicz/extended_real.hpp"
#include "orlicz/phi.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <span>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace orlicz::kernels {

/// Riesz term phi^{side}_J(|f(l) - f(r)| / |J|) * |J| from precomputed values.
inline double riesz_term(const Phi& phi, double l, double r, double fl, double fr, Side side) {
    const double len = r - l;
    const double t = std::abs(fl - fr) / len;
    if (t == 0.0) return 0.0;
    return phi.envelope(l, r, t, side) * len;
}

/// Kahan sum in index order.
inline double ordered_sum(std::span<const double> terms) {
    KahanSum s;
    for (double v : terms) s.add(v);
    return s.value();
}

struct DpResult {
    double value = 0.0;
    std::vector<std::size_t> cuts;  // indices into the grid, first 0 and last n-1
};

namespace detail {

inline DpResult backtrack(std::vector<double> best, const std::vector<std::size_t>& from) {
    DpResult out;
    const std::size_t n = best.size();
    out.value = best[n - 1];
    for (std::size_t j = n - 1;; j = from[j]) {
        out.cuts.push_back(j);
        if (j == 0) break;
    }
    std::reverse(out.cuts.begin(), out.cuts.end());
    return out;
}

}  // namespace detail

namespace serial {

inline void partition_terms(const Phi& phi, std::span<const double> pts, std::span<const double> vals, Side side,
                            std::span<double> out) {
    for (std::size_t k = 0; k + 1 < pts.size(); ++k)
        out[k] = riesz_term(phi, pts[k], pts[k + 1], vals[k], vals[k + 1], side);
}

/// best[j] = max_{i<j} best[i] + term(i, j); ties go to the smallest i.
template <class TermFn>
DpResult partition_dp(std::size_t n, TermFn&& term) {
    std::vector<double> best(n, -std::numeric_limits<double>::infinity());
    std::vector<std::size_t> from(n, 0);
    best[0] = 0.0;
    for (std::size_t j = 1; j < n; ++j) {
        for (std::size_t i = 0; i < j; ++i) {
            const double v = best[i] + term(i, j);
            if (v > best[j]) {
                best[j] = v;
                from[j] = i;
            }
        }
    }
    return detail::backtrack(std::move(best), from);
}

}  // namespace serial

inline void partition_terms(const Phi& phi, std::span<const double> pts, std::span<const double> vals, Side side,
                            std::span<double> out) {
    const std::ptrdiff_t m = static_cast<std::ptrdiff_t>(pts.size()) - 1;
#pragma omp parallel for schedule(static) if (m > 2048)
    for (std::ptrdiff_t k = 0; k < m; ++k) {
        const auto u = static_cast<std::size_t>(k);
        out[u] = riesz_term(phi, pts[u], pts[u + 1], vals[u], vals[u + 1], side);
    }
}

template <class TermFn>
DpResult partition_dp(std::size_t n, TermFn&& term) {
    std::vector<double> best(n, -std::numeric_limits<double>::infinity());
    std::vector<std::size_t> from(n, 0);
    best[0] = 0.0;
    for (std::size_t j = 1; j < n; ++j) {
        double bv = -std::numeric_limits<double>::infinity();
        std::size_t bi = 0;
#pragma omp parallel if (j > 512)
        {
            double lv = -std::numeric_limits<double>::infinity();
            std::size_t li = 0;
#pragma omp for schedule(static) nowait
            for (std::ptrdiff_t ii = 0; ii < static_cast<std::ptrdiff_t>(j); ++ii) {
                const auto i = static_cast<std::size_t>(ii);
                const double v = best[i] + term(i, j);
                if (v > lv) {
                    lv = v;
                    li = i;
                }
            }
#pragma omp critical(orlicz_dp_reduce)
            {
                if (lv > bv || (lv == bv && li < bi)) {
                    bv = lv;
                    bi = li;
                }
            }
        }
        best[j] = bv;
        from[j] = bi;
    }
    return detail::backtrack(std::move(best), from);
}

/// State of a partition whose interior points may move around home positions.
struct JitterState {
    std::vector<double> points;
    std::vector<double> values;  // f at points
    std::vector<double> home;    // home position of each point
    std::vector<char> mobile;    // endpoints and mandatory points stay fixed
    double half_cell = 0.0;      // points stay within home +- half_cell
    double max_len = std::numeric_limits<double>::infinity();  // mesh bound for moved intervals
};

namespace detail {

template <class Eval>
void try_move(const Phi& phi, Side side, JitterState& st, std::size_t k, double step, Eval&& f) {
    const double l = st.points[k - 1], r = st.points[k + 1];
    const double fl = st.values[k - 1], fr = st.values[k + 1];
    const double cur = riesz_term(phi, l, st.points[k], fl, st.values[k], side) +
                       riesz_term(phi, st.points[k], r, st.values[k], fr, side);
    double best = cur, best_x = st.points[k], best_v = st.values[k];
    for (const double dir : {-1.0, 1.0}) {
        const double x = st.points[k] + dir * step;
        if (!(x > l && x < r)) continue;
        if (std::abs(x - st.home[k]) > st.half_cell) continue;
        if (x - l > st.max_len || r - x > st.max_len) continue;
        const double v = f(x);
        const double cand = riesz_term(phi, l, x, fl, v, side) + riesz_term(phi, x, r, v, fr, side);
        if (cand > best) {
            best = cand;
            best_x = x;
            best_v = v;
        }
    }
    st.points[k] = best_x;
    st.values[k] = best_v;
}

}  // namespace detail

namespace serial {

/// One red-black hill-climbing pass: even interior points, then odd ones.
template <class Eval>
void jitter_pass(const Phi& phi, Side side, JitterState& st, double step, Eval&& f) {
    const std::size_t n = st.points.size();
    for (std::size_t color = 0; color < 2; ++color)
        for (std::size_t k = 1 + color; k + 1 < n; k += 2)
            if (st.mobile[k]) detail::try_move(phi, side, st, k, step, f);
}

}  // namespace serial

/// Points of one color share no interval, so each color is a parallel loop
/// whose outcome does not depend on scheduling.
template <class Eval>
void jitter_pass(const Phi& phi, Side side, JitterState& st, double step, Eval&& f) {
    const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(st.points.size());
    for (std::ptrdiff_t color = 0; color < 2; ++color) {
#pragma omp parallel for schedule(static) if (n > 4096)
        for (std::ptrdiff_t kk = 1 + color; kk < n - 1; kk += 2) {
            const auto k = static_cast<std::size_t>(kk);
            if (st.mobile[k]) detail::try_move(phi, side, st, k, step, f);
        }
    }
}

/// Caps the OpenMP thread count (ORLICZ_THREADS); no-op without OpenMP.
void apply_thread_cap_from_env();
int max_threads();

}  // namespace orlicz::kernels
