#pragma once

#include <algorithm>
#include <cmath>
#include <future>
#include <limits>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace hksum {

struct BracketingError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Bisection for a sign change of f on [lo, hi]. Stops when |f| < f_tol or
// the interval is narrower than x_tol. Requires opposite signs at the
// endpoints; an endpoint that is already a root (|f| < f_tol) is returned
// as-is.
template <typename Fn>
double bisect_root(Fn&& f, double lo, double hi, double f_tol = 1e-12, double x_tol = 1e-14,
                   int max_iter = 200) {
    double flo = f(lo);
    double fhi = f(hi);
    if (std::abs(flo) < f_tol) return lo;
    if (std::abs(fhi) < f_tol) return hi;
    if ((flo > 0.0) == (fhi > 0.0)) {
        throw BracketingError("bisect_root: no sign change on [" + std::to_string(lo) + ", " +
                              std::to_string(hi) + "]; f(lo) = " + std::to_string(flo) +
                              ", f(hi) = " + std::to_string(fhi));
    }
    for (int i = 0; i < max_iter && hi - lo > x_tol; ++i) {
        const double mid = 0.5 * (lo + hi);
        const double fm = f(mid);
        if (std::abs(fm) < f_tol) return mid;
        if ((fm > 0.0) == (flo > 0.0)) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

// Golden-section maximization on [lo, hi] for a unimodal objective;
// callers with possibly multimodal objectives must bracket first.
template <typename Fn>
double golden_section_max(Fn&& f, double lo, double hi, double x_tol = 1e-10) {
    constexpr double kInvPhi = 0.6180339887498949;
    double x1 = hi - kInvPhi * (hi - lo);
    double x2 = lo + kInvPhi * (hi - lo);
    double f1 = f(x1);
    double f2 = f(x2);
    while (hi - lo > x_tol) {
        if (f1 < f2) {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + kInvPhi * (hi - lo);
            f2 = f(x2);
        } else {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - kInvPhi * (hi - lo);
            f1 = f(x1);
        }
    }
    const double xm = 0.5 * (lo + hi);
    return xm;
}

struct GridMax1D {
    double x = 0.0;
    double value = -std::numeric_limits<double>::infinity();
};

// Dense scan of [lo, hi] with `steps` samples, then `refine` rounds of
// zooming 10x into a one-step window around the incumbent.
template <typename Fn>
GridMax1D grid_max_1d(Fn&& f, double lo, double hi, int steps, int refine = 0) {
    if (steps < 2) throw std::domain_error("grid_max_1d: steps must be >= 2");
    GridMax1D best;
    const double span = hi - lo;
    for (int i = 0; i < steps; ++i) {
        const double x = lo + span * static_cast<double>(i) / (steps - 1);
        const double v = f(x);
        if (v > best.value) best = {x, v};
    }
    double w = span / (steps - 1);
    for (int r = 0; r < refine; ++r) {
        const double wlo = std::max(lo, best.x - w);
        const double whi = std::min(hi, best.x + w);
        constexpr int kZoomSamples = 41;
        for (int i = 0; i < kZoomSamples; ++i) {
            const double x = wlo + (whi - wlo) * static_cast<double>(i) / (kZoomSamples - 1);
            const double v = f(x);
            if (v > best.value) best = {x, v};
        }
        w /= 10.0;
    }
    return best;
}

// Runs fn(begin, end) over fixed-size chunks of [0, n) and returns the
// partial results in chunk order. The partition depends only on n, so
// any order-sensitive fold over the result is reproducible regardless of
// scheduling.
template <typename Partial, typename Fn>
std::vector<Partial> map_blocks(long n, long min_block, Fn&& fn) {
    const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
    const long max_blocks = static_cast<long>(hw) * 4;
    long n_blocks = std::clamp(n / std::max<long>(1, min_block), 1L, max_blocks);
    const long block = (n + n_blocks - 1) / n_blocks;
    std::vector<std::future<Partial>> futures;
    for (long b = 0; b * block < n; ++b) {
        const long begin = b * block;
        const long end = std::min(n, begin + block);
        futures.push_back(std::async(std::launch::async, [begin, end, &fn] { return fn(begin, end); }));
    }
    std::vector<Partial> out;
    out.reserve(futures.size());
    for (auto& fut : futures) out.push_back(fut.get());
    return out;
}

}  // namespace hksum
