#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <utility>
#include <vector>

#include "hksum/channel.hpp"
#include "hksum/optimizers.hpp"
#include "hksum/solvers.hpp"

namespace hksum {

// Best no-time-sharing strategy at a point; the integer values match the
// numbered regions of the strategy map, 0 meaning a >= 1 or a <= 0.
enum class RegionLabel {
    OutOfDomain = 0,
    SymPrivateOnly = 1,  // symmetric split with lambda = 1
    Orthogonal = 2,
    AsymSplit = 3,
    SymSplit = 4,
};

inline const char* region_name(RegionLabel label) {
    switch (label) {
        case RegionLabel::OutOfDomain: return "out_of_domain";
        case RegionLabel::SymPrivateOnly: return "sym_private_only";
        case RegionLabel::Orthogonal: return "orthogonal";
        case RegionLabel::AsymSplit: return "asym_split";
        case RegionLabel::SymSplit: return "sym_split";
    }
    return "?";
}

/// Argmax of {r_sym, r_asym, r_orth}. Ties within 1e-12 resolve by
/// precedence SymPrivateOnly > SymSplit > AsymSplit > Orthogonal.
inline RegionLabel classify(const ChannelParams& ch) {
    constexpr double kTie = 1e-12;
    const RateResult sym = r_sym(ch);
    const RateResult asym = r_asym(ch);
    const RateResult orth = r_orth(ch);
    const double best = std::max({sym.rate, asym.rate, orth.rate});
    if (sym.rate >= best - kTie) {
        return sym.split->lambda1 == 1.0 ? RegionLabel::SymPrivateOnly : RegionLabel::SymSplit;
    }
    if (asym.rate >= best - kTie) return RegionLabel::AsymSplit;
    return RegionLabel::Orthogonal;
}

struct BoundaryPoint {
    double a;
    RegionLabel left;
    RegionLabel right;
};

/// Label changes along a in (0,1) at fixed p: brackets at 1/resolution,
/// then bisects each change to 1e-6.
inline std::vector<BoundaryPoint> boundary_scan(double p, int resolution = 2000) {
    if (resolution < 100) throw std::domain_error("boundary_scan: resolution must be >= 100");
    std::vector<BoundaryPoint> out;
    double a_prev = 1.0 / resolution;
    RegionLabel prev = classify(ChannelParams(a_prev, p));
    for (int i = 2; i < resolution; ++i) {
        const double a_cur = static_cast<double>(i) / resolution;
        const RegionLabel cur = classify(ChannelParams(a_cur, p));
        if (cur != prev) {
            double lo = a_prev;
            double hi = a_cur;
            while (hi - lo > 1e-6) {
                const double mid = 0.5 * (lo + hi);
                if (classify(ChannelParams(mid, p)) == prev) {
                    lo = mid;
                } else {
                    hi = mid;
                }
            }
            out.push_back({0.5 * (lo + hi), prev, cur});
        }
        a_prev = a_cur;
        prev = cur;
    }
    return out;
}

enum class GridAxes { AP, SnrInr };

// Rectangular sampling spec. In AP mode x is a (linear) and y is p in dB;
// in SnrInr mode x is SNR_dB and y is INR_dB, converted per point via
// a = 10^((INR_dB - SNR_dB)/10), p = 10^(SNR_dB/10).
struct GridSpec {
    GridAxes axes = GridAxes::AP;
    double x_min = 0.01;
    double x_max = 0.99;
    int x_steps = 99;
    double y_min = 0.0;
    double y_max = 40.0;
    int y_steps = 41;
    bool with_ts = false;  // also fill the time-sharing advantage columns
};

struct GridRow {
    double x = 0.0;
    double y = 0.0;
    double a = 0.0;
    double p = 0.0;
    RegionLabel label = RegionLabel::OutOfDomain;
    double r_sym = std::numeric_limits<double>::quiet_NaN();
    double r_asym = std::numeric_limits<double>::quiet_NaN();
    double r_orth = std::numeric_limits<double>::quiet_NaN();
    double r_etw = std::numeric_limits<double>::quiet_NaN();
    double ts_adv = std::numeric_limits<double>::quiet_NaN();
    double sason_adv = std::numeric_limits<double>::quiet_NaN();
};

struct GridScan {
    GridSpec spec;
    std::vector<GridRow> rows;  // y-major: y outermost, x innermost
};

/// Gains of the two time-sharing schemes over the no-time-sharing maximum
/// max(r_sym, r_asym, r_orth); both are nonnegative up to solver tolerance.
inline std::pair<double, double> ts_advantage(const ChannelParams& ch) {
    const double no_ts = std::max({r_sym(ch).rate, r_asym(ch).rate, r_orth(ch).rate});
    return {r_ts(ch).rate - no_ts, r_sason(ch).rate - no_ts};
}

inline GridScan scan(const GridSpec& spec) {
    if (spec.x_steps < 1 || spec.y_steps < 1) {
        throw std::domain_error("scan: need at least one step per axis");
    }
    if (!(spec.x_min <= spec.x_max) || !(spec.y_min <= spec.y_max)) {
        throw std::domain_error("scan: empty axis range");
    }
    GridScan result;
    result.spec = spec;
    result.rows.resize(static_cast<std::size_t>(spec.x_steps) * spec.y_steps);

    const auto coord = [](double lo, double hi, int steps, int i) {
        return steps == 1 ? lo : lo + (hi - lo) * static_cast<double>(i) / (steps - 1);
    };
    const long n = static_cast<long>(result.rows.size());
    auto fill = [&](long begin, long end) {
        for (long idx = begin; idx < end; ++idx) {
            const int iy = static_cast<int>(idx / spec.x_steps);
            const int ix = static_cast<int>(idx % spec.x_steps);
            GridRow row;
            row.x = coord(spec.x_min, spec.x_max, spec.x_steps, ix);
            row.y = coord(spec.y_min, spec.y_max, spec.y_steps, iy);
            if (spec.axes == GridAxes::AP) {
                row.a = row.x;
                row.p = linear_from_db(row.y);
            } else {
                row.p = linear_from_db(row.x);
                row.a = linear_from_db(row.y - row.x);
            }
            if (row.a > 0.0 && row.a < 1.0 && std::isfinite(row.p) && row.p > 0.0) {
                const ChannelParams ch(row.a, row.p);
                row.label = classify(ch);
                row.r_sym = r_sym(ch).rate;
                row.r_asym = r_asym(ch).rate;
                row.r_orth = r_orth(ch).rate;
                row.r_etw = r_etw(ch).rate;
                if (spec.with_ts) {
                    const auto adv = ts_advantage(ch);
                    row.ts_adv = adv.first;
                    row.sason_adv = adv.second;
                }
            } else {
                row.label = RegionLabel::OutOfDomain;
                if (std::isfinite(row.p) && row.p > 0.0) {
                    row.r_orth = gamma(2.0 * row.p);
                }
            }
            result.rows[static_cast<std::size_t>(idx)] = row;
        }
        return 0;
    };
    map_blocks<int>(n, 16, fill);
    return result;
}

}  // namespace hksum
