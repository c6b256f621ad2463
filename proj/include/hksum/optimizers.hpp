#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "hksum/core_rates.hpp"
#include "hksum/solvers.hpp"

namespace hksum {

// Power regions of the closed-form symmetric optimum. The binding bound is
// via_cross below t1, via_joint above t2, and the two intersect in between.
enum class SymCase { PrivateOnly, Intersection, Interior };

struct SymRegime {
    SymCase tag;
    double t1;  // (1-a)/a^2
    double t2;  // (1-a^3)/(a^3(1+a))
};

inline SymRegime sym_regime(const ChannelParams& ch) {
    const double a = ch.a;
    const double a3 = a * a * a;
    const double t1 = (1.0 - a) / (a * a);
    const double t2 = (1.0 - a3) / (a3 * (1.0 + a));
    SymCase tag = SymCase::Interior;
    if (ch.p <= t1) {
        tag = SymCase::PrivateOnly;
    } else if (ch.p <= t2) {
        tag = SymCase::Intersection;
    }
    return {tag, t1, t2};
}

/// Optimal equal-split fraction, one closed-form branch per power region.
inline double sym_optimal_split(const ChannelParams& ch) {
    const SymRegime reg = sym_regime(ch);
    const double a = ch.a;
    const double p = ch.p;
    switch (reg.tag) {
        case SymCase::PrivateOnly: return 1.0;
        case SymCase::Intersection: return (a * a * p + a - 1.0) / p;
        case SymCase::Interior: break;
    }
    return (1.0 - a) / ((1.0 + a) * a * p);
}

/// Best sum rate under equal splits lambda1 = lambda2.
inline RateResult r_sym(const ChannelParams& ch) {
    const double lam = sym_optimal_split(ch);
    RateResult out;
    out.scheme = Scheme::Sym;
    out.rate = psi(ch, lam).min();
    out.split = PowerSplit{lam, lam};
    return out;
}

/// Best sum rate with user 1 common-only (lambda1 = 0). For p above
/// (1-a)/a^2 the optimum balances the two omega bounds; below it both
/// bounds increase in lambda so the corner lambda = 1 wins.
inline RateResult r_asym(const ChannelParams& ch) {
    const double a = ch.a;
    const double p = ch.p;
    const double t1 = (1.0 - a) / (a * a);
    RateResult out;
    out.scheme = Scheme::Asym;
    if (p < t1) {
        out.rate = std::log1p((1.0 + a) * p) * kInvLn2;
        out.split = PowerSplit{0.0, 1.0};
        return out;
    }
    const auto f = [&ch](double lam) {
        const BoundPair b = omega(ch, lam);
        return b.via_cross - b.via_joint;
    };
    // via_cross is non-increasing and via_joint strictly increasing here,
    // so the sign change is unique. f(0) >= 0 holds in exact arithmetic;
    // rounding can leave it barely negative right at the threshold, where
    // the root is 0 itself.
    double lam;
    const double f0 = f(0.0);
    if (f0 <= 0.0) {
        if (f0 < -1e-9) {
            throw BracketingError("r_asym: omega bounds do not bracket a root at p >= (1-a)/a^2; "
                                  "f(0) = " + std::to_string(f0) + ", f(1) = " + std::to_string(f(1.0)));
        }
        lam = 0.0;
    } else {
        lam = bisect_root(f, 0.0, 1.0, 1e-12, 1e-14);
    }
    const double lp = lam * p;
    out.rate = std::log2((1.0 + lp + a * p) * (1.0 + a * p) / (1.0 + a * lp));
    out.split = PowerSplit{0.0, lam};
    return out;
}

/// Orthogonal signaling (TDMA/FDMA) sum rate gamma(2p); independent of a.
inline RateResult r_orth(const ChannelParams& ch) {
    RateResult out;
    out.scheme = Scheme::Orth;
    out.rate = gamma(2.0 * ch.p);
    return out;
}

/// Sum rate of the fixed split lambda = 1/(a p) that puts private power at
/// the unintended receiver's noise floor. Infeasible when a p < 1; the
/// split is then clamped to 1 and the result flagged.
inline RateResult r_etw(const ChannelParams& ch) {
    const double a = ch.a;
    const double p = ch.p;
    RateResult out;
    out.scheme = Scheme::Etw;
    if (a * p < 1.0) {
        out.rate = 2.0 * gamma(p / (1.0 + a * p));
        out.split = PowerSplit{1.0, 1.0};
        out.split_clamped = true;
        return out;
    }
    const double via_joint = gamma(1.0 / (2.0 * a)) + gamma((p * (1.0 + a) - 1.0) / 2.0);
    const double via_cross = 2.0 * gamma((1.0 - a + a * a * p) / (2.0 * a));
    out.rate = std::min(via_cross, via_joint);
    out.split = PowerSplit{1.0 / (a * p), 1.0 / (a * p)};
    return out;
}

/// Conjectured no-time-sharing optimum: the better of the symmetric and
/// asymmetric schemes. Ties within 1e-12 report the symmetric solution.
inline RateResult r_rs(const ChannelParams& ch) {
    const RateResult sym = r_sym(ch);
    const RateResult asym = r_asym(ch);
    const bool sym_wins = sym.rate >= asym.rate - 1e-12;
    RateResult out = sym_wins ? sym : asym;
    out.basis = out.scheme;
    out.scheme = Scheme::RateSplit;
    return out;
}

struct Oracle2DSpec {
    int steps = 101;  // samples per axis, >= 2
    int refine = 0;   // local zoom rounds around the incumbent corners
};

namespace detail {

struct GridBest {
    double rate = -std::numeric_limits<double>::infinity();
    double l1 = 0.0;
    double l2 = 0.0;
};

// Total order: higher rate first, then lexicographically smaller split.
inline bool improves(const GridBest& c, const GridBest& b) {
    if (c.rate != b.rate) return c.rate > b.rate;
    if (c.l1 != b.l1) return c.l1 < b.l1;
    return c.l2 < b.l2;
}

// One zoom pass: a 33x33 window around `c`, half-width w per axis.
inline GridBest zoom_2d(const ChannelParams& ch, GridBest c, double w, int rounds) {
    constexpr int kSide = 33;
    for (int r = 0; r < rounds; ++r) {
        const double lo1 = std::max(0.0, c.l1 - w), hi1 = std::min(1.0, c.l1 + w);
        const double lo2 = std::max(0.0, c.l2 - w), hi2 = std::min(1.0, c.l2 + w);
        for (int i = 0; i < kSide; ++i) {
            const double x = lo1 + (hi1 - lo1) * i / (kSide - 1);
            for (int j = 0; j < kSide; ++j) {
                const double y = lo2 + (hi2 - lo2) * j / (kSide - 1);
                const double v = hk_sum_rate_factored(ch, x, y);
                if (v > c.rate) c = {v, x, y};
            }
        }
        w /= 8.0;
    }
    return c;
}

// 1-D zoom constrained to the diagonal (l, l) or the edge (0, l). A square
// lattice cannot follow the narrow max-min ridge, whose maxima sit on
// exactly these two families; a line search along them can.
inline GridBest zoom_line(const ChannelParams& ch, double center, double w, int rounds,
                          bool diagonal) {
    constexpr int kSamples = 41;
    const auto value = [&](double l) {
        return hk_sum_rate_factored(ch, diagonal ? l : 0.0, l);
    };
    GridBest c{value(center), diagonal ? center : 0.0, center};
    for (int r = 0; r < rounds; ++r) {
        const double lo = std::max(0.0, c.l2 - w), hi = std::min(1.0, c.l2 + w);
        for (int i = 0; i < kSamples; ++i) {
            const double l = lo + (hi - lo) * i / (kSamples - 1);
            const double v = value(l);
            if (v > c.rate) c = {v, diagonal ? l : 0.0, l};
        }
        w /= 8.0;
    }
    return c;
}

}  // namespace detail

/// Exhaustive grid maximum of the HK sum rate over the split square,
/// optionally zoomed locally. The independent check of the r_rs conjecture.
inline RateResult brute_force_rs(const ChannelParams& ch, const Oracle2DSpec& spec) {
    if (spec.steps < 2) throw std::domain_error("brute_force_rs: steps must be >= 2");
    const int n = spec.steps;
    const double a = ch.a;
    const double p = ch.p;
    const double k_joint = 1.0 + p + a * p;

    std::vector<double> lam(n), lp(n), a_lp(n), f_cross(n), log_den(n);
    for (int i = 0; i < n; ++i) {
        lam[i] = static_cast<double>(i) / (n - 1);
        lp[i] = lam[i] * p;
        a_lp[i] = a * lp[i];
        f_cross[i] = 1.0 + lp[i] + a * p;
        log_den[i] = std::log2(1.0 + a_lp[i]);
    }

    // lambda1 <= lambda2 triangle only: the rate is swap symmetric and the
    // lexicographic tie-break representative always lies in the triangle.
    // Scanning in lexicographic order makes strict ">" keep the tie-break.
    auto scan_rows = [&](long i_begin, long i_end) {
        detail::GridBest best;
        for (long i = i_begin; i < i_end; ++i) {
            const double u = lp[i];
            const double au = a_lp[i];
            const double fi = f_cross[i];
            const double li = log_den[i];
            const double d_base = 1.0 + u;
            for (long j = i; j < n; ++j) {
                const double d1 = d_base + a_lp[j];
                const double d2 = 1.0 + lp[j] + au;
                const double n_cross = fi * f_cross[j];
                const double n_joint = std::sqrt(d1 * d2) * k_joint;
                const double rate = std::log2(std::min(n_cross, n_joint)) - li - log_den[j];
                if (rate > best.rate) best = {rate, lam[i], lam[j]};
            }
        }
        return best;
    };
    const auto partials = map_blocks<detail::GridBest>(n, 8, scan_rows);
    detail::GridBest best;
    for (const auto& pb : partials) {
        if (detail::improves(pb, best)) best = pb;
    }

    if (spec.refine > 0) {
        // The near-optimal basins can be value-tied at grid resolution, so
        // refine the best diagonal and best lambda1=0 edge points too, not
        // just the global incumbent.
        detail::GridBest diag, edge;
        for (int i = 0; i < n; ++i) {
            const double v_d = hk_sum_rate_factored(ch, lam[i], lam[i]);
            if (v_d > diag.rate) diag = {v_d, lam[i], lam[i]};
            const double v_e = hk_sum_rate_factored(ch, 0.0, lam[i]);
            if (v_e > edge.rate) edge = {v_e, 0.0, lam[i]};
        }
        const double w = 1.0 / (n - 1);
        for (const detail::GridBest& seed : {best, diag, edge}) {
            const detail::GridBest z = detail::zoom_2d(ch, seed, w, spec.refine);
            if (detail::improves(z, best)) best = z;
        }
        const detail::GridBest zd = detail::zoom_line(ch, diag.l2, w, spec.refine, true);
        if (detail::improves(zd, best)) best = zd;
        const detail::GridBest ze = detail::zoom_line(ch, edge.l2, w, spec.refine, false);
        if (detail::improves(ze, best)) best = ze;
    }

    RateResult out;
    out.scheme = Scheme::BruteForce;
    out.rate = best.rate;
    out.split = PowerSplit{best.l1, best.l2};
    return out;
}

/// Slot-1 sum rate of the mirrored two-slot scheme; equals the average
/// over both slots. Slot powers are alpha1*p and (2-alpha1)*p. The min
/// keeps the own-decoding bound: its dominance by the cross bound was
/// shown only for equal powers.
inline double ts_objective(const ChannelParams& ch, double alpha1, double l1, double l2) {
    const double a = ch.a;
    const double q1 = alpha1 * ch.p;
    const double q2 = (2.0 - alpha1) * ch.p;
    const double u = l1 * q1;
    const double v = l2 * q2;
    const double ub = (1.0 - l1) * q1;
    const double vb = (1.0 - l2) * q2;
    const double d1 = 1.0 + u + a * v;
    const double d2 = 1.0 + v + a * u;
    const double priv = gamma(u / (1.0 + a * v)) + gamma(v / (1.0 + a * u));
    const double cross = gamma(a * vb / d1) + gamma(a * ub / d2);
    const double joint = 0.5 * (gamma((ub + a * vb) / d1) + gamma((vb + a * ub) / d2));
    const double own = gamma(ub / d1) + gamma(vb / d2);
    return priv + std::min({cross, joint, own});
}

namespace detail {

struct TsBest {
    double rate = -std::numeric_limits<double>::infinity();
    double alpha1 = 1.0;
    double l1 = 1.0;
    double l2 = 1.0;
};

inline bool improves(const TsBest& c, const TsBest& b) {
    if (c.rate != b.rate) return c.rate > b.rate;
    if (c.alpha1 != b.alpha1) return c.alpha1 < b.alpha1;
    if (c.l1 != b.l1) return c.l1 < b.l1;
    return c.l2 < b.l2;
}

// One-user-common family (lambda1 = 0, both slot orientations via the full
// alpha range): a nested scan, fine in alpha with an inner 1-D lambda2
// search. The optimum here rides a diagonal ridge in the (alpha, lambda2)
// plane that a box zoom loses.
inline TsBest ts_asym_family(const ChannelParams& ch, int zoom_rounds) {
    const auto inner = [&](double alpha) {
        constexpr int kCoarse = 51;
        TsBest c{-std::numeric_limits<double>::infinity(), alpha, 0.0, 0.0};
        for (int i = 0; i < kCoarse; ++i) {
            const double l = static_cast<double>(i) / (kCoarse - 1);
            const double v = ts_objective(ch, alpha, 0.0, l);
            if (v > c.rate) c = {v, alpha, 0.0, l};
        }
        double w = 1.0 / (kCoarse - 1);
        for (int r = 0; r < zoom_rounds; ++r) {
            const double lo = std::max(0.0, c.l2 - w), hi = std::min(1.0, c.l2 + w);
            for (int i = 0; i < 41; ++i) {
                const double l = lo + (hi - lo) * i / 40.0;
                const double v = ts_objective(ch, alpha, 0.0, l);
                if (v > c.rate) c = {v, alpha, 0.0, l};
            }
            w /= 8.0;
        }
        return c;
    };
    constexpr int kAlphaGrid = 401;
    TsBest best;
    for (int i = 0; i < kAlphaGrid; ++i) {
        const TsBest c = inner(2.0 * i / (kAlphaGrid - 1));
        if (improves(c, best)) best = c;
    }
    double w = 2.0 / (kAlphaGrid - 1);
    for (int r = 0; r < zoom_rounds; ++r) {
        const double lo = std::max(0.0, best.alpha1 - w), hi = std::min(2.0, best.alpha1 + w);
        for (int i = 0; i < 41; ++i) {
            const TsBest c = inner(lo + (hi - lo) * i / 40.0);
            if (improves(c, best)) best = c;
        }
        w /= 8.0;
    }
    return best;
}

inline TsBest ts_zoom(const ChannelParams& ch, TsBest c, double w_alpha, double w_lam, int rounds) {
    constexpr int kSide = 21;
    for (int r = 0; r < rounds; ++r) {
        const double alo = std::max(0.0, c.alpha1 - w_alpha), ahi = std::min(2.0, c.alpha1 + w_alpha);
        const double l1lo = std::max(0.0, c.l1 - w_lam), l1hi = std::min(1.0, c.l1 + w_lam);
        const double l2lo = std::max(0.0, c.l2 - w_lam), l2hi = std::min(1.0, c.l2 + w_lam);
        for (int i = 0; i < kSide; ++i) {
            const double al = alo + (ahi - alo) * i / (kSide - 1);
            for (int j = 0; j < kSide; ++j) {
                const double x = l1lo + (l1hi - l1lo) * j / (kSide - 1);
                for (int k = 0; k < kSide; ++k) {
                    const double y = l2lo + (l2hi - l2lo) * k / (kSide - 1);
                    const double v = ts_objective(ch, al, x, y);
                    if (v > c.rate) c = {v, al, x, y};
                }
            }
        }
        w_alpha /= 10.0;
        w_lam /= 10.0;
    }
    return c;
}

}  // namespace detail

/// Two-slot equal-duration time sharing, maximized over the slot power
/// scale and both slot-1 splits. Never below the no-time-sharing schemes:
/// their configurations are feasible points and seed the refinement.
inline RateResult r_ts(const ChannelParams& ch) {
    // alpha1 in [0,1] suffices: (alpha1, l1, l2) and (2-alpha1, l2, l1)
    // describe the same scheme with slots relabeled.
    constexpr int kAlphaSteps = 101;
    constexpr int kLambdaSteps = 101;
    auto scan_alpha = [&](long a_begin, long a_end) {
        detail::TsBest best;
        for (long ia = a_begin; ia < a_end; ++ia) {
            const double alpha1 = static_cast<double>(ia) / (kAlphaSteps - 1);
            for (int i = 0; i < kLambdaSteps; ++i) {
                const double l1 = static_cast<double>(i) / (kLambdaSteps - 1);
                for (int j = 0; j < kLambdaSteps; ++j) {
                    const double l2 = static_cast<double>(j) / (kLambdaSteps - 1);
                    const double v = ts_objective(ch, alpha1, l1, l2);
                    if (v > best.rate) best = {v, alpha1, l1, l2};
                }
            }
        }
        return best;
    };
    const auto partials = map_blocks<detail::TsBest>(kAlphaSteps, 4, scan_alpha);
    detail::TsBest best;
    for (const auto& pb : partials) {
        if (detail::improves(pb, best)) best = pb;
    }

    const RateResult sym = r_sym(ch);
    const RateResult asym = r_asym(ch);
    std::vector<detail::TsBest> seeds;
    seeds.push_back(best);
    seeds.push_back({ts_objective(ch, 1.0, sym.split->lambda1, sym.split->lambda2),
                     1.0, sym.split->lambda1, sym.split->lambda2});
    seeds.push_back({ts_objective(ch, 1.0, 0.0, asym.split->lambda2), 1.0, 0.0, asym.split->lambda2});
    seeds.push_back({ts_objective(ch, 0.0, 1.0, 1.0), 0.0, 1.0, 1.0});  // TDMA
    for (const auto& seed : seeds) {
        if (detail::improves(seed, best)) best = seed;
    }
    constexpr int kZoomRounds = 3;
    for (const auto& seed : seeds) {
        const detail::TsBest z = detail::ts_zoom(ch, seed, 1.0 / (kAlphaSteps - 1),
                                                 1.0 / (kLambdaSteps - 1), kZoomRounds);
        if (detail::improves(z, best)) best = z;
    }
    const detail::TsBest fam = detail::ts_asym_family(ch, kZoomRounds);
    if (detail::improves(fam, best)) best = fam;

    RateResult out;
    out.scheme = Scheme::TimeShare;
    out.rate = best.rate;
    out.time_share = TimeShareConfig{best.alpha1, PowerSplit{best.l1, best.l2}, std::nullopt};
    return out;
}

/// Four-slot scheme: a fraction 2*beta of the time runs the rate-split
/// optimum at power 2*beta*p, the rest is TDMA at power 2*(1+2*beta)*p.
/// beta = 1/2 recovers r_rs, beta = 0 recovers r_orth.
inline RateResult r_sason(const ChannelParams& ch) {
    const double p = ch.p;
    auto objective = [&](double beta) {
        if (beta <= 0.0) return gamma(2.0 * p);
        beta = std::min(beta, 0.5);
        const double rs = r_rs(ChannelParams(ch.a, 2.0 * beta * p)).rate;
        const double orth_part =
            beta >= 0.5 ? 0.0 : (1.0 - 2.0 * beta) * gamma(2.0 * (1.0 + 2.0 * beta) * p);
        return 2.0 * beta * rs + orth_part;
    };

    // Safeguard scan first: the objective can be non-concave. Golden
    // section then polishes the winning bracket.
    constexpr int kScanSteps = 101;  // beta step 0.005
    double best_beta = 0.0;
    double best_val = objective(0.0);
    for (int i = 1; i < kScanSteps; ++i) {
        const double beta = 0.5 * static_cast<double>(i) / (kScanSteps - 1);
        const double v = objective(beta);
        if (v > best_val) {
            best_val = v;
            best_beta = beta;
        }
    }
    const double step = 0.5 / (kScanSteps - 1);
    const double lo = std::max(0.0, best_beta - step);
    const double hi = std::min(0.5, best_beta + step);
    const double polished = golden_section_max(objective, lo, hi, 1e-10);
    if (const double v = objective(polished); v > best_val) {
        best_val = v;
        best_beta = polished;
    }

    RateResult out;
    out.scheme = Scheme::Sason;
    out.rate = best_val;
    TimeShareConfig cfg;
    cfg.alpha1 = 2.0 * best_beta;  // HK-slot power scale
    cfg.beta = best_beta;
    if (best_beta > 0.0) {
        const RateResult inner = r_rs(ChannelParams(ch.a, 2.0 * best_beta * p));
        cfg.split_slot = *inner.split;
    } else {
        cfg.split_slot = PowerSplit{1.0, 1.0};
    }
    out.time_share = cfg;
    return out;
}

}  // namespace hksum
