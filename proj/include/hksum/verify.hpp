#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <string>
#include <vector>

#include "hksum/asymptotics.hpp"
#include "hksum/core_rates.hpp"
#include "hksum/format.hpp"
#include "hksum/optimizers.hpp"
#include "hksum/region_map.hpp"

namespace hksum {

// Frozen before the build from an independent high-precision sweep at
// p = 100: the observed maximum time-sharing advantage was ~0.005 bits, so
// 0.05 leaves an order of magnitude of headroom while staying far below
// anything that would contradict the "quite small" claim.
inline constexpr double kTsAdvantageBound = 0.05;

struct SuiteResult {
    std::string name;
    long samples = 0;
    long violations = 0;
    double worst = 0.0;  // largest residual/margin seen, suite-specific
    std::string note;

    SuiteResult() = default;
    explicit SuiteResult(std::string name_, long samples_ = 0)
        : name(std::move(name_)), samples(samples_) {}

    bool passed() const { return violations == 0; }
};

namespace detail {

inline double uniform(std::mt19937_64& rng, double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng);
}

inline double log_uniform(std::mt19937_64& rng, double lo, double hi) {
    return std::exp(uniform(rng, std::log(lo), std::log(hi)));
}

inline std::string point_str(double a, double p) {
    return "(a=" + format_sig(a) + ", p=" + format_sig(p) + ")";
}

}  // namespace detail

/// bound_cross <= bound_own over random (a, p, lambda1, lambda2).
inline SuiteResult verify_dominance(std::uint64_t seed, long samples) {
    std::mt19937_64 rng(seed + 0x1);
    SuiteResult res("dominance", samples);
    res.worst = -std::numeric_limits<double>::infinity();
    for (long i = 0; i < samples; ++i) {
        const double a = detail::uniform(rng, 1e-3, 1.0 - 1e-3);
        const double p = detail::log_uniform(rng, 1e-3, 1e6);
        const PowerSplit s{detail::uniform(rng, 0.0, 1.0), detail::uniform(rng, 0.0, 1.0)};
        const CommonRateBounds b = common_bounds(ChannelParams(a, p), s);
        const double margin = b.bound_cross - b.bound_own;
        if (margin > res.worst) {
            res.worst = margin;
            res.note = detail::point_str(a, p) + " split=(" + format_sig(s.lambda1) + "," +
                       format_sig(s.lambda2) + ")";
        }
        if (margin > 1e-12) ++res.violations;
    }
    return res;
}

/// For p >= (1-a)/a^2, omega via_cross never increases and via_joint never
/// decreases along a lambda grid.
inline SuiteResult verify_monotonicity(std::uint64_t seed, long samples) {
    std::mt19937_64 rng(seed + 0x2);
    SuiteResult res("monotonicity", samples);
    constexpr int kGrid = 64;
    constexpr double kTol = 1e-10;
    res.worst = -std::numeric_limits<double>::infinity();
    for (long i = 0; i < samples; ++i) {
        const double a = detail::uniform(rng, 0.01, 0.99);
        const double t1 = (1.0 - a) / (a * a);
        const double p = detail::log_uniform(rng, t1, std::max(10.0 * t1, 1e4));
        const ChannelParams ch(a, p);
        BoundPair prev = omega(ch, 0.0);
        for (int k = 1; k <= kGrid; ++k) {
            const BoundPair cur = omega(ch, static_cast<double>(k) / kGrid);
            const double viol = std::max(cur.via_cross - prev.via_cross,
                                         prev.via_joint - cur.via_joint);
            if (viol > res.worst) {
                res.worst = viol;
                res.note = detail::point_str(a, p) + " lambda=" + format_sig(double(k) / kGrid);
            }
            if (viol > kTol) ++res.violations;
            prev = cur;
        }
    }
    return res;
}

/// r_sym against a dense 1-D grid maximum of min(psi) (step 1e-5, zoomed),
/// plus a bit-exact recomputation of the split branch formulas.
inline SuiteResult verify_sym_oracle(std::uint64_t seed, long samples) {
    std::mt19937_64 rng(seed + 0x3);
    SuiteResult res("sym-oracle", samples);
    for (long i = 0; i < samples; ++i) {
        const double a = detail::uniform(rng, 0.01, 0.99);
        const double p = detail::log_uniform(rng, 0.1, 1e4);
        const ChannelParams ch(a, p);
        const RateResult sym = r_sym(ch);
        const GridMax1D oracle =
            grid_max_1d([&ch](double lam) { return psi(ch, lam).min(); }, 0.0, 1.0, 100001, 6);
        const double diff = std::abs(sym.rate - oracle.value);

        const SymRegime reg = sym_regime(ch);
        double lam_branch = 1.0;
        if (reg.tag == SymCase::Intersection) {
            lam_branch = (a * a * p + a - 1.0) / p;
        } else if (reg.tag == SymCase::Interior) {
            lam_branch = (1.0 - a) / ((1.0 + a) * a * p);
        }
        const bool lam_ok = sym.split->lambda1 == lam_branch;

        if (diff > res.worst) {
            res.worst = diff;
            res.note = detail::point_str(a, p);
        }
        if (diff > 1e-6 || !lam_ok) ++res.violations;
    }
    return res;
}

/// r_asym residuals at the returned root plus a dense 1-D grid maximum of
/// min(omega), over random (a, p) with p >= (1-a)/a^2.
inline SuiteResult verify_asym_oracle(std::uint64_t seed, long samples) {
    std::mt19937_64 rng(seed + 0x4);
    SuiteResult res("asym-oracle", samples);
    for (long i = 0; i < samples; ++i) {
        const double a = detail::uniform(rng, 0.01, 0.99);
        const double t1 = (1.0 - a) / (a * a);
        const double p = detail::log_uniform(rng, t1, 1e4);
        const ChannelParams ch(a, p);
        const RateResult asym = r_asym(ch);
        const double lam = asym.split->lambda2;

        const BoundPair b = omega(ch, lam);
        const double omega_gap = std::abs(b.via_cross - b.via_joint);
        // balance equation in linear form, relative residual
        const double lp = lam * p;
        const double lhs = std::sqrt((1.0 + lp) / (1.0 + a * lp)) * (1.0 + p + a * p);
        const double rhs = (1.0 + lp + a * p) * (1.0 + a * p) / (1.0 + a * lp);
        const double eq_res = std::abs(lhs - rhs) / rhs;

        const GridMax1D oracle =
            grid_max_1d([&ch](double l) { return omega(ch, l).min(); }, 0.0, 1.0, 100001, 6);
        const double diff = std::abs(asym.rate - oracle.value);

        const double worst_here = std::max({omega_gap, eq_res, diff});
        if (worst_here > res.worst) {
            res.worst = worst_here;
            res.note = detail::point_str(a, p);
        }
        if (omega_gap > 1e-9 || eq_res > 1e-9 || diff > 1e-6) ++res.violations;
    }
    return res;
}

/// Wherever a*p >= 1, r_etw equals the sum rate at the split 1/(a p) and
/// never beats r_sym.
inline SuiteResult verify_etw(std::uint64_t seed, long samples) {
    std::mt19937_64 rng(seed + 0x5);
    SuiteResult res("etw", samples);
    for (long i = 0; i < samples; ++i) {
        const double a = detail::uniform(rng, 0.01, 0.99);
        const double p = detail::log_uniform(rng, 1.0 / a, 1e4);
        const ChannelParams ch(a, p);
        const RateResult etw = r_etw(ch);
        const double lam = 1.0 / (a * p);
        const double direct = hk_sum_rate(ch, PowerSplit{lam, lam});
        const double subst = std::abs(etw.rate - direct);
        const double excess = etw.rate - r_sym(ch).rate;
        if (std::max(subst, excess) > res.worst) {
            res.worst = std::max(subst, excess);
            res.note = detail::point_str(a, p);
        }
        if (subst > 1e-9 || excess > 1e-9) ++res.violations;
    }
    return res;
}

/// Branch expressions of the symmetric closed form agree at both power
/// thresholds; the split formulas agree at the upper one.
inline SuiteResult verify_continuity(std::uint64_t seed, long samples) {
    std::mt19937_64 rng(seed + 0x6);
    SuiteResult res("continuity", samples);
    const auto case1 = [](double a, double p) { return 2.0 * gamma(p / (1.0 + a * p)); };
    const auto case2 = [](double a, double p) {
        const double lp = a * a * p + a - 1.0;
        return 2.0 * gamma((lp * (1.0 - a) + a * p) / (1.0 + a * lp));
    };
    const auto case3 = [](double a, double p) {
        return gamma((1.0 - a) / (2.0 * a)) + gamma(((1.0 + a) * (1.0 + a) * p - (1.0 - a)) / 2.0);
    };
    for (long i = 0; i < samples; ++i) {
        const double a = detail::uniform(rng, 0.01, 0.99);
        const double t1 = (1.0 - a) / (a * a);
        const double t2 = (1.0 - a * a * a) / (a * a * a * (1.0 + a));
        const double at_t1 = std::abs(case1(a, t1) - case2(a, t1));
        const double at_t2 = std::abs(case2(a, t2) - case3(a, t2));
        // both branch splits achieve the optimum exactly at t1
        const ChannelParams ch1(a, t1);
        const double rate_gap = std::abs(psi(ch1, 1.0).min() - psi(ch1, 0.0).min());
        const double lam_t2 =
            std::abs((a * a * t2 + a - 1.0) / t2 - (1.0 - a) / ((1.0 + a) * a * t2));
        const double worst_here = std::max({at_t1, at_t2, rate_gap, lam_t2});
        if (worst_here > res.worst) {
            res.worst = worst_here;
            res.note = "a=" + format_sig(a);
        }
        if (worst_here > 1e-9) ++res.violations;
    }
    return res;
}

/// Finite-p offsets at p = 1e8 against the closed-form offsets, and the
/// optimal splits against their high-SNR limits.
inline SuiteResult verify_asymptotes() {
    SuiteResult res("asymptote");
    constexpr double kP = 1e8;
    const double log2p = std::log2(kP);
    for (const double a : {0.1, 0.3, 0.5, 0.7, 0.9}) {
        const ChannelParams ch(a, kP);
        const RateResult sym = r_sym(ch);
        const RateResult asym = r_asym(ch);
        const double gaps[4] = {
            std::abs(sym.rate - log2p - delta_offset(Scheme::Sym, a)),
            std::abs(asym.rate - log2p - delta_offset(Scheme::Asym, a)),
            std::abs(r_etw(ch).rate - log2p - delta_offset(Scheme::Etw, a)),
            std::abs(r_orth(ch).rate - log2p - delta_offset(Scheme::Orth, a)),
        };
        const double lam_hat = std::pow(a, 1.5) / (1.0 + a - std::sqrt(a));
        const double lam_gap = std::abs(asym.split->lambda2 - lam_hat);
        const bool lam_sym_exact =
            sym.split->lambda1 == (1.0 - a) / ((1.0 + a) * a * kP);
        for (const double g : gaps) {
            ++res.samples;
            if (g > res.worst) {
                res.worst = g;
                res.note = "a=" + format_sig(a);
            }
            if (g > 1e-2) ++res.violations;
        }
        ++res.samples;
        if (lam_gap > 1e-3 || !lam_sym_exact) ++res.violations;
    }
    return res;
}

namespace detail {

struct ConjectureStats {
    long checked = 0;
    long violations = 0;
    double worst_abs = 0.0;   // max |brute - r_rs|
    double worst_excess = 0.0;  // max (brute - r_rs), the conjecture direction
    std::string worst_point;
};

inline void conjecture_check(const ChannelParams& ch, const Oracle2DSpec& spec,
                             ConjectureStats& st) {
    const double rrs = r_rs(ch).rate;
    const double brute = brute_force_rs(ch, spec).rate;
    const double diff = brute - rrs;
    ++st.checked;
    if (std::abs(diff) > st.worst_abs) {
        st.worst_abs = std::abs(diff);
        st.worst_point = point_str(ch.a, ch.p) + " diff=" + format_sig(diff, 6);
    }
    st.worst_excess = std::max(st.worst_excess, diff);
    if (std::abs(diff) > 1e-3) ++st.violations;
}

inline SuiteResult conjecture_result(const ConjectureStats& st) {
    SuiteResult res("conjecture", st.checked);
    res.violations = st.violations;
    res.worst = st.worst_abs;
    res.note = "max excess over r_rs = " + format_sig(st.worst_excess, 6) +
               (st.worst_point.empty() ? "" : "; worst at " + st.worst_point);
    return res;
}

}  // namespace detail

/// |brute_force_rs - r_rs| <= 1e-3 bits over seeded random (a, p). Any
/// excess of the oracle over r_rs is reported, never swallowed.
inline SuiteResult verify_conjecture(std::uint64_t seed, long samples, int steps = 1001,
                                     int refine = 4) {
    std::mt19937_64 rng(seed + 0x7);
    detail::ConjectureStats st;
    const Oracle2DSpec spec{steps, refine};
    for (long i = 0; i < samples; ++i) {
        const double a = detail::uniform(rng, 0.02, 0.98);
        const double p_db = detail::uniform(rng, 0.0, 40.0);
        detail::conjecture_check(ChannelParams(a, linear_from_db(p_db)), spec, st);
    }
    return detail::conjecture_result(st);
}

/// Same audit over a rectangular (a, p_db) grid.
inline SuiteResult verify_conjecture_grid(int a_steps, int p_steps, int steps = 1001,
                                          int refine = 4) {
    detail::ConjectureStats st;
    const Oracle2DSpec spec{steps, refine};
    for (int j = 0; j < p_steps; ++j) {
        const double p_db = 40.0 * j / std::max(1, p_steps - 1);
        for (int i = 0; i < a_steps; ++i) {
            const double a = 0.02 + (0.98 - 0.02) * i / std::max(1, a_steps - 1);
            detail::conjecture_check(ChannelParams(a, linear_from_db(p_db)), spec, st);
        }
    }
    return detail::conjecture_result(st);
}

/// Time-sharing never loses to the no-time-sharing schemes along a fixed-p
/// sweep, and its best advantage stays under the frozen bound.
inline SuiteResult verify_ts(double p, int sweep_points,
                             double advantage_bound = kTsAdvantageBound) {
    SuiteResult res("ts", sweep_points);
    double max_adv = 0.0;
    for (int i = 0; i < sweep_points; ++i) {
        const double a = 0.02 + (0.98 - 0.02) * i / std::max(1, sweep_points - 1);
        const ChannelParams ch(a, p);
        const double no_ts = std::max({r_sym(ch).rate, r_asym(ch).rate, r_orth(ch).rate});
        const double ts = r_ts(ch).rate;
        const double sason = r_sason(ch).rate;
        if (ts < no_ts - 1e-9 || sason < no_ts - 1e-9) ++res.violations;
        const double adv = std::max(ts - no_ts, sason - no_ts);
        if (adv > max_adv) {
            max_adv = adv;
            res.note = "max advantage " + format_sig(adv, 6) + " at a=" + format_sig(a, 6);
        }
    }
    res.worst = max_adv;
    if (max_adv >= advantage_bound) ++res.violations;
    return res;
}

/// The full battery at CLI-friendly sizes.
inline std::vector<SuiteResult> verify_all(std::uint64_t seed) {
    std::vector<SuiteResult> out;
    out.push_back(verify_dominance(seed, 10000));
    out.push_back(verify_monotonicity(seed, 200));
    out.push_back(verify_sym_oracle(seed, 200));
    out.push_back(verify_asym_oracle(seed, 200));
    out.push_back(verify_etw(seed, 500));
    out.push_back(verify_continuity(seed, 200));
    out.push_back(verify_asymptotes());
    out.push_back(verify_conjecture(seed, 60));
    out.push_back(verify_ts(100.0, 17));
    return out;
}

}  // namespace hksum
