#pragma once

#include <algorithm>
#include <cmath>
#include <optional>
#include <stdexcept>

#include "hksum/channel.hpp"

namespace hksum {

inline constexpr double kInvLn2 = 1.4426950408889634073599246810;  // 1/ln 2

/// Point-to-point Gaussian rate gamma(x) = log2(1 + x), in bits.
inline double gamma(double x) {
    if (!(std::isfinite(x) && x >= 0.0)) {
        throw std::domain_error("gamma(x) requires finite x >= 0");
    }
    return std::log1p(x) * kInvLn2;
}

// The three sum-rate constraints on the common messages, decoded first at
// both receivers with both private messages treated as noise. bound_cross
// never exceeds bound_own in the weak-interference regime, so the HK sum
// rate uses only bound_cross and bound_joint.
struct CommonRateBounds {
    double bound_own;    // w1 at rx1 plus w2 at rx2
    double bound_cross;  // w2 at rx1 plus w1 at rx2
    double bound_joint;  // half the joint-decoding bound at each receiver
};

inline double private_sum_rate(const ChannelParams& ch, const PowerSplit& split) {
    const PowerSplit s = clamp_split(split);
    const double u = s.lambda1 * ch.p;
    const double v = s.lambda2 * ch.p;
    return gamma(u / (1.0 + ch.a * v)) + gamma(v / (1.0 + ch.a * u));
}

inline CommonRateBounds common_bounds(const ChannelParams& ch, const PowerSplit& split) {
    const PowerSplit s = clamp_split(split);
    const double a = ch.a;
    const double p = ch.p;
    const double u = s.lambda1 * p;            // private power, user 1
    const double v = s.lambda2 * p;            // private power, user 2
    const double ub = (1.0 - s.lambda1) * p;   // common power, user 1
    const double vb = (1.0 - s.lambda2) * p;   // common power, user 2
    const double d1 = 1.0 + u + a * v;         // noise-plus-private at rx1
    const double d2 = 1.0 + v + a * u;         // noise-plus-private at rx2
    CommonRateBounds b;
    b.bound_own = gamma(ub / d1) + gamma(vb / d2);
    b.bound_cross = gamma(a * vb / d1) + gamma(a * ub / d2);
    b.bound_joint = 0.5 * (gamma((ub + a * vb) / d1) + gamma((vb + a * ub) / d2));
    return b;
}

/// HK sum rate at a fixed power split: private sum plus the binding
/// common-message bound.
inline double hk_sum_rate(const ChannelParams& ch, const PowerSplit& split) {
    const CommonRateBounds b = common_bounds(ch, split);
    return private_sum_rate(ch, split) + std::min(b.bound_cross, b.bound_joint);
}

// Product-form evaluation of the same sum rate: one log2 and one sqrt per
// call. Used by the dense grid scans; kept algebraically equivalent to
// hk_sum_rate (property-tested to 1e-12).
inline double hk_sum_rate_factored(const ChannelParams& ch, double lambda1, double lambda2) {
    const double a = ch.a;
    const double p = ch.p;
    const double u = lambda1 * p;
    const double v = lambda2 * p;
    const double d1 = 1.0 + u + a * v;
    const double d2 = 1.0 + v + a * u;
    const double n_cross = (1.0 + u + a * p) * (1.0 + v + a * p);
    const double n_joint = std::sqrt(d1 * d2) * (1.0 + p + a * p);
    return std::log2(std::min(n_cross, n_joint)) -
           std::log2(1.0 + a * u) - std::log2(1.0 + a * v);
}

// Two sum-rate expressions whose pointwise min is the HK sum rate on a
// restricted split family: one through the cross common-message bound,
// one through the joint bound.
struct BoundPair {
    double via_cross;
    double via_joint;
    double min() const { return std::min(via_cross, via_joint); }
};

/// Equal splits lambda1 = lambda2 = lambda. min() equals hk_sum_rate at
/// (lambda, lambda).
inline BoundPair psi(const ChannelParams& ch, double lambda) {
    const double lam = clamp_fraction(lambda);
    const double a = ch.a;
    const double p = ch.p;
    const double lp = lam * p;
    const double cp = (1.0 - lam) * p;
    const double d = 1.0 + a * lp;
    BoundPair out;
    out.via_cross = 2.0 * gamma((lp + a * cp) / d);
    out.via_joint = gamma(lp / d) + gamma((p + a * cp) / d);
    return out;
}

/// Common-only user 1 (lambda1 = 0), user 2 split lambda. min() equals
/// hk_sum_rate at (0, lambda).
inline BoundPair omega(const ChannelParams& ch, double lambda) {
    const double lam = clamp_fraction(lambda);
    const double a = ch.a;
    const double p = ch.p;
    const double lp = lam * p;
    const double cp = (1.0 - lam) * p;
    BoundPair out;
    out.via_cross = gamma(lp) + gamma(a * p / (1.0 + lp)) + gamma(a * cp / (1.0 + a * lp));
    out.via_joint = gamma(lp) + 0.5 * gamma((cp + a * p) / (1.0 + lp)) +
                    0.5 * gamma((p + a * cp) / (1.0 + a * lp));
    return out;
}

/// Unrestricted splits. min() equals hk_sum_rate; both components are
/// symmetric under a (lambda1, lambda2) swap.
inline BoundPair phi(const ChannelParams& ch, const PowerSplit& split) {
    const CommonRateBounds b = common_bounds(ch, split);
    const double priv = private_sum_rate(ch, split);
    return {priv + b.bound_cross, priv + b.bound_joint};
}

enum class Scheme { Sym, Asym, Orth, Etw, RateSplit, TimeShare, Sason, BruteForce };

inline const char* scheme_name(Scheme s) {
    switch (s) {
        case Scheme::Sym: return "sym";
        case Scheme::Asym: return "asym";
        case Scheme::Orth: return "orth";
        case Scheme::Etw: return "etw";
        case Scheme::RateSplit: return "rs";
        case Scheme::TimeShare: return "ts";
        case Scheme::Sason: return "sason";
        case Scheme::BruteForce: return "brute_force";
    }
    return "?";
}

// Two-slot equal-duration time sharing: user powers alpha1*p and alpha2*p
// in slot 1, mirrored in slot 2. alpha2 is derived from the per-user power
// constraint alpha1 + alpha2 = 2. beta is the four-slot scheme's HK slot
// fraction when that scheme produced the result.
struct TimeShareConfig {
    double alpha1 = 1.0;
    PowerSplit split_slot{1.0, 1.0};
    std::optional<double> beta;

    double alpha2() const { return 2.0 - alpha1; }
};

struct RateResult {
    double rate = 0.0;
    Scheme scheme = Scheme::Sym;
    std::optional<PowerSplit> split;
    std::optional<TimeShareConfig> time_share;
    // For RateSplit: which of the two candidate schemes achieved the max.
    std::optional<Scheme> basis;
    // Etw only: the defining split 1/(a p) exceeded 1 and was clamped.
    bool split_clamped = false;
};

}  // namespace hksum
