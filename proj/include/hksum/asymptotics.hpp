#pragma once

#include <cmath>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "hksum/core_rates.hpp"
#include "hksum/optimizers.hpp"
#include "hksum/solvers.hpp"

namespace hksum {

/// High-SNR sum-rate offset lim_{p->inf} (R - log2 p) at fixed a.
/// Defined for the four fixed schemes; the formulas stay finite up to
/// a = 1, so the closed endpoint is accepted.
inline double delta_offset(Scheme scheme, double a) {
    if (scheme == Scheme::Orth) return 1.0;
    if (!(std::isfinite(a) && a > 0.0 && a <= 1.0)) {
        throw std::domain_error("delta_offset requires 0 < a <= 1");
    }
    const double ap1 = 1.0 + a;
    switch (scheme) {
        case Scheme::Sym:
            return std::log2(ap1 * ap1 * ap1 / (4.0 * a));
        case Scheme::Asym:
            return std::log2(ap1 / std::sqrt(a));
        case Scheme::Etw:
            return std::log2((2.0 * a + 1.0) * ap1 / (4.0 * a));
        default:
            throw std::domain_error("delta_offset: no offset formula for this scheme");
    }
}

// A sampled high-SNR offset curve; the a samples stay strictly inside
// (0, 1).
struct OffsetCurve {
    Scheme scheme;
    std::vector<std::pair<double, double>> values;  // (a, offset) pairs
};

inline OffsetCurve offset_curve(Scheme scheme, double a_min, double a_max, int steps) {
    if (!(a_min > 0.0 && a_min <= a_max && a_max < 1.0) || steps < 1) {
        throw std::domain_error("offset_curve: need 0 < a_min <= a_max < 1 and steps >= 1");
    }
    OffsetCurve curve{scheme, {}};
    curve.values.reserve(steps);
    for (int i = 0; i < steps; ++i) {
        const double a = steps == 1 ? a_min : a_min + (a_max - a_min) * i / (steps - 1);
        curve.values.emplace_back(a, delta_offset(scheme, a));
    }
    return curve;
}

/// Interference coefficient where two offset curves meet, to |dA - dB| <
/// 1e-12. Throws BracketingError when the curves never change order on
/// (0, 1), e.g. Asym vs Orth.
inline double crossover(Scheme scheme_a, Scheme scheme_b) {
    constexpr double kLo = 1e-4;
    constexpr double kHi = 1.0 - 1e-4;
    const auto diff = [&](double a) { return delta_offset(scheme_a, a) - delta_offset(scheme_b, a); };
    const double d_lo = diff(kLo);
    const double d_hi = diff(kHi);
    if ((d_lo > 0.0) == (d_hi > 0.0)) {
        throw BracketingError(std::string("crossover: offset curves of ") + scheme_name(scheme_a) +
                              " and " + scheme_name(scheme_b) + " do not cross in (0,1); " +
                              "difference is " + std::to_string(d_lo) + " at a=1e-4 and " +
                              std::to_string(d_hi) + " at a=1-1e-4");
    }
    return bisect_root(diff, kLo, kHi, 1e-12, 1e-15, 300);
}

/// Finite-p offsets R(a,p) - log2(p) along an ascending power list, for
/// convergence checks against delta_offset.
inline std::vector<std::pair<double, double>> offset_convergence(Scheme scheme, double a,
                                                                 std::span<const double> p_list) {
    double prev = 0.0;
    for (std::size_t i = 0; i < p_list.size(); ++i) {
        if (!(std::isfinite(p_list[i]) && p_list[i] > 0.0) || (i > 0 && p_list[i] <= prev)) {
            throw std::domain_error("offset_convergence: p_list must be ascending and positive");
        }
        prev = p_list[i];
    }
    std::vector<std::pair<double, double>> out;
    out.reserve(p_list.size());
    for (const double p : p_list) {
        const ChannelParams ch(a, p);
        double rate = 0.0;
        switch (scheme) {
            case Scheme::Sym: rate = r_sym(ch).rate; break;
            case Scheme::Asym: rate = r_asym(ch).rate; break;
            case Scheme::Etw: rate = r_etw(ch).rate; break;
            case Scheme::Orth: rate = r_orth(ch).rate; break;
            default: throw std::domain_error("offset_convergence: unsupported scheme");
        }
        out.emplace_back(p, rate - std::log2(p));
    }
    return out;
}

}  // namespace hksum
