#pragma once

#include <cmath>
#include <stdexcept>
#include <string>

namespace hksum {

// The symmetric two-user Gaussian interference channel in standard form:
// unit direct gains and noise, cross gain sqrt(a), per-user SNR p.
// Weak interference only: 0 < a < 1.
struct ChannelParams {
    double a;
    double p;

    ChannelParams(double a_, double p_) : a(a_), p(p_) {
        if (!(std::isfinite(a) && a > 0.0 && a < 1.0)) {
            throw std::domain_error(
                "interference coefficient a = " + std::to_string(a_) +
                " is outside the weak-interference range 0 < a < 1 "
                "(strong interference a >= 1 is excluded)");
        }
        if (!(std::isfinite(p) && p > 0.0)) {
            throw std::domain_error("transmit SNR p must be positive and finite, got " +
                                    std::to_string(p_));
        }
    }

    double snr() const { return p; }
    double inr() const { return a * p; }
};

// Private-message power fractions; common power is (1 - lambda_i) * p.
struct PowerSplit {
    double lambda1;
    double lambda2;
};

// Values within 1e-12 of a boundary collapse onto it so that common-message
// numerators cannot go negative through rounding.
inline double clamp_fraction(double lambda) {
    constexpr double kSnap = 1e-12;
    if (std::abs(lambda) <= kSnap) return 0.0;
    if (std::abs(lambda - 1.0) <= kSnap) return 1.0;
    if (!(lambda >= 0.0 && lambda <= 1.0)) {
        throw std::domain_error("power split fraction must lie in [0,1], got " +
                                std::to_string(lambda));
    }
    return lambda;
}

inline PowerSplit clamp_split(const PowerSplit& s) {
    return {clamp_fraction(s.lambda1), clamp_fraction(s.lambda2)};
}

inline double db_from_linear(double x) { return 10.0 * std::log10(x); }
inline double linear_from_db(double x_db) { return std::pow(10.0, x_db / 10.0); }

}  // namespace hksum
