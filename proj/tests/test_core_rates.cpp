#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include "hksum/core_rates.hpp"

using hksum::BoundPair;
using hksum::ChannelParams;
using hksum::CommonRateBounds;
using hksum::PowerSplit;

namespace {

constexpr std::uint64_t kSeed = 0xC0FFEE;

double rand_in(std::mt19937_64& rng, double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng);
}

ChannelParams random_channel(std::mt19937_64& rng) {
    const double a = rand_in(rng, 1e-3, 1.0 - 1e-3);
    const double p = std::exp(rand_in(rng, std::log(1e-3), std::log(1e6)));
    return {a, p};
}

}  // namespace

TEST_CASE("gamma basics") {
    CHECK(hksum::gamma(0.0) == 0.0);
    CHECK(hksum::gamma(1.0) == 1.0);
    CHECK(hksum::gamma(3.0) == 2.0);
    CHECK_THROWS_AS(hksum::gamma(-1e-9), std::domain_error);
    CHECK_THROWS_AS(hksum::gamma(std::numeric_limits<double>::infinity()), std::domain_error);
    CHECK_THROWS_AS(hksum::gamma(std::nan("")), std::domain_error);
}

TEST_CASE("gamma is strictly increasing") {
    std::mt19937_64 rng(kSeed);
    for (int i = 0; i < 1000; ++i) {
        const double x = std::exp(rand_in(rng, -30.0, 30.0));
        const double y = x * (1.0 + rand_in(rng, 1e-9, 1.0));
        CHECK(hksum::gamma(x) < hksum::gamma(y));
    }
    // small-argument precision: log1p keeps gamma(x) ~ x/ln2 exact-ish
    CHECK(hksum::gamma(1e-15) == Catch::Approx(1e-15 * hksum::kInvLn2).epsilon(1e-12));
}

TEST_CASE("channel and split validation") {
    CHECK_THROWS_AS(ChannelParams(1.0, 10.0), std::domain_error);
    CHECK_THROWS_AS(ChannelParams(0.0, 10.0), std::domain_error);
    CHECK_THROWS_AS(ChannelParams(1.2, 10.0), std::domain_error);
    CHECK_THROWS_AS(ChannelParams(0.5, 0.0), std::domain_error);
    CHECK_THROWS_AS(ChannelParams(0.5, std::numeric_limits<double>::infinity()),
                    std::domain_error);
    CHECK_THROWS_AS(hksum::clamp_fraction(-1e-6), std::domain_error);
    CHECK_THROWS_AS(hksum::clamp_fraction(1.0 + 1e-6), std::domain_error);
    CHECK(hksum::clamp_fraction(-1e-13) == 0.0);
    CHECK(hksum::clamp_fraction(1e-13) == 0.0);
    CHECK(hksum::clamp_fraction(1.0 - 1e-13) == 1.0);
    CHECK(hksum::clamp_fraction(1.0 + 1e-13) == 1.0);
}

TEST_CASE("hk_sum_rate corner splits") {
    std::mt19937_64 rng(kSeed + 1);
    for (int i = 0; i < 200; ++i) {
        const ChannelParams ch = random_channel(rng);
        // all-private: common terms vanish
        CHECK(hksum::hk_sum_rate(ch, {1.0, 1.0}) ==
              Catch::Approx(2.0 * hksum::gamma(ch.p / (1.0 + ch.a * ch.p))).margin(1e-12));
        // all-common
        const double expected0 = std::min(2.0 * hksum::gamma(ch.a * ch.p),
                                          hksum::gamma((1.0 + ch.a) * ch.p));
        CHECK(hksum::hk_sum_rate(ch, {0.0, 0.0}) == Catch::Approx(expected0).margin(1e-12));
    }
}

TEST_CASE("hk_sum_rate frozen value") {
    // high-precision evaluation: 2*log2(1 + 100/6)
    const ChannelParams ch(0.05, 100.0);
    CHECK(hksum::hk_sum_rate(ch, {1.0, 1.0}) == Catch::Approx(8.285915907684086).margin(1e-12));
}

TEST_CASE("hk_sum_rate swap symmetry and bound consistency") {
    std::mt19937_64 rng(kSeed + 2);
    for (int i = 0; i < 2000; ++i) {
        const ChannelParams ch = random_channel(rng);
        const double l1 = rand_in(rng, 0.0, 1.0);
        const double l2 = rand_in(rng, 0.0, 1.0);
        const double fwd = hksum::hk_sum_rate(ch, {l1, l2});
        const double rev = hksum::hk_sum_rate(ch, {l2, l1});
        CHECK(std::abs(fwd - rev) < 1e-12);

        const CommonRateBounds b = hksum::common_bounds(ch, {l1, l2});
        const double composed = hksum::private_sum_rate(ch, {l1, l2}) +
                                std::min(b.bound_cross, b.bound_joint);
        CHECK(std::abs(fwd - composed) < 1e-12);
    }
}

TEST_CASE("common_bounds at the all-private and all-common corners") {
    std::mt19937_64 rng(kSeed + 3);
    for (int i = 0; i < 100; ++i) {
        const CommonRateBounds b = hksum::common_bounds(random_channel(rng), {1.0, 1.0});
        CHECK(b.bound_own == 0.0);
        CHECK(b.bound_cross == 0.0);
        CHECK(b.bound_joint == 0.0);
    }
    const CommonRateBounds b = hksum::common_bounds(ChannelParams(0.5, 100.0), {0.0, 0.0});
    CHECK(b.bound_own == Catch::Approx(13.316422965503589).margin(1e-12));    // 2*gamma(100)
    CHECK(b.bound_cross == Catch::Approx(11.344850683942991).margin(1e-12));  // 2*gamma(50)
    CHECK(b.bound_joint == Catch::Approx(7.238404739325079).margin(1e-12));   // gamma(150)
}

TEST_CASE("cross bound dominates own bound in weak interference") {
    std::mt19937_64 rng(kSeed + 4);
    for (int i = 0; i < 10000; ++i) {
        const ChannelParams ch = random_channel(rng);
        const PowerSplit s{rand_in(rng, 0.0, 1.0), rand_in(rng, 0.0, 1.0)};
        const CommonRateBounds b = hksum::common_bounds(ch, s);
        CHECK(b.bound_cross <= b.bound_own + 1e-12);
        CHECK(b.bound_own >= 0.0);
        CHECK(b.bound_cross >= 0.0);
        CHECK(b.bound_joint >= 0.0);
    }
}

TEST_CASE("psi endpoints and equal-split identity") {
    std::mt19937_64 rng(kSeed + 5);
    for (int i = 0; i < 500; ++i) {
        const ChannelParams ch = random_channel(rng);
        const BoundPair at1 = hksum::psi(ch, 1.0);
        const double full_private = 2.0 * hksum::gamma(ch.p / (1.0 + ch.a * ch.p));
        CHECK(at1.via_cross == Catch::Approx(full_private).margin(1e-12));
        CHECK(at1.via_joint == Catch::Approx(full_private).margin(1e-12));

        const BoundPair at0 = hksum::psi(ch, 0.0);
        CHECK(at0.via_cross == Catch::Approx(2.0 * hksum::gamma(ch.a * ch.p)).margin(1e-12));
        CHECK(at0.via_joint == Catch::Approx(hksum::gamma((1.0 + ch.a) * ch.p)).margin(1e-12));

        const double lam = rand_in(rng, 0.0, 1.0);
        CHECK(std::abs(hksum::psi(ch, lam).min() - hksum::hk_sum_rate(ch, {lam, lam})) < 1e-12);
    }
    // spec-pinned point on the identity
    const ChannelParams ch(0.5, 100.0);
    CHECK(std::abs(hksum::psi(ch, 0.00667).min() - hksum::hk_sum_rate(ch, {0.00667, 0.00667})) <
          1e-12);
}

TEST_CASE("omega endpoints and one-sided identity") {
    std::mt19937_64 rng(kSeed + 6);
    for (int i = 0; i < 500; ++i) {
        const ChannelParams ch = random_channel(rng);
        const double a = ch.a;
        const double p = ch.p;
        const BoundPair at1 = hksum::omega(ch, 1.0);
        CHECK(at1.via_cross ==
              Catch::Approx(hksum::gamma(p) + hksum::gamma(a * p / (1.0 + p))).margin(1e-12));
        CHECK(at1.via_joint ==
              Catch::Approx(hksum::gamma(p) + 0.5 * hksum::gamma(a * p / (1.0 + p)) +
                            0.5 * hksum::gamma(p / (1.0 + a * p)))
                  .margin(1e-12));

        const BoundPair at0 = hksum::omega(ch, 0.0);
        CHECK(at0.via_cross == Catch::Approx(2.0 * hksum::gamma(a * p)).margin(1e-12));
        CHECK(at0.via_joint == Catch::Approx(hksum::gamma((1.0 + a) * p)).margin(1e-12));

        const double lam = rand_in(rng, 0.0, 1.0);
        CHECK(std::abs(hksum::omega(ch, lam).min() - hksum::hk_sum_rate(ch, {0.0, lam})) < 1e-12);
    }
    const ChannelParams ch(0.5, 100.0);
    CHECK(std::abs(hksum::omega(ch, 0.3).min() - hksum::hk_sum_rate(ch, {0.0, 0.3})) < 1e-12);
}

TEST_CASE("phi restrictions and swap symmetry") {
    std::mt19937_64 rng(kSeed + 7);
    for (int i = 0; i < 500; ++i) {
        const ChannelParams ch = random_channel(rng);
        const double x = rand_in(rng, 0.0, 1.0);
        const double y = rand_in(rng, 0.0, 1.0);

        const BoundPair fwd = hksum::phi(ch, {x, y});
        const BoundPair rev = hksum::phi(ch, {y, x});
        CHECK(std::abs(fwd.via_cross - rev.via_cross) < 1e-12);
        CHECK(std::abs(fwd.via_joint - rev.via_joint) < 1e-12);

        CHECK(std::abs(fwd.min() - hksum::hk_sum_rate(ch, {x, y})) < 1e-12);
        CHECK(std::abs(hksum::phi(ch, {x, x}).min() - hksum::psi(ch, x).min()) < 1e-12);
        CHECK(std::abs(hksum::phi(ch, {0.0, y}).min() - hksum::omega(ch, y).min()) < 1e-12);
    }
}

TEST_CASE("factored product form matches the log1p form") {
    std::mt19937_64 rng(kSeed + 8);
    for (int i = 0; i < 5000; ++i) {
        const ChannelParams ch = random_channel(rng);
        const double l1 = rand_in(rng, 0.0, 1.0);
        const double l2 = rand_in(rng, 0.0, 1.0);
        const double fast = hksum::hk_sum_rate_factored(ch, l1, l2);
        const double slow = hksum::hk_sum_rate(ch, {l1, l2});
        CHECK(std::abs(fast - slow) < 1e-11 * std::max(1.0, slow));
    }
}
