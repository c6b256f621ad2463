// Minimal library usage: best strategy and achievable sum rates at one
// operating point, plus how far the 2-D search agrees with the closed
// forms there.

#include <cstdio>

#include "hksum/hksum.hpp"

int main(int argc, char** argv) {
    const double a = argc > 1 ? std::atof(argv[1]) : 0.3;
    const double snr_db = argc > 2 ? std::atof(argv[2]) : 20.0;

    const hksum::ChannelParams ch(a, hksum::linear_from_db(snr_db));
    const auto rs = hksum::r_rs(ch);
    const auto oracle = hksum::brute_force_rs(ch, {1001, 4});

    std::printf("a = %g, SNR = %g dB, INR = %.3f dB\n", a, snr_db,
                hksum::db_from_linear(ch.inr()));
    std::printf("best split strategy: %s (%.6f bits/use)\n",
                hksum::region_name(hksum::classify(ch)), rs.rate);
    std::printf("orthogonal baseline: %.6f bits/use\n", hksum::r_orth(ch).rate);
    std::printf("2-D grid search:     %.6f bits/use at (%.5f, %.5f)\n", oracle.rate,
                oracle.split->lambda1, oracle.split->lambda2);
    std::printf("two-slot time sharing adds %.6f bits\n", hksum::r_ts(ch).rate - rs.rate);
    return 0;
}
