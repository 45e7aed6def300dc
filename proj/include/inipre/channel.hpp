#pragma once

#include <complex>
#include <cstdint>
#include <random>
#include <utility>

#include "inipre/chain.hpp"

namespace inipre {

/// Deterministic substreamed RNG: identical (seed, stream, substream) give
/// identical draws regardless of what other streams were consumed, so
/// per-frame streams make parallel Monte Carlo schedule-independent.
class RngStream {
public:
    explicit RngStream(std::uint64_t seed, std::uint64_t stream = 0,
                       std::uint64_t substream = 0);

    std::uint64_t next_u64();
    double uniform();   // [0, 1)
    double gaussian();  // standard normal, Box-Muller
    std::complex<double> complex_gaussian(double total_variance);

private:
    std::mt19937_64 engine_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

/// Single-tap channel gain for one composite frame, E|h|^2 = 1.
struct FadeRealization {
    std::complex<double> h{1.0, 0.0};
};

/// Adds circularly-symmetric complex Gaussian noise, `noise_variance` total
/// per complex sample. Throws ConfigError for negative variance.
TimeFrame awgn(const TimeFrame& frame, double noise_variance, RngStream& rng);

/// Scales the whole frame by one complex Gaussian gain h with E|h|^2 = 1 and
/// returns h for receiver-side equalization.
std::pair<TimeFrame, FadeRealization> rayleigh_block(const TimeFrame& frame,
                                                     RngStream& rng);

/// Perfect-CSI zero forcing: divides every bin by h. Throws ConfigError on
/// h == 0.
Eigen::VectorXcd one_tap_equalize(const Eigen::VectorXcd& demodulated,
                                  const FadeRealization& fade);

}  // namespace inipre
