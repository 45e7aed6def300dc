#include "inipre/channel.hpp"

#include <cmath>
#include <numbers>

namespace inipre {

namespace {

// splitmix64; mixes (seed, stream, substream) into one engine seed so that
// distinct identifiers give statistically independent streams.
std::uint64_t mix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

}  // namespace

RngStream::RngStream(std::uint64_t seed, std::uint64_t stream, std::uint64_t substream)
    : engine_(mix64(mix64(mix64(seed) ^ stream) ^ substream)) {}

std::uint64_t RngStream::next_u64() { return engine_(); }

double RngStream::uniform() {
    // 53 random bits -> [0, 1)
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

double RngStream::gaussian() {
    if (have_spare_) {
        have_spare_ = false;
        return spare_;
    }
    // Box-Muller; u clamped away from 0 so log stays finite
    double u = uniform();
    if (u <= 0.0) u = 0x1.0p-53;
    const double r = std::sqrt(-2.0 * std::log(u));
    const double phi = 2.0 * std::numbers::pi * uniform();
    spare_ = r * std::sin(phi);
    have_spare_ = true;
    return r * std::cos(phi);
}

std::complex<double> RngStream::complex_gaussian(double total_variance) {
    const double s = std::sqrt(total_variance / 2.0);
    const double re = gaussian();
    const double im = gaussian();
    return {s * re, s * im};
}

TimeFrame awgn(const TimeFrame& frame, double noise_variance, RngStream& rng) {
    if (noise_variance < 0.0)
        throw ConfigError("noise variance must be non-negative");
    TimeFrame out = frame;
    if (noise_variance == 0.0) return out;
    for (Eigen::Index i = 0; i < out.samples.size(); ++i)
        out.samples[i] += rng.complex_gaussian(noise_variance);
    return out;
}

std::pair<TimeFrame, FadeRealization> rayleigh_block(const TimeFrame& frame,
                                                     RngStream& rng) {
    const FadeRealization fade{rng.complex_gaussian(1.0)};
    return {TimeFrame{frame.samples * fade.h, frame.sample_rate_hz}, fade};
}

Eigen::VectorXcd one_tap_equalize(const Eigen::VectorXcd& demodulated,
                                  const FadeRealization& fade) {
    if (fade.h == std::complex<double>(0.0, 0.0))
        throw ConfigError("cannot equalize a zero channel gain");
    return demodulated / fade.h;
}

}  // namespace inipre
