#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "inipre/chain.hpp"
#include "inipre/config.hpp"
#include "inipre/qam.hpp"

namespace inipre {

enum class ChannelModel { awgn, rayleigh_block };

ChannelModel channel_model_from_string(const std::string& name);
std::string to_string(ChannelModel model);

/// One measured BER point. ci95() is the binomial 95% half-width; under
/// block fading all bits of a frame share one fade, so cluster_se() (frames
/// as independent units) is the honest standard error and is what
/// consistency checks against theory should use.
struct BerPoint {
    int numerology = 0;       // mu index
    double ebn0_db = 0.0;
    long long bits = 0;
    long long errors = 0;
    long long frames = 0;
    double frame_err_sq_sum = 0.0;  // sum over frames of e_f^2

    double ber() const;
    double ci95() const;
    double cluster_se() const;
};

struct PaprCurve {
    std::vector<double> thresholds_db;
    std::vector<double> ccdf;
    long long frames = 0;

    /// Threshold where the curve crosses `level`, log-interpolated.
    double threshold_at(double level) const;
};

/// Hamming distance / length. Throws DimensionError on mismatch or empty.
double ber(const std::vector<std::uint8_t>& tx, const std::vector<std::uint8_t>& rx);

/// 10*log10(sum|r-x|^2 / sum|x|^2); -inf when the error energy is exactly 0.
/// Throws DimensionError on mismatch, ConfigError on all-zero reference.
double evm_db(const Eigen::VectorXcd& received, const Eigen::VectorXcd& reference);

/// Peak-to-average power over all frame samples, CP included.
double papr_db(const TimeFrame& frame);

/// CCDF(t) = fraction of values strictly greater than t.
PaprCurve ccdf(const std::vector<double>& values_db,
               const std::vector<double>& thresholds_db);

/// Post-DFT symbol SNR 1/(size * sigma^2) for the given band: the
/// unnormalized DFT leaves a unit-energy symbol at gain 1 while noise of
/// per-sample variance sigma^2 comes out with variance size * sigma^2.
double post_dft_snr(const MixedConfig& cfg, double noise_variance, BandRef band);

/// Time-domain noise variance that yields the requested per-numerology
/// Eb/N0 at the demodulator output.
double noise_variance_for_ebn0(const MixedConfig& cfg, double ebn0_db,
                               QamOrder order, BandRef band);

/// Closed-form bit error probability of Gray square QAM, exact for both the
/// AWGN channel and flat Rayleigh fading with average per-bit SNR ebn0_db.
double theoretical_ber(QamOrder order, double ebn0_db, ChannelModel channel);

}  // namespace inipre
