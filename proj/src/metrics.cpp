#include "inipre/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <string>

namespace inipre {

ChannelModel channel_model_from_string(const std::string& name) {
    if (name == "awgn") return ChannelModel::awgn;
    if (name == "rayleigh_block") return ChannelModel::rayleigh_block;
    throw ConfigError("unknown channel model '" + name + "'");
}

std::string to_string(ChannelModel model) {
    return model == ChannelModel::awgn ? "awgn" : "rayleigh_block";
}

double BerPoint::ber() const {
    return bits > 0 ? static_cast<double>(errors) / static_cast<double>(bits) : 0.0;
}

double BerPoint::ci95() const {
    if (bits <= 0) return 0.0;
    const double p = ber();
    return 1.96 * std::sqrt(p * (1.0 - p) / static_cast<double>(bits));
}

double BerPoint::cluster_se() const {
    // Frames are the independent units: one fade per frame correlates all of
    // its bit errors, so SE^2 = sum_f (e_f - p*n_f)^2 / (sum_f n_f)^2.
    // With n_f constant this reduces to sum e_f^2 - (sum e_f)^2 / F.
    if (bits <= 0 || frames <= 0) return 0.0;
    const double e_sum = static_cast<double>(errors);
    double ss = frame_err_sq_sum - e_sum * e_sum / static_cast<double>(frames);
    ss = std::max(ss, 0.0);
    return std::sqrt(ss) / static_cast<double>(bits);
}

double PaprCurve::threshold_at(double level) const {
    for (std::size_t i = 0; i < ccdf.size(); ++i) {
        if (ccdf[i] <= level) {
            if (i == 0 || ccdf[i] == ccdf[i - 1]) return thresholds_db[i];
            if (ccdf[i] <= 0.0) return thresholds_db[i];
            // log-linear interpolation between the bracketing grid points
            const double y0 = std::log(ccdf[i - 1]);
            const double y1 = std::log(ccdf[i]);
            const double t = (std::log(level) - y0) / (y1 - y0);
            return thresholds_db[i - 1] + t * (thresholds_db[i] - thresholds_db[i - 1]);
        }
    }
    return thresholds_db.empty() ? 0.0 : thresholds_db.back();
}

double ber(const std::vector<std::uint8_t>& tx, const std::vector<std::uint8_t>& rx) {
    if (tx.empty()) throw DimensionError("empty bit vectors");
    if (tx.size() != rx.size()) throw DimensionError("bit vector lengths differ");
    std::size_t errors = 0;
    for (std::size_t i = 0; i < tx.size(); ++i)
        errors += tx[i] != rx[i];
    return static_cast<double>(errors) / static_cast<double>(tx.size());
}

double evm_db(const Eigen::VectorXcd& received, const Eigen::VectorXcd& reference) {
    if (received.size() == 0 || received.size() != reference.size())
        throw DimensionError("EVM requires equal nonzero lengths");
    const double ref_energy = reference.squaredNorm();
    if (ref_energy == 0.0) throw ConfigError("EVM reference is all zero");
    const double err_energy = (received - reference).squaredNorm();
    if (err_energy == 0.0) return -std::numeric_limits<double>::infinity();
    return 10.0 * std::log10(err_energy / ref_energy);
}

double papr_db(const TimeFrame& frame) {
    if (frame.samples.size() == 0) throw DimensionError("empty frame");
    double peak = 0.0, sum = 0.0;
    for (Eigen::Index i = 0; i < frame.samples.size(); ++i) {
        const double p = std::norm(frame.samples[i]);
        peak = std::max(peak, p);
        sum += p;
    }
    if (sum == 0.0) throw ConfigError("PAPR of an all-zero frame is undefined");
    const double mean = sum / static_cast<double>(frame.samples.size());
    return 10.0 * std::log10(peak / mean);
}

PaprCurve ccdf(const std::vector<double>& values_db,
               const std::vector<double>& thresholds_db) {
    if (values_db.empty()) throw DimensionError("CCDF of an empty sample set");
    PaprCurve curve;
    curve.thresholds_db = thresholds_db;
    curve.frames = static_cast<long long>(values_db.size());
    curve.ccdf.reserve(thresholds_db.size());
    for (double t : thresholds_db) {
        std::size_t above = 0;
        for (double v : values_db) above += v > t;
        curve.ccdf.push_back(static_cast<double>(above) /
                             static_cast<double>(values_db.size()));
    }
    return curve;
}

double post_dft_snr(const MixedConfig& cfg, double noise_variance, BandRef band) {
    if (noise_variance <= 0.0) throw ConfigError("noise variance must be positive");
    const int size = band.high ? cfg.m_fft : cfg.n_fft;
    return 1.0 / (size * noise_variance);
}

double noise_variance_for_ebn0(const MixedConfig& cfg, double ebn0_db,
                               QamOrder order, BandRef band) {
    const double ebn0 = std::pow(10.0, ebn0_db / 10.0);
    const double symbol_snr = ebn0 * order.bits_per_symbol();
    const int size = band.high ? cfg.m_fft : cfg.n_fft;
    return 1.0 / (size * symbol_snr);
}

namespace {

// Exact Gray-QAM bit error probability as a weighted sum of erfc terms;
// the i-th term crosses (2i+1) half-distances. Weights follow the standard
// general expression for square constellations.
double qam_ber_erfc_sum(int order, const std::function<double(double)>& erfc_term) {
    const int sq = static_cast<int>(std::lround(std::sqrt(order)));
    int half_bits = 0;
    while ((1 << half_bits) < sq) ++half_bits;

    double total = 0.0;
    for (int k = 1; k <= half_bits; ++k) {
        const int count = ((sq << k) - sq) >> k;  // (1 - 2^-k) * sq
        for (int i = 0; i < count; ++i) {
            const double ratio = static_cast<double>(i) * (1 << (k - 1)) / sq;
            const double sign = (static_cast<int>(std::floor(ratio)) % 2 == 0) ? 1.0 : -1.0;
            const double weight = (1 << (k - 1)) - std::floor(ratio + 0.5);
            const double a = 3.0 * (2 * i + 1) * (2 * i + 1) / (2.0 * (order - 1));
            total += sign * weight * erfc_term(a);
        }
    }
    return total / (sq * half_bits);
}

}  // namespace

double theoretical_ber(QamOrder order, double ebn0_db, ChannelModel channel) {
    const double gamma_s =
        std::pow(10.0, ebn0_db / 10.0) * order.bits_per_symbol();
    if (channel == ChannelModel::awgn) {
        return qam_ber_erfc_sum(order.order, [gamma_s](double a) {
            return std::erfc(std::sqrt(a * gamma_s));
        });
    }
    // Flat Rayleigh with mean symbol SNR gamma_s: E[erfc(sqrt(a*g))] over
    // g ~ Exp(gamma_s) is 1 - sqrt(a*gamma_s / (1 + a*gamma_s)).
    return qam_ber_erfc_sum(order.order, [gamma_s](double a) {
        const double g = a * gamma_s;
        return 1.0 - std::sqrt(g / (1.0 + g));
    });
}

}  // namespace inipre
