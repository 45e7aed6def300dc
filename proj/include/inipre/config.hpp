#pragma once

#include <stdexcept>
#include <string>

namespace inipre {

struct ConfigError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct DimensionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct NumericalError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Frame-structure parameters for two time/frequency-multiplexed numerologies.
///
/// The wide-symbol numerology (index mu_low) occupies one n_fft-point symbol
/// with an n_cp-sample cyclic prefix per composite frame; the narrow-symbol
/// numerology (mu_high) fits q_ratio symbols of m_fft + m_cp samples into the
/// same frame, so q_ratio * (m_fft + m_cp) == n_fft + n_cp always holds.
/// Active subcarriers sit back to back at the band boundary: the last p_edge
/// bins of the lower half-spectrum of mu_low and the first k_edge bins of the
/// upper half-spectrum of mu_high.
struct MixedConfig {
    int mu_low = 0;
    int mu_high = 1;
    int n_fft = 0;    // N
    int m_fft = 0;    // M = N / Q
    int q_ratio = 0;  // Q = 2^(mu_high - mu_low)
    int n_cp = 0;     // N_cp
    int m_cp = 0;     // M_cp = N_cp / Q
    int p_edge = 0;   // active mu_low bins: N/2-P .. N/2-1
    int k_edge = 0;   // active mu_high bins: M/2 .. M/2+K-1
    double scs_base_hz = 15e3;

    int frame_len() const { return n_fft + n_cp; }
    int slot_len() const { return m_fft + m_cp; }
    int stacked_dim() const { return p_edge + q_ratio * k_edge; }
    int low_band_start() const { return n_fft / 2 - p_edge; }
    int high_band_start() const { return m_fft / 2; }
    double subcarrier_spacing_hz(int mu) const;
    double sample_rate_hz() const { return n_fft * subcarrier_spacing_hz(mu_low); }
};

/// Validates and derives a MixedConfig. Throws ConfigError on any violated
/// invariant (divisibility, band overflow, unsupported numerology index).
MixedConfig make_mixed_config(int mu_low, int mu_high, int n_fft, int n_cp,
                              int p_edge, int k_edge);

}  // namespace inipre
