#include "inipre/config.hpp"

#include <cmath>
#include <string>

namespace inipre {

namespace {

constexpr int kMuMin = 0;
constexpr int kMuMax = 2;  // FR1 numerologies

void require(bool ok, const std::string& msg) {
    if (!ok) throw ConfigError(msg);
}

}  // namespace

double MixedConfig::subcarrier_spacing_hz(int mu) const {
    return std::ldexp(scs_base_hz, mu);  // 2^mu * 15 kHz
}

MixedConfig make_mixed_config(int mu_low, int mu_high, int n_fft, int n_cp,
                              int p_edge, int k_edge) {
    require(mu_low >= kMuMin && mu_low <= kMuMax,
            "unsupported numerology mu_low=" + std::to_string(mu_low));
    require(mu_high >= kMuMin && mu_high <= kMuMax,
            "unsupported numerology mu_high=" + std::to_string(mu_high));
    require(mu_high > mu_low, "mu_high must exceed mu_low");

    const int q = 1 << (mu_high - mu_low);
    require(n_fft > 0, "n_fft must be positive");
    require(n_fft % (2 * q) == 0,
            "n_fft=" + std::to_string(n_fft) + " not divisible by 2*Q=" +
                std::to_string(2 * q));
    require(n_cp >= 0 && n_cp < n_fft, "n_cp must lie in [0, n_fft)");
    require(n_cp % q == 0, "n_cp=" + std::to_string(n_cp) +
                               " not divisible by Q=" + std::to_string(q));

    MixedConfig cfg;
    cfg.mu_low = mu_low;
    cfg.mu_high = mu_high;
    cfg.n_fft = n_fft;
    cfg.q_ratio = q;
    cfg.m_fft = n_fft / q;
    cfg.n_cp = n_cp;
    cfg.m_cp = n_cp / q;
    cfg.p_edge = p_edge;
    cfg.k_edge = k_edge;

    require(p_edge >= 1 && p_edge <= cfg.n_fft / 2,
            "p_edge must lie in [1, n_fft/2]");
    require(k_edge >= 1 && k_edge <= cfg.m_fft / 2,
            "k_edge must lie in [1, m_fft/2]");

    // Frame-length identity; follows from the divisibility constraints.
    if (cfg.q_ratio * (cfg.m_fft + cfg.m_cp) != cfg.n_fft + cfg.n_cp)
        throw ConfigError("frame-length identity Q*(M+M_cp) == N+N_cp violated");

    return cfg;
}

}  // namespace inipre
