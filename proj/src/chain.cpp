#include "inipre/chain.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "inipre/ini_model.hpp"

namespace inipre {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

std::complex<double> cis(double phase) {
    return {std::cos(phase), std::sin(phase)};
}

}  // namespace

TwiddleConvention TwiddleConvention::for_size(int size) {
    if (size <= 0) throw ConfigError("transform size must be positive");
    return {cis(-kTwoPi / size), cis(kTwoPi / size)};
}

std::pair<Spectrum, std::vector<Spectrum>> map_edge_symbols(const SymbolGrid& grid,
                                                            const MixedConfig& cfg) {
    if (!grid.matches(cfg))
        throw DimensionError("symbol grid does not match configuration");

    Spectrum low{Eigen::VectorXcd::Zero(cfg.n_fft), BandRef::low()};
    low.bins.segment(cfg.low_band_start(), cfg.p_edge) = grid.x0;

    std::vector<Spectrum> high;
    high.reserve(cfg.q_ratio);
    for (int q = 0; q < cfg.q_ratio; ++q) {
        Spectrum s{Eigen::VectorXcd::Zero(cfg.m_fft), BandRef::high_slot(q)};
        s.bins.segment(cfg.high_band_start(), cfg.k_edge) = grid.x1[q];
        high.push_back(std::move(s));
    }
    return {std::move(low), std::move(high)};
}

Eigen::VectorXcd idft_with_cp(const Eigen::VectorXcd& spec, int size, int cp) {
    if (spec.size() != size)
        throw DimensionError("spectrum length " + std::to_string(spec.size()) +
                             " does not match transform size " + std::to_string(size));
    if (cp < 0 || cp >= size)
        throw ConfigError("cp length must lie in [0, size)");

    Eigen::VectorXcd out(size + cp);
    for (int n = 0; n < size + cp; ++n) {
        std::complex<double> acc = 0.0;
        for (int k = 0; k < size; ++k)
            acc += spec[k] * cis(kTwoPi * k * (n - cp) / size);
        out[n] = acc / static_cast<double>(size);
    }
    return out;
}

Eigen::VectorXcd concat_high_numerology(const std::vector<Eigen::VectorXcd>& symbols,
                                        const MixedConfig& cfg) {
    if (static_cast<int>(symbols.size()) != cfg.q_ratio)
        throw DimensionError("expected " + std::to_string(cfg.q_ratio) +
                             " narrow-numerology symbols, got " +
                             std::to_string(symbols.size()));
    Eigen::VectorXcd out(cfg.frame_len());
    for (int q = 0; q < cfg.q_ratio; ++q) {
        if (symbols[q].size() != cfg.slot_len())
            throw DimensionError("slot " + std::to_string(q) + " has length " +
                                 std::to_string(symbols[q].size()) + ", expected " +
                                 std::to_string(cfg.slot_len()));
        out.segment(q * cfg.slot_len(), cfg.slot_len()) = symbols[q];
    }
    return out;
}

TimeFrame compose(const TimeFrame& y0, const TimeFrame& y1) {
    if (y0.samples.size() != y1.samples.size())
        throw DimensionError("frame lengths differ");
    return {y0.samples + y1.samples,
            y0.sample_rate_hz != 0.0 ? y0.sample_rate_hz : y1.sample_rate_hz};
}

Eigen::VectorXcd demod_low(const TimeFrame& frame, const MixedConfig& cfg) {
    if (frame.samples.size() != cfg.frame_len())
        throw DimensionError("frame has " + std::to_string(frame.samples.size()) +
                             " samples, expected " + std::to_string(cfg.frame_len()));
    const int n_fft = cfg.n_fft;
    Eigen::VectorXcd out(n_fft);
    for (int k = 0; k < n_fft; ++k) {
        std::complex<double> acc = 0.0;
        for (int n = 0; n < n_fft; ++n)
            acc += frame.samples[cfg.n_cp + n] * cis(-kTwoPi * k * n / n_fft);
        out[k] = acc;
    }
    return out;
}

Eigen::VectorXcd demod_high(const TimeFrame& frame, int q, const MixedConfig& cfg) {
    if (frame.samples.size() != cfg.frame_len())
        throw DimensionError("frame has " + std::to_string(frame.samples.size()) +
                             " samples, expected " + std::to_string(cfg.frame_len()));
    if (q < 0 || q >= cfg.q_ratio)
        throw ConfigError("slot index " + std::to_string(q) + " outside [0, Q)");
    const int m_fft = cfg.m_fft;
    const int start = q * cfg.slot_len() + cfg.m_cp;
    Eigen::VectorXcd out(m_fft);
    for (int l = 0; l < m_fft; ++l) {
        std::complex<double> acc = 0.0;
        for (int m = 0; m < m_fft; ++m)
            acc += frame.samples[start + m] * cis(-kTwoPi * l * m / m_fft);
        out[l] = acc;
    }
    return out;
}

TimeFrame build_frame(const SymbolGrid& grid, const MixedConfig& cfg,
                      const IniModel* pre_eq) {
    if (!grid.matches(cfg))
        throw DimensionError("symbol grid does not match configuration");
    const SymbolGrid tx = pre_eq ? pre_equalize(grid, *pre_eq) : grid;

    auto [low, high] = map_edge_symbols(tx, cfg);
    const Eigen::VectorXcd y0 = idft_with_cp(low.bins, cfg.n_fft, cfg.n_cp);

    std::vector<Eigen::VectorXcd> slots;
    slots.reserve(cfg.q_ratio);
    for (int q = 0; q < cfg.q_ratio; ++q)
        slots.push_back(idft_with_cp(high[q].bins, cfg.m_fft, cfg.m_cp));
    const Eigen::VectorXcd y1 = concat_high_numerology(slots, cfg);

    return {y0 + y1, cfg.sample_rate_hz()};
}

Eigen::VectorXcd demod_stacked(const TimeFrame& frame, const MixedConfig& cfg) {
    Eigen::VectorXcd out(cfg.stacked_dim());
    out.head(cfg.p_edge) =
        demod_low(frame, cfg).segment(cfg.low_band_start(), cfg.p_edge);
    for (int q = 0; q < cfg.q_ratio; ++q)
        out.segment(cfg.p_edge + q * cfg.k_edge, cfg.k_edge) =
            demod_high(frame, q, cfg).segment(cfg.high_band_start(), cfg.k_edge);
    return out;
}

StackedChain::StackedChain(const MixedConfig& cfg)
    : synthesis(Eigen::MatrixXcd::Zero(cfg.frame_len(), cfg.stacked_dim())),
      analysis(Eigen::MatrixXcd::Zero(cfg.stacked_dim(), cfg.frame_len())) {
    const int n_fft = cfg.n_fft;
    const int m_fft = cfg.m_fft;

    for (int c = 0; c < cfg.p_edge; ++c) {
        const int k = cfg.low_band_start() + c;
        for (int n = 0; n < cfg.frame_len(); ++n)
            synthesis(n, c) = cis(kTwoPi * k * (n - cfg.n_cp) / n_fft) /
                              static_cast<double>(n_fft);
    }
    for (int q = 0; q < cfg.q_ratio; ++q) {
        const int base = q * cfg.slot_len();
        for (int c = 0; c < cfg.k_edge; ++c) {
            const int l = cfg.high_band_start() + c;
            for (int m = 0; m < cfg.slot_len(); ++m)
                synthesis(base + m, cfg.p_edge + q * cfg.k_edge + c) =
                    cis(kTwoPi * l * (m - cfg.m_cp) / m_fft) /
                    static_cast<double>(m_fft);
        }
    }

    for (int r = 0; r < cfg.p_edge; ++r) {
        const int k = cfg.low_band_start() + r;
        for (int n = 0; n < n_fft; ++n)
            analysis(r, cfg.n_cp + n) = cis(-kTwoPi * k * n / n_fft);
    }
    for (int q = 0; q < cfg.q_ratio; ++q) {
        const int start = q * cfg.slot_len() + cfg.m_cp;
        for (int r = 0; r < cfg.k_edge; ++r) {
            const int l = cfg.high_band_start() + r;
            for (int m = 0; m < m_fft; ++m)
                analysis(cfg.p_edge + q * cfg.k_edge + r, start + m) =
                    cis(-kTwoPi * l * m / m_fft);
        }
    }
}

}  // namespace inipre
