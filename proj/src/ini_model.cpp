#include "inipre/ini_model.hpp"

#include <Eigen/SVD>
#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

namespace inipre {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

std::complex<double> cis(double phase) {
    return {std::cos(phase), std::sin(phase)};
}

std::atomic<long> g_inversions{0};

void check_cross_pair(BandRef victim, BandRef interferer) {
    if (victim.high == interferer.high)
        throw ConfigError("coupling blocks are defined between different numerologies");
}

void check_slot(const MixedConfig& cfg, BandRef band) {
    if (band.high && (band.slot < 0 || band.slot >= cfg.q_ratio))
        throw ConfigError("slot index " + std::to_string(band.slot) + " outside [0, Q)");
}

}  // namespace

std::complex<double> low_to_high_coupling(const MixedConfig& cfg, int slot,
                                          int victim_bin, int interferer_bin) {
    check_slot(cfg, BandRef::high_slot(slot));
    // Slot `slot`'s data window demodulates the wide-numerology waveform;
    // global sample of local index s is q(M+M_cp) + M_cp + s.
    const int base = slot * cfg.slot_len() + cfg.m_cp;
    std::complex<double> acc = 0.0;
    for (int s = 0; s < cfg.m_fft; ++s)
        acc += cis(kTwoPi * interferer_bin * (base + s - cfg.n_cp) / cfg.n_fft) *
               cis(-kTwoPi * victim_bin * s / cfg.m_fft);
    return acc / static_cast<double>(cfg.n_fft);
}

std::complex<double> high_to_low_coupling(const MixedConfig& cfg, int slot,
                                          int victim_bin, int interferer_bin) {
    check_slot(cfg, BandRef::high_slot(slot));
    // Overlap of the wide data window [N_cp, N_cp+N) with the slot's support
    // [q(M+M_cp), (q+1)(M+M_cp)). For Q=2 this leaves samples 2*M_cp ..
    // M+M_cp-1 of slot 0 and the whole of slot 1, CP included.
    const int slot_start = slot * cfg.slot_len();
    const int lo = std::max(cfg.n_cp, slot_start);
    const int hi = std::min(cfg.frame_len(), slot_start + cfg.slot_len());
    std::complex<double> acc = 0.0;
    for (int n = lo; n < hi; ++n)
        acc += cis(kTwoPi * interferer_bin * (n - slot_start - cfg.m_cp) / cfg.m_fft) *
               cis(-kTwoPi * victim_bin * (n - cfg.n_cp) / cfg.n_fft);
    return acc / static_cast<double>(cfg.m_fft);
}

IniBlock w_block_closed_form(BandRef victim, BandRef interferer,
                             const MixedConfig& cfg) {
    check_cross_pair(victim, interferer);
    check_slot(cfg, victim);
    check_slot(cfg, interferer);

    IniBlock block{victim, interferer, {}};
    if (victim.high) {
        block.entries.resize(cfg.k_edge, cfg.p_edge);
        for (int r = 0; r < cfg.k_edge; ++r)
            for (int c = 0; c < cfg.p_edge; ++c)
                block.entries(r, c) = low_to_high_coupling(
                    cfg, victim.slot, cfg.high_band_start() + r,
                    cfg.low_band_start() + c);
    } else {
        block.entries.resize(cfg.p_edge, cfg.k_edge);
        for (int r = 0; r < cfg.p_edge; ++r)
            for (int c = 0; c < cfg.k_edge; ++c)
                block.entries(r, c) = high_to_low_coupling(
                    cfg, interferer.slot, cfg.low_band_start() + r,
                    cfg.high_band_start() + c);
    }
    return block;
}

IniBlock w_block_oracle(BandRef victim, BandRef interferer, const MixedConfig& cfg) {
    check_cross_pair(victim, interferer);
    check_slot(cfg, victim);
    check_slot(cfg, interferer);

    const int rows = victim.high ? cfg.k_edge : cfg.p_edge;
    const int cols = interferer.high ? cfg.k_edge : cfg.p_edge;
    IniBlock block{victim, interferer, Eigen::MatrixXcd(rows, cols)};

    for (int j = 0; j < cols; ++j) {
        SymbolGrid g = SymbolGrid::zero(cfg);
        if (interferer.high)
            g.x1[interferer.slot][j] = 1.0;
        else
            g.x0[j] = 1.0;
        const TimeFrame frame = build_frame(g, cfg);
        if (victim.high) {
            block.entries.col(j) = demod_high(frame, victim.slot, cfg)
                                       .segment(cfg.high_band_start(), cfg.k_edge);
        } else {
            block.entries.col(j) =
                demod_low(frame, cfg).segment(cfg.low_band_start(), cfg.p_edge);
        }
    }
    return block;
}

IniModel::IniModel(MixedConfig cfg, Eigen::MatrixXcd w, double condition_limit)
    : cfg_(std::move(cfg)), w_(std::move(w)) {
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(w_);
    const auto& sv = svd.singularValues();
    const double smin = sv(sv.size() - 1);
    condition_ = smin > 0.0 ? sv(0) / smin : std::numeric_limits<double>::infinity();
    if (!(condition_ < condition_limit))
        throw NumericalError(
            "interference matrix condition estimate " + std::to_string(condition_) +
            " exceeds limit " + std::to_string(condition_limit) +
            "; configuration outside the method's validity");
    w_inv_ = w_.inverse();
    g_inversions.fetch_add(1, std::memory_order_relaxed);
}

long IniModel::inversions_performed() {
    return g_inversions.load(std::memory_order_relaxed);
}

IniModel assemble_from_w(const MixedConfig& cfg, Eigen::MatrixXcd w,
                         double condition_limit) {
    return IniModel(cfg, std::move(w), condition_limit);
}

IniModel assemble_from_blocks(const MixedConfig& cfg,
                              const std::vector<IniBlock>& blocks,
                              double condition_limit) {
    const int dim = cfg.stacked_dim();
    Eigen::MatrixXcd w = Eigen::MatrixXcd::Identity(dim, dim);

    auto band_offset = [&](BandRef band) {
        return band.high ? cfg.p_edge + band.slot * cfg.k_edge : 0;
    };
    for (const auto& block : blocks) {
        check_cross_pair(block.victim, block.interferer);
        check_slot(cfg, block.victim);
        check_slot(cfg, block.interferer);
        const int rows = block.victim.high ? cfg.k_edge : cfg.p_edge;
        const int cols = block.interferer.high ? cfg.k_edge : cfg.p_edge;
        if (block.entries.rows() != rows || block.entries.cols() != cols)
            throw DimensionError("coupling block shape does not match configuration");
        w.block(band_offset(block.victim), band_offset(block.interferer), rows, cols) =
            block.entries;
    }
    return assemble_from_w(cfg, std::move(w), condition_limit);
}

IniModel assemble_w(const MixedConfig& cfg, double condition_limit) {
    std::vector<IniBlock> blocks;
    blocks.reserve(2 * cfg.q_ratio);
    for (int q = 0; q < cfg.q_ratio; ++q) {
        blocks.push_back(w_block_closed_form(BandRef::high_slot(q), BandRef::low(), cfg));
        blocks.push_back(w_block_closed_form(BandRef::low(), BandRef::high_slot(q), cfg));
    }
    return assemble_from_blocks(cfg, blocks, condition_limit);
}

SymbolGrid pre_equalize(const SymbolGrid& grid, const IniModel& model) {
    if (!grid.matches(model.config()))
        throw DimensionError("symbol grid does not match the model's configuration");
    return SymbolGrid::from_stacked(model.pre_equalizer() * grid.stacked(),
                                    model.config());
}

Eigen::VectorXcd residual_ini(const SymbolGrid& grid, const MixedConfig& cfg,
                              const IniModel* model) {
    const TimeFrame frame = build_frame(grid, cfg, model);
    return demod_stacked(frame, cfg) - grid.stacked();
}

}  // namespace inipre
