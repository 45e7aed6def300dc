#include "inipre/grid.hpp"

#include <string>

namespace inipre {

Eigen::VectorXcd SymbolGrid::stacked() const {
    const int p = static_cast<int>(x0.size());
    int total = p;
    for (const auto& v : x1) total += static_cast<int>(v.size());
    Eigen::VectorXcd out(total);
    out.head(p) = x0;
    int off = p;
    for (const auto& v : x1) {
        out.segment(off, v.size()) = v;
        off += static_cast<int>(v.size());
    }
    return out;
}

bool SymbolGrid::matches(const MixedConfig& cfg) const {
    if (x0.size() != cfg.p_edge) return false;
    if (static_cast<int>(x1.size()) != cfg.q_ratio) return false;
    for (const auto& v : x1)
        if (v.size() != cfg.k_edge) return false;
    return true;
}

SymbolGrid SymbolGrid::from_stacked(const Eigen::VectorXcd& stacked,
                                    const MixedConfig& cfg) {
    if (stacked.size() != cfg.stacked_dim())
        throw DimensionError("stacked vector has length " +
                             std::to_string(stacked.size()) + ", expected " +
                             std::to_string(cfg.stacked_dim()));
    SymbolGrid g;
    g.x0 = stacked.head(cfg.p_edge);
    g.x1.resize(cfg.q_ratio);
    for (int q = 0; q < cfg.q_ratio; ++q)
        g.x1[q] = stacked.segment(cfg.p_edge + q * cfg.k_edge, cfg.k_edge);
    return g;
}

SymbolGrid SymbolGrid::from_bits(const std::vector<std::uint8_t>& bits,
                                 QamOrder order, const MixedConfig& cfg) {
    const auto symbols = qam_modulate(bits, order);
    if (symbols.size() != cfg.stacked_dim())
        throw DimensionError("bit vector maps to " + std::to_string(symbols.size()) +
                             " symbols, expected " + std::to_string(cfg.stacked_dim()));
    return from_stacked(symbols, cfg);
}

SymbolGrid SymbolGrid::zero(const MixedConfig& cfg) {
    SymbolGrid g;
    g.x0 = Eigen::VectorXcd::Zero(cfg.p_edge);
    g.x1.assign(cfg.q_ratio, Eigen::VectorXcd::Zero(cfg.k_edge));
    return g;
}

}  // namespace inipre
