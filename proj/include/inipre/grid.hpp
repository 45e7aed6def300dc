#pragma once

#include <Eigen/Dense>
#include <vector>

#include "inipre/config.hpp"
#include "inipre/qam.hpp"

namespace inipre {

/// Frequency-domain transmit symbols for one composite frame: x0 on the
/// p_edge active bins of the wide numerology and x1[q] on the k_edge active
/// bins of narrow-numerology time slot q. The stacked form is the
/// (P + Q*K)-vector [x0; x1[0]; ...; x1[Q-1]].
struct SymbolGrid {
    Eigen::VectorXcd x0;
    std::vector<Eigen::VectorXcd> x1;

    Eigen::VectorXcd stacked() const;
    bool matches(const MixedConfig& cfg) const;

    static SymbolGrid from_stacked(const Eigen::VectorXcd& stacked,
                                   const MixedConfig& cfg);
    /// Maps (P+Q*K) * bits_per_symbol bits onto a grid, stacked order.
    static SymbolGrid from_bits(const std::vector<std::uint8_t>& bits,
                                QamOrder order, const MixedConfig& cfg);
    static SymbolGrid zero(const MixedConfig& cfg);
};

}  // namespace inipre
