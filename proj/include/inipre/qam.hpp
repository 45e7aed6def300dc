#pragma once

#include <Eigen/Dense>
#include <complex>
#include <cstdint>
#include <vector>

#include "inipre/config.hpp"

namespace inipre {

/// Square QAM constellation size. Only {4, 16, 64, 256} are supported.
struct QamOrder {
    int order = 4;

    int bits_per_symbol() const;
    int levels_per_dim() const;  // sqrt(order)

    static QamOrder of(int order);  // throws ConfigError on unsupported order
};

// Gray-mapped square QAM with unit average symbol energy.
//
// Mapping (documented contract): a symbol carries bits_per_symbol bits,
// MSB first; the first half selects the in-phase level, the second half the
// quadrature level. Each half is a binary-reflected Gray code g, and level
// index i = g^-1(bits) selects amplitude (levels_per_dim-1-2i) * s with
// s = sqrt(3 / (2*(order-1))), so bit pattern 0..0 maps to the largest
// positive amplitude on both axes.
Eigen::VectorXcd qam_modulate(const std::vector<std::uint8_t>& bits, QamOrder order);

// Minimum-distance hard decision, inverse of qam_modulate on exact points.
// Boundary ties resolve toward the smaller level index, i.e. the larger
// amplitude, so the origin of a QPSK constellation decodes to bits 00.
std::vector<std::uint8_t> qam_demodulate_hard(const Eigen::VectorXcd& symbols,
                                              QamOrder order);

/// All `order` constellation points in level-index order (I-major).
Eigen::VectorXcd qam_constellation(QamOrder order);

}  // namespace inipre
