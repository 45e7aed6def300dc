#include "inipre/qam.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace inipre {

namespace {

int ilog2(int v) {
    int b = 0;
    while ((1 << b) < v) ++b;
    return b;
}

unsigned gray_encode(unsigned i) { return i ^ (i >> 1); }

unsigned gray_decode(unsigned g) {
    unsigned i = g;
    while (g >>= 1) i ^= g;
    return i;
}

/// Amplitude of level index i, unit-average-energy scaling.
double level_amplitude(int i, int levels, double scale) {
    return (levels - 1 - 2 * i) * scale;
}

double qam_scale(int order) { return std::sqrt(3.0 / (2.0 * (order - 1))); }

int decide_level(double x, int levels, double scale) {
    // Decision boundaries sit halfway between adjacent levels (2*scale
    // apart). Amplitudes decrease with the level index; ceil(idx - 1/2)
    // rounds a boundary tie down to the smaller index, i.e. the larger
    // amplitude, so a QPSK symbol at the origin decodes to bits 00.
    const double idx = (levels - 1 - x / scale) / 2.0;
    const int i = static_cast<int>(std::ceil(idx - 0.5));
    return std::clamp(i, 0, levels - 1);
}

}  // namespace

int QamOrder::bits_per_symbol() const { return ilog2(order); }

int QamOrder::levels_per_dim() const { return 1 << (bits_per_symbol() / 2); }

QamOrder QamOrder::of(int order) {
    if (order != 4 && order != 16 && order != 64 && order != 256)
        throw ConfigError("unsupported QAM order " + std::to_string(order));
    return QamOrder{order};
}

Eigen::VectorXcd qam_modulate(const std::vector<std::uint8_t>& bits, QamOrder order) {
    const int b = order.bits_per_symbol();
    const int hb = b / 2;
    const int levels = order.levels_per_dim();
    const double scale = qam_scale(order.order);
    if (bits.size() % static_cast<std::size_t>(b) != 0)
        throw DimensionError("bit count " + std::to_string(bits.size()) +
                             " not divisible by bits_per_symbol=" + std::to_string(b));

    const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(bits.size()) / b;
    Eigen::VectorXcd out(n);
    for (std::ptrdiff_t s = 0; s < n; ++s) {
        unsigned vi = 0, vq = 0;
        for (int j = 0; j < hb; ++j) {
            vi = (vi << 1) | bits[s * b + j];
            vq = (vq << 1) | bits[s * b + hb + j];
        }
        out[s] = {level_amplitude(static_cast<int>(gray_decode(vi)), levels, scale),
                  level_amplitude(static_cast<int>(gray_decode(vq)), levels, scale)};
    }
    return out;
}

std::vector<std::uint8_t> qam_demodulate_hard(const Eigen::VectorXcd& symbols,
                                              QamOrder order) {
    const int b = order.bits_per_symbol();
    const int hb = b / 2;
    const int levels = order.levels_per_dim();
    const double scale = qam_scale(order.order);

    std::vector<std::uint8_t> out(static_cast<std::size_t>(symbols.size()) * b);
    for (std::ptrdiff_t s = 0; s < symbols.size(); ++s) {
        const unsigned gi = gray_encode(
            static_cast<unsigned>(decide_level(symbols[s].real(), levels, scale)));
        const unsigned gq = gray_encode(
            static_cast<unsigned>(decide_level(symbols[s].imag(), levels, scale)));
        for (int j = 0; j < hb; ++j) {
            out[s * b + j] = (gi >> (hb - 1 - j)) & 1u;
            out[s * b + hb + j] = (gq >> (hb - 1 - j)) & 1u;
        }
    }
    return out;
}

Eigen::VectorXcd qam_constellation(QamOrder order) {
    const int levels = order.levels_per_dim();
    const double scale = qam_scale(order.order);
    Eigen::VectorXcd pts(order.order);
    for (int i = 0; i < levels; ++i)
        for (int q = 0; q < levels; ++q)
            pts[i * levels + q] = {level_amplitude(i, levels, scale),
                                   level_amplitude(q, levels, scale)};
    return pts;
}

}  // namespace inipre
