#pragma once

#include <Eigen/Dense>
#include <complex>
#include <utility>
#include <vector>

#include "inipre/config.hpp"
#include "inipre/grid.hpp"

namespace inipre {

class IniModel;

/// Identifies one numerology band: the wide numerology as a whole, or one
/// time slot q of the narrow numerology.
struct BandRef {
    bool high = false;
    int slot = 0;

    static BandRef low() { return {false, 0}; }
    static BandRef high_slot(int q) { return {true, q}; }
    bool operator==(const BandRef&) const = default;
};

/// DFT roots for one transform size; the inverse root is the conjugate of
/// the forward root and forward^size == 1.
struct TwiddleConvention {
    std::complex<double> forward;
    std::complex<double> inverse;

    static TwiddleConvention for_size(int size);
};

struct Spectrum {
    Eigen::VectorXcd bins;
    BandRef band;
};

/// One composite frame of n_fft + n_cp baseband samples.
struct TimeFrame {
    Eigen::VectorXcd samples;
    double sample_rate_hz = 0.0;
};

/// Places grid symbols on their bins: x0[c] -> bin N/2-P+c of the wide
/// spectrum, x1[q][c] -> bin M/2+c of slot q. All other bins zero.
std::pair<Spectrum, std::vector<Spectrum>> map_edge_symbols(const SymbolGrid& grid,
                                                            const MixedConfig& cfg);

/// CP-prefixed IDFT: out[n] = (1/size) * sum_k spec[k] e^{+j2pi k (n-cp)/size},
/// n = 0 .. size+cp-1. The first cp samples replicate the last cp data samples.
Eigen::VectorXcd idft_with_cp(const Eigen::VectorXcd& spec, int size, int cp);

/// Concatenates Q narrow-numerology symbols into one frame-length vector.
Eigen::VectorXcd concat_high_numerology(const std::vector<Eigen::VectorXcd>& symbols,
                                        const MixedConfig& cfg);

/// Element-wise sum of the two per-numerology signals.
TimeFrame compose(const TimeFrame& y0, const TimeFrame& y1);

/// Unnormalized N-point DFT of the wide-numerology data window
/// (samples N_cp .. N_cp+N-1), phase referenced to the window start.
Eigen::VectorXcd demod_low(const TimeFrame& frame, const MixedConfig& cfg);

/// Unnormalized M-point DFT of slot q's data window
/// (samples q(M+M_cp)+M_cp .. q(M+M_cp)+M_cp+M-1).
Eigen::VectorXcd demod_high(const TimeFrame& frame, int q, const MixedConfig& cfg);

/// Full transmit chain. When pre_eq is given, the grid's stacked vector is
/// multiplied by the cached pre-equalizer before mapping and synthesis.
TimeFrame build_frame(const SymbolGrid& grid, const MixedConfig& cfg,
                      const IniModel* pre_eq = nullptr);

/// Active bins of all bands demodulated from one frame, stacked order.
Eigen::VectorXcd demod_stacked(const TimeFrame& frame, const MixedConfig& cfg);

/// Dense matrices of the transmit and receive chains restricted to the
/// active bins: synthesis * stacked(grid) equals build_frame and
/// analysis * samples equals demod_stacked. Read-only after construction
/// and shareable across threads.
struct StackedChain {
    Eigen::MatrixXcd synthesis;  // (N+N_cp) x (P+QK)
    Eigen::MatrixXcd analysis;   // (P+QK) x (N+N_cp)

    explicit StackedChain(const MixedConfig& cfg);
};

}  // namespace inipre
