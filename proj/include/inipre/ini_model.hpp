#pragma once

#include <Eigen/Dense>
#include <complex>
#include <vector>

#include "inipre/chain.hpp"
#include "inipre/config.hpp"
#include "inipre/grid.hpp"

namespace inipre {

/// One cross-numerology coupling block: victim rows, interferer columns.
/// K x P when the victim is a narrow-numerology slot, P x K the other way.
struct IniBlock {
    BandRef victim;
    BandRef interferer;
    Eigen::MatrixXcd entries;
};

/// The assembled (P+QK) x (P+QK) interference map W, its cached inverse
/// (the transmitter pre-equalizer) and the measured condition number.
/// Immutable after assembly; safe to share across threads.
class IniModel {
public:
    static constexpr double kDefaultConditionLimit = 1e8;

    const MixedConfig& config() const { return cfg_; }
    const Eigen::MatrixXcd& w() const { return w_; }
    const Eigen::MatrixXcd& pre_equalizer() const { return w_inv_; }
    double condition_number() const { return condition_; }

    /// Process-wide count of matrix inversions, for tests asserting the
    /// pre-equalizer is computed once per configuration.
    static long inversions_performed();

private:
    IniModel(MixedConfig cfg, Eigen::MatrixXcd w, double condition_limit);

    MixedConfig cfg_;
    Eigen::MatrixXcd w_;
    Eigen::MatrixXcd w_inv_;
    double condition_ = 0.0;

    friend IniModel assemble_from_w(const MixedConfig&, Eigen::MatrixXcd, double);
};

// Per-entry coupling sums in the idft_with_cp / demod_* phase convention.
// Bin arguments are raw DFT bins, not offsets into the active bands.

/// Response of narrow-numerology slot `slot`, bin `victim_bin`, to a unit
/// symbol on wide-numerology bin `interferer_bin`.
std::complex<double> low_to_high_coupling(const MixedConfig& cfg, int slot,
                                          int victim_bin, int interferer_bin);

/// Response of wide-numerology bin `victim_bin` to a unit symbol on bin
/// `interferer_bin` of narrow-numerology slot `slot`; sums over the overlap
/// of the wide data window with the slot's samples.
std::complex<double> high_to_low_coupling(const MixedConfig& cfg, int slot,
                                          int victim_bin, int interferer_bin);

/// Coupling block from the closed-form overlap sums. victim and interferer
/// must lie in different numerologies.
IniBlock w_block_closed_form(BandRef victim, BandRef interferer,
                             const MixedConfig& cfg);

/// Same block measured through the actual chain: column j is the victim-side
/// demodulation of a frame carrying a single unit symbol on interferer bin j.
/// Authoritative wherever the two constructions could disagree.
IniBlock w_block_oracle(BandRef victim, BandRef interferer,
                        const MixedConfig& cfg);

/// Assembles W from identity diagonal blocks plus the closed-form coupling
/// blocks, inverts it, and records the condition number. Throws
/// NumericalError if the condition estimate exceeds condition_limit.
IniModel assemble_w(const MixedConfig& cfg,
                    double condition_limit = IniModel::kDefaultConditionLimit);

/// Assembly from explicit coupling blocks (diagonal stays identity).
IniModel assemble_from_blocks(const MixedConfig& cfg,
                              const std::vector<IniBlock>& blocks,
                              double condition_limit = IniModel::kDefaultConditionLimit);

/// X^b = W^-1 * stacked(X), returned as a grid.
SymbolGrid pre_equalize(const SymbolGrid& grid, const IniModel& model);

/// Demodulated-minus-intended stacked vector of a noiseless frame built from
/// `grid`, pre-equalized iff `model` is given. Without pre-equalization this
/// equals (W - I) * stacked(grid) to numerical precision.
Eigen::VectorXcd residual_ini(const SymbolGrid& grid, const MixedConfig& cfg,
                              const IniModel* model = nullptr);

}  // namespace inipre
