#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "inipre/config.hpp"
#include "inipre/ini_model.hpp"
#include "inipre/metrics.hpp"
#include "inipre/qam.hpp"

namespace inipre {

enum class PreeqMode { on, off, both };

PreeqMode preeq_mode_from_string(const std::string& name);
std::string to_string(PreeqMode mode);

/// Declarative description of one simulation run, loadable from a JSON
/// config file. All fields round-trip losslessly through to_json/from file.
struct ExperimentSpec {
    MixedConfig cfg;
    QamOrder order = QamOrder::of(256);
    ChannelModel channel = ChannelModel::rayleigh_block;
    std::vector<double> ebn0_db;
    long long min_bits = 10000;
    long long max_bit_errors = 200;
    long long max_bits = 10000000;
    long long papr_frames = 10000;
    std::uint64_t seed = 1;
    std::string out_dir = "out";
    PreeqMode preeq = PreeqMode::both;
    int threads = 1;
    // test hooks
    bool zero_coupling = false;
    bool constant_frame = false;

    static ExperimentSpec from_file(const std::filesystem::path& path);
    std::string to_json() const;
};

struct CheckResult {
    std::string name;
    double measured = 0.0;
    double limit = 0.0;
    bool pass = false;
};

struct VerifyReport {
    std::vector<CheckResult> checks;

    bool all_pass() const;
    std::string to_text() const;
};

/// One CSV row of a BER sweep; columns are fixed:
/// experiment,numerology,qam_order,channel,ebn0_db,bits,errors,ber,ci95
struct BerRow {
    std::string experiment;
    int numerology = 0;
    int qam_order = 0;
    std::string channel;
    double ebn0_db = 0.0;
    long long bits = 0;
    long long errors = 0;
    double ber = 0.0;
    double ci95 = 0.0;
    // carried for consistency checks, not serialized
    long long frames = 0;
    double frame_err_sq_sum = 0.0;

    std::string csv_line() const;
    static std::string csv_header();
};

struct PaprResult {
    std::vector<double> thresholds_db;
    std::vector<double> ccdf_preeq;
    std::vector<double> ccdf_plain;
    long long frames = 0;

    std::string to_csv() const;  // threshold_db,ccdf_preeq,ccdf_plain,frames
};

/// Runs the model-consistency suite (oracle equivalence, block structure,
/// inversion residual, pre-equalized zero residual, linearity) and reports
/// each check with its measured value.
VerifyReport run_verify(const ExperimentSpec& spec);

/// Monte Carlo BER sweep over spec.ebn0_db for both numerologies and the
/// requested pre-equalization arms. Each finished row is handed to on_row
/// (if given) before the next one starts, so partial results survive an
/// interrupted run.
std::vector<BerRow> run_ber_sweep(const ExperimentSpec& spec,
                                  const std::function<void(const BerRow&)>& on_row = {});

/// Paired PAPR CCDFs (same symbol draws with and without pre-equalization).
PaprResult run_papr(const ExperimentSpec& spec);

/// Writes W and its inverse in CSV and binary form under `dir`.
/// Returns the four file paths.
std::vector<std::filesystem::path> export_matrix(const ExperimentSpec& spec,
                                                 const std::filesystem::path& dir);

/// Python/matplotlib plot script texts; the theoretical overlay values are
/// embedded so the scripts only need the CSV next to them.
std::string ber_plot_script(const ExperimentSpec& spec, const std::string& csv_name);
std::string papr_plot_script(const std::string& csv_name);

}  // namespace inipre
