#include <CLI11.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>

#include "inipre/experiment.hpp"

namespace fs = std::filesystem;
using namespace inipre;

namespace {

struct CommonOpts {
    std::string config_path;
    std::optional<std::uint64_t> seed;
    std::optional<std::string> out_dir;
    std::optional<int> threads;
    bool force_preeq = false, force_no_preeq = false, force_both = false;
};

void add_common(CLI::App* cmd, CommonOpts& opts) {
    cmd->add_option("--config", opts.config_path, "experiment config file (JSON)")
        ->required();
    cmd->add_option("--seed", opts.seed, "override the config seed");
    cmd->add_option("--out", opts.out_dir, "override the output directory");
    cmd->add_option("--threads", opts.threads, "worker threads (1 = byte-reproducible)");
    auto* on = cmd->add_flag("--preeq", opts.force_preeq, "pre-equalized arm only");
    auto* off = cmd->add_flag("--no-preeq", opts.force_no_preeq, "plain arm only");
    auto* both = cmd->add_flag("--both", opts.force_both, "both arms");
    on->excludes(off)->excludes(both);
    off->excludes(both);
}

ExperimentSpec load_spec(const CommonOpts& opts) {
    ExperimentSpec spec = ExperimentSpec::from_file(opts.config_path);
    if (opts.seed) spec.seed = *opts.seed;
    if (opts.out_dir) spec.out_dir = *opts.out_dir;
    if (opts.threads) spec.threads = *opts.threads;
    if (opts.force_preeq) spec.preeq = PreeqMode::on;
    if (opts.force_no_preeq) spec.preeq = PreeqMode::off;
    if (opts.force_both) spec.preeq = PreeqMode::both;
    if (spec.threads < 1) throw ConfigError("threads must be at least 1");
    return spec;
}

std::string run_tag(const ExperimentSpec& spec) {
    return std::to_string(spec.order.order) + "qam_" + to_string(spec.channel);
}

int cmd_verify(const CommonOpts& opts) {
    const ExperimentSpec spec = load_spec(opts);
    const VerifyReport report = run_verify(spec);
    std::cout << report.to_text();
    fs::create_directories(spec.out_dir);
    std::ofstream(fs::path(spec.out_dir) / "verify_report.txt") << report.to_text();
    return report.all_pass() ? 0 : 1;
}

int cmd_ber(const CommonOpts& opts) {
    const ExperimentSpec spec = load_spec(opts);
    fs::create_directories(spec.out_dir);
    const fs::path csv_path = fs::path(spec.out_dir) / ("ber_" + run_tag(spec) + ".csv");

    std::ofstream csv(csv_path);
    if (!csv) throw ConfigError("cannot open '" + csv_path.string() + "' for writing");
    csv << BerRow::csv_header() << '\n';
    csv.flush();  // partial results stay on disk point by point

    run_ber_sweep(spec, [&](const BerRow& row) {
        csv << row.csv_line() << '\n';
        csv.flush();
        std::cout << row.csv_line() << '\n' << std::flush;
    });

    const fs::path script_path =
        fs::path(spec.out_dir) / ("ber_" + run_tag(spec) + "_plot.py");
    std::ofstream(script_path) << ber_plot_script(spec, csv_path.filename().string());
    std::cout << "wrote " << csv_path.string() << " and " << script_path.string()
              << '\n';
    return 0;
}

int cmd_papr(const CommonOpts& opts) {
    const ExperimentSpec spec = load_spec(opts);
    const PaprResult result = run_papr(spec);
    fs::create_directories(spec.out_dir);
    const fs::path csv_path = fs::path(spec.out_dir) / ("papr_" + run_tag(spec) + ".csv");
    std::ofstream(csv_path) << result.to_csv();
    const fs::path script_path =
        fs::path(spec.out_dir) / ("papr_" + run_tag(spec) + "_plot.py");
    std::ofstream(script_path) << papr_plot_script(csv_path.filename().string());
    std::cout << "wrote " << csv_path.string() << " and " << script_path.string()
              << '\n';
    return 0;
}

int cmd_export_matrix(const CommonOpts& opts) {
    const ExperimentSpec spec = load_spec(opts);
    const auto paths = export_matrix(spec, spec.out_dir);
    for (const auto& p : paths) std::cout << "wrote " << p.string() << '\n';
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"mixed-numerology OFDM simulator with INI pre-equalization"};
    app.require_subcommand(1);

    CommonOpts verify_opts, ber_opts, papr_opts, export_opts;
    auto* verify = app.add_subcommand("verify", "run the model consistency checks");
    add_common(verify, verify_opts);
    auto* ber = app.add_subcommand("ber", "Monte Carlo BER sweep");
    add_common(ber, ber_opts);
    auto* papr = app.add_subcommand("papr", "paired PAPR CCDF comparison");
    add_common(papr, papr_opts);
    auto* exportm = app.add_subcommand("export-matrix", "write W and its inverse");
    add_common(exportm, export_opts);

    try {
        app.parse(argc, argv);
        if (verify->parsed()) return cmd_verify(verify_opts);
        if (ber->parsed()) return cmd_ber(ber_opts);
        if (papr->parsed()) return cmd_papr(papr_opts);
        if (exportm->parsed()) return cmd_export_matrix(export_opts);
        return 2;
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
