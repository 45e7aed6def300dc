#include "inipre/experiment.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "inipre/channel.hpp"
#include "inipre/io.hpp"

namespace inipre {

using json = nlohmann::json;

namespace {

// RNG substream purposes; one stream per frame, derived from (seed, frame id)
enum RngPurpose : std::uint64_t {
    kPayloadBits = 0,
    kFade = 1,
    kNoise = 2,
    kPaprBits = 3,
};

std::string format_double(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.10g", v);
    return buf;
}

std::vector<std::uint8_t> draw_bits(RngStream& rng, std::size_t count) {
    std::vector<std::uint8_t> bits(count);
    std::uint64_t word = 0;
    int left = 0;
    for (std::size_t i = 0; i < count; ++i) {
        if (left == 0) {
            word = rng.next_u64();
            left = 64;
        }
        bits[i] = word & 1u;
        word >>= 1;
        --left;
    }
    return bits;
}

}  // namespace

PreeqMode preeq_mode_from_string(const std::string& name) {
    if (name == "on") return PreeqMode::on;
    if (name == "off") return PreeqMode::off;
    if (name == "both") return PreeqMode::both;
    throw ConfigError("unknown pre_equalization mode '" + name + "'");
}

std::string to_string(PreeqMode mode) {
    switch (mode) {
        case PreeqMode::on: return "on";
        case PreeqMode::off: return "off";
        default: return "both";
    }
}

ExperimentSpec ExperimentSpec::from_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file '" + path.string() + "'");
    json j;
    try {
        j = json::parse(in);
    } catch (const json::parse_error& e) {
        throw ConfigError("config parse error in '" + path.string() + "': " + e.what());
    }

    static const std::vector<std::string> known = {
        "mu_low", "mu_high", "n_fft", "n_cp", "p_edge", "k_edge", "qam_order",
        "channel", "ebn0_db", "min_bits", "max_bit_errors", "max_bits",
        "frames", "seed", "out_dir", "pre_equalization", "threads",
        "zero_coupling", "constant_frame"};
    for (const auto& [key, value] : j.items()) {
        if (std::find(known.begin(), known.end(), key) == known.end())
            throw ConfigError("unknown config key '" + key + "'");
    }
    for (const auto& key : {"mu_low", "mu_high", "n_fft", "n_cp", "p_edge",
                            "k_edge", "qam_order"}) {
        if (!j.contains(key))
            throw ConfigError(std::string("missing config key '") + key + "'");
    }

    ExperimentSpec spec;
    try {
        spec.cfg = make_mixed_config(j.at("mu_low").get<int>(),
                                     j.at("mu_high").get<int>(),
                                     j.at("n_fft").get<int>(),
                                     j.at("n_cp").get<int>(),
                                     j.at("p_edge").get<int>(),
                                     j.at("k_edge").get<int>());
        spec.order = QamOrder::of(j.at("qam_order").get<int>());
        if (j.contains("channel"))
            spec.channel = channel_model_from_string(j.at("channel").get<std::string>());
        if (j.contains("ebn0_db"))
            spec.ebn0_db = j.at("ebn0_db").get<std::vector<double>>();
        else
            for (int e = 0; e <= 40; e += 5) spec.ebn0_db.push_back(e);
        if (j.contains("min_bits")) spec.min_bits = j.at("min_bits").get<long long>();
        if (j.contains("max_bit_errors"))
            spec.max_bit_errors = j.at("max_bit_errors").get<long long>();
        if (j.contains("max_bits")) spec.max_bits = j.at("max_bits").get<long long>();
        if (j.contains("frames")) spec.papr_frames = j.at("frames").get<long long>();
        if (j.contains("seed")) spec.seed = j.at("seed").get<std::uint64_t>();
        if (j.contains("out_dir")) spec.out_dir = j.at("out_dir").get<std::string>();
        if (j.contains("pre_equalization"))
            spec.preeq = preeq_mode_from_string(j.at("pre_equalization").get<std::string>());
        if (j.contains("threads")) spec.threads = j.at("threads").get<int>();
        if (j.contains("zero_coupling"))
            spec.zero_coupling = j.at("zero_coupling").get<bool>();
        if (j.contains("constant_frame"))
            spec.constant_frame = j.at("constant_frame").get<bool>();
    } catch (const json::exception& e) {
        throw ConfigError("config value error in '" + path.string() + "': " + e.what());
    }

    if (spec.ebn0_db.empty()) throw ConfigError("ebn0_db grid must be nonempty");
    if (spec.min_bits < 10000) throw ConfigError("min_bits must be at least 10^4");
    if (spec.max_bits < spec.min_bits)
        throw ConfigError("max_bits must be at least min_bits");
    if (spec.threads < 1) throw ConfigError("threads must be at least 1");
    return spec;
}

std::string ExperimentSpec::to_json() const {
    json j;
    j["mu_low"] = cfg.mu_low;
    j["mu_high"] = cfg.mu_high;
    j["n_fft"] = cfg.n_fft;
    j["n_cp"] = cfg.n_cp;
    j["p_edge"] = cfg.p_edge;
    j["k_edge"] = cfg.k_edge;
    j["qam_order"] = order.order;
    j["channel"] = to_string(channel);
    j["ebn0_db"] = ebn0_db;
    j["min_bits"] = min_bits;
    j["max_bit_errors"] = max_bit_errors;
    j["max_bits"] = max_bits;
    j["frames"] = papr_frames;
    j["seed"] = seed;
    j["out_dir"] = out_dir;
    j["pre_equalization"] = to_string(preeq);
    j["threads"] = threads;
    j["zero_coupling"] = zero_coupling;
    j["constant_frame"] = constant_frame;
    return j.dump(2) + "\n";
}

bool VerifyReport::all_pass() const {
    return std::all_of(checks.begin(), checks.end(),
                       [](const CheckResult& c) { return c.pass; });
}

std::string VerifyReport::to_text() const {
    std::ostringstream out;
    for (const auto& c : checks) {
        char line[160];
        std::snprintf(line, sizeof(line), "%-28s measured %-14.6g limit %-10.3g %s\n",
                      c.name.c_str(), c.measured, c.limit, c.pass ? "PASS" : "FAIL");
        out << line;
    }
    out << (all_pass() ? "verify: ALL CHECKS PASSED\n" : "verify: CHECK FAILURE\n");
    return out.str();
}

namespace {

IniModel build_model(const ExperimentSpec& spec) {
    if (spec.zero_coupling)
        return assemble_from_blocks(spec.cfg, {});
    return assemble_w(spec.cfg);
}

Eigen::MatrixXcd oracle_full_matrix(const MixedConfig& cfg) {
    const int dim = cfg.stacked_dim();
    Eigen::MatrixXcd w(dim, dim);
    for (int j = 0; j < dim; ++j) {
        Eigen::VectorXcd unit = Eigen::VectorXcd::Zero(dim);
        unit[j] = 1.0;
        const SymbolGrid g = SymbolGrid::from_stacked(unit, cfg);
        w.col(j) = demod_stacked(build_frame(g, cfg), cfg);
    }
    return w;
}

SymbolGrid random_grid(const ExperimentSpec& spec, std::uint64_t stream) {
    RngStream rng(spec.seed, stream, kPayloadBits);
    const auto bits = draw_bits(
        rng, static_cast<std::size_t>(spec.cfg.stacked_dim()) *
                 spec.order.bits_per_symbol());
    return SymbolGrid::from_bits(bits, spec.order, spec.cfg);
}

}  // namespace

VerifyReport run_verify(const ExperimentSpec& spec) {
    const MixedConfig& cfg = spec.cfg;
    VerifyReport report;
    auto add = [&](const std::string& name, double measured, double limit) {
        report.checks.push_back({name, measured, limit, measured <= limit});
    };

    const IniModel model = build_model(spec);
    const int dim = cfg.stacked_dim();

    if (spec.zero_coupling) {
        add("w_equals_identity",
            (model.w() - Eigen::MatrixXcd::Identity(dim, dim)).cwiseAbs().maxCoeff(),
            1e-12);
        add("inverse_equals_identity",
            (model.pre_equalizer() - Eigen::MatrixXcd::Identity(dim, dim))
                .cwiseAbs()
                .maxCoeff(),
            1e-12);
        const SymbolGrid g = random_grid(spec, 0);
        add("preeq_is_identity",
            (pre_equalize(g, model).stacked() - g.stacked()).cwiseAbs().maxCoeff(),
            1e-12);
        return report;
    }

    // closed form vs unit-excitation oracle, every coupling block
    double worst_block = 0.0;
    for (int q = 0; q < cfg.q_ratio; ++q) {
        for (const bool victim_high : {true, false}) {
            const BandRef victim = victim_high ? BandRef::high_slot(q) : BandRef::low();
            const BandRef interferer =
                victim_high ? BandRef::low() : BandRef::high_slot(q);
            const auto closed = w_block_closed_form(victim, interferer, cfg);
            const auto oracle = w_block_oracle(victim, interferer, cfg);
            worst_block = std::max(
                worst_block, (closed.entries - oracle.entries).cwiseAbs().maxCoeff());
        }
    }
    add("oracle_equivalence", worst_block, 1e-9);

    // structure of the full oracle matrix: identity diagonal, zero inter-slot
    const Eigen::MatrixXcd w_full = oracle_full_matrix(cfg);
    double structure = (w_full.topLeftCorner(cfg.p_edge, cfg.p_edge) -
                        Eigen::MatrixXcd::Identity(cfg.p_edge, cfg.p_edge))
                           .cwiseAbs()
                           .maxCoeff();
    for (int q = 0; q < cfg.q_ratio; ++q) {
        const int row = cfg.p_edge + q * cfg.k_edge;
        for (int q2 = 0; q2 < cfg.q_ratio; ++q2) {
            const int col = cfg.p_edge + q2 * cfg.k_edge;
            const auto block = w_full.block(row, col, cfg.k_edge, cfg.k_edge);
            const Eigen::MatrixXcd target =
                q == q2 ? Eigen::MatrixXcd::Identity(cfg.k_edge, cfg.k_edge)
                        : Eigen::MatrixXcd::Zero(cfg.k_edge, cfg.k_edge);
            structure = std::max(structure, (block - target).cwiseAbs().maxCoeff());
        }
    }
    add("block_structure", structure, 1e-12);

    add("assembled_vs_oracle", (model.w() - w_full).cwiseAbs().maxCoeff(), 1e-9);
    add("inversion_residual",
        (model.w() * model.pre_equalizer() - Eigen::MatrixXcd::Identity(dim, dim))
            .cwiseAbs()
            .maxCoeff(),
        1e-10);

    double worst_residual = 0.0;
    double worst_consistency = 0.0;
    for (std::uint64_t i = 0; i < 20; ++i) {
        const SymbolGrid g = random_grid(spec, i);
        worst_residual =
            std::max(worst_residual,
                     residual_ini(g, cfg, &model).cwiseAbs().maxCoeff());
        const Eigen::VectorXcd plain = residual_ini(g, cfg);
        const Eigen::VectorXcd predicted =
            (model.w() - Eigen::MatrixXcd::Identity(dim, dim)) * g.stacked();
        worst_consistency =
            std::max(worst_consistency, (plain - predicted).cwiseAbs().maxCoeff());
    }
    add("preeq_zero_residual", worst_residual, 1e-9);
    add("plain_residual_consistency", worst_consistency, 1e-10);

    // superposition of residuals
    const SymbolGrid a = random_grid(spec, 100);
    const SymbolGrid b = random_grid(spec, 101);
    const std::complex<double> alpha{0.7, -0.3}, beta{-1.1, 0.4};
    const SymbolGrid mix =
        SymbolGrid::from_stacked(alpha * a.stacked() + beta * b.stacked(), cfg);
    const Eigen::VectorXcd lhs = residual_ini(mix, cfg);
    const Eigen::VectorXcd rhs =
        alpha * residual_ini(a, cfg) + beta * residual_ini(b, cfg);
    add("residual_linearity", (lhs - rhs).cwiseAbs().maxCoeff(), 1e-10);

    add("condition_number", model.condition_number(), IniModel::kDefaultConditionLimit);
    return report;
}

std::string BerRow::csv_header() {
    return "experiment,numerology,qam_order,channel,ebn0_db,bits,errors,ber,ci95";
}

std::string BerRow::csv_line() const {
    std::ostringstream out;
    out << experiment << ',' << numerology << ',' << qam_order << ',' << channel
        << ',' << format_double(ebn0_db) << ',' << bits << ',' << errors << ','
        << format_double(ber) << ',' << format_double(ci95);
    return out.str();
}

namespace {

struct PointSetup {
    const ExperimentSpec& spec;
    const Eigen::MatrixXcd& synthesis;  // possibly pre-equalized
    const Eigen::MatrixXcd& analysis;
    bool victim_high = false;
    double noise_variance = 0.0;
    std::uint64_t stream_base = 0;
};

/// Simulates frames [first, last) and accumulates victim-band bit errors.
void simulate_frames(const PointSetup& s, long long first, long long last,
                     BerPoint& acc) {
    const MixedConfig& cfg = s.spec.cfg;
    const int b = s.spec.order.bits_per_symbol();
    const int dim = cfg.stacked_dim();
    const int victim_off = s.victim_high ? cfg.p_edge : 0;
    const int victim_len = s.victim_high ? cfg.q_ratio * cfg.k_edge : cfg.p_edge;
    const bool fading = s.spec.channel == ChannelModel::rayleigh_block;

    for (long long f = first; f < last; ++f) {
        const std::uint64_t stream = s.stream_base + static_cast<std::uint64_t>(f);
        RngStream rng_bits(s.spec.seed, stream, kPayloadBits);
        const auto bits = draw_bits(rng_bits, static_cast<std::size_t>(dim) * b);
        const Eigen::VectorXcd x = qam_modulate(bits, s.spec.order);

        Eigen::VectorXcd y = s.synthesis * x;

        std::complex<double> h{1.0, 0.0};
        if (fading) {
            RngStream rng_fade(s.spec.seed, stream, kFade);
            h = rng_fade.complex_gaussian(1.0);
            y *= h;
        }
        if (s.noise_variance > 0.0) {
            RngStream rng_noise(s.spec.seed, stream, kNoise);
            for (Eigen::Index i = 0; i < y.size(); ++i)
                y[i] += rng_noise.complex_gaussian(s.noise_variance);
        }

        Eigen::VectorXcd d = s.analysis * y;
        if (fading) d /= h;

        const auto rx_bits =
            qam_demodulate_hard(d.segment(victim_off, victim_len), s.spec.order);
        long long frame_errors = 0;
        const std::size_t bit_off = static_cast<std::size_t>(victim_off) * b;
        for (std::size_t i = 0; i < rx_bits.size(); ++i)
            frame_errors += rx_bits[i] != bits[bit_off + i];

        acc.errors += frame_errors;
        acc.bits += victim_len * b;
        acc.frames += 1;
        acc.frame_err_sq_sum += static_cast<double>(frame_errors * frame_errors);
    }
}

BerPoint simulate_point(const PointSetup& s, double ebn0_db, int numerology) {
    BerPoint acc;
    acc.numerology = numerology;
    acc.ebn0_db = ebn0_db;

    const int threads = std::max(1, s.spec.threads);
    long long next_frame = 0;
    const long long batch = 128;

    while ((acc.bits < s.spec.min_bits || acc.errors < s.spec.max_bit_errors) &&
           acc.bits < s.spec.max_bits) {
        if (threads == 1) {
            simulate_frames(s, next_frame, next_frame + batch, acc);
        } else {
            std::vector<BerPoint> partial(threads);
            std::vector<std::thread> pool;
            const long long per = (batch + threads - 1) / threads;
            for (int t = 0; t < threads; ++t) {
                const long long lo = next_frame + t * per;
                const long long hi = std::min(next_frame + batch, lo + per);
                if (lo >= hi) break;
                pool.emplace_back(simulate_frames, std::cref(s), lo, hi,
                                  std::ref(partial[t]));
            }
            for (auto& th : pool) th.join();
            for (const auto& p : partial) {
                acc.errors += p.errors;
                acc.bits += p.bits;
                acc.frames += p.frames;
                acc.frame_err_sq_sum += p.frame_err_sq_sum;
            }
        }
        next_frame += batch;
    }
    return acc;
}

}  // namespace

std::vector<BerRow> run_ber_sweep(const ExperimentSpec& spec,
                                  const std::function<void(const BerRow&)>& on_row) {
    const IniModel model = build_model(spec);
    const StackedChain chain(spec.cfg);
    // the pre-equalized chain folds W^-1 into the synthesis matrix once
    const Eigen::MatrixXcd synthesis_preeq = chain.synthesis * model.pre_equalizer();

    std::vector<bool> arms;
    if (spec.preeq == PreeqMode::both)
        arms = {true, false};
    else
        arms = {spec.preeq == PreeqMode::on};

    std::vector<BerRow> rows;
    std::uint64_t point_index = 0;
    for (const bool preeq : arms) {
        for (const bool victim_high : {false, true}) {
            for (const double ebn0 : spec.ebn0_db) {
                const BandRef band =
                    victim_high ? BandRef::high_slot(0) : BandRef::low();
                PointSetup setup{
                    spec,
                    preeq ? synthesis_preeq : chain.synthesis,
                    chain.analysis,
                    victim_high,
                    noise_variance_for_ebn0(spec.cfg, ebn0, spec.order, band),
                    point_index << 32,
                };
                const int mu = victim_high ? spec.cfg.mu_high : spec.cfg.mu_low;
                const BerPoint point = simulate_point(setup, ebn0, mu);

                BerRow row;
                row.experiment = preeq ? "ber_preeq" : "ber_plain";
                row.numerology = mu;
                row.qam_order = spec.order.order;
                row.channel = to_string(spec.channel);
                row.ebn0_db = ebn0;
                row.bits = point.bits;
                row.errors = point.errors;
                row.ber = point.ber();
                row.ci95 = point.ci95();
                row.frames = point.frames;
                row.frame_err_sq_sum = point.frame_err_sq_sum;
                rows.push_back(row);
                if (on_row) on_row(row);
                ++point_index;
            }
        }
    }
    return rows;
}

PaprResult run_papr(const ExperimentSpec& spec) {
    if (spec.papr_frames < 1000)
        throw ConfigError("PAPR runs need at least 10^3 frames");

    PaprResult result;
    result.frames = spec.papr_frames;
    for (double t = 0.0; t <= 14.0 + 1e-9; t += 0.05)
        result.thresholds_db.push_back(t);

    std::vector<double> papr_preeq, papr_plain;
    papr_preeq.reserve(spec.papr_frames);
    papr_plain.reserve(spec.papr_frames);

    if (spec.constant_frame) {
        // test hook: one constant-envelope frame, PAPR exactly 0 dB
        TimeFrame frame{Eigen::VectorXcd::Ones(spec.cfg.frame_len()),
                        spec.cfg.sample_rate_hz()};
        const double v = papr_db(frame);
        papr_preeq.assign(spec.papr_frames, v);
        papr_plain.assign(spec.papr_frames, v);
    } else {
        const IniModel model = build_model(spec);
        const StackedChain chain(spec.cfg);
        const Eigen::MatrixXcd synthesis_preeq =
            chain.synthesis * model.pre_equalizer();
        const int b = spec.order.bits_per_symbol();
        const int dim = spec.cfg.stacked_dim();
        const double fs = spec.cfg.sample_rate_hz();

        papr_preeq.resize(spec.papr_frames);
        papr_plain.resize(spec.papr_frames);
        const int threads = std::max(1, spec.threads);
        auto worker = [&](long long lo, long long hi) {
            for (long long f = lo; f < hi; ++f) {
                RngStream rng(spec.seed, static_cast<std::uint64_t>(f), kPaprBits);
                const auto bits = draw_bits(rng, static_cast<std::size_t>(dim) * b);
                const Eigen::VectorXcd x = qam_modulate(bits, spec.order);
                papr_plain[f] = papr_db({chain.synthesis * x, fs});
                papr_preeq[f] = papr_db({synthesis_preeq * x, fs});
            }
        };
        if (threads == 1) {
            worker(0, spec.papr_frames);
        } else {
            std::vector<std::thread> pool;
            const long long per = (spec.papr_frames + threads - 1) / threads;
            for (int t = 0; t < threads; ++t) {
                const long long lo = t * per;
                const long long hi = std::min<long long>(spec.papr_frames, lo + per);
                if (lo >= hi) break;
                pool.emplace_back(worker, lo, hi);
            }
            for (auto& th : pool) th.join();
        }
    }

    result.ccdf_preeq = ccdf(papr_preeq, result.thresholds_db).ccdf;
    result.ccdf_plain = ccdf(papr_plain, result.thresholds_db).ccdf;
    return result;
}

std::string PaprResult::to_csv() const {
    std::ostringstream out;
    out << "threshold_db,ccdf_preeq,ccdf_plain,frames\n";
    for (std::size_t i = 0; i < thresholds_db.size(); ++i)
        out << format_double(thresholds_db[i]) << ',' << format_double(ccdf_preeq[i])
            << ',' << format_double(ccdf_plain[i]) << ',' << frames << '\n';
    return out.str();
}

std::vector<std::filesystem::path> export_matrix(const ExperimentSpec& spec,
                                                 const std::filesystem::path& dir) {
    const IniModel model = build_model(spec);
    std::filesystem::create_directories(dir);

    json header;
    header["mu_low"] = spec.cfg.mu_low;
    header["mu_high"] = spec.cfg.mu_high;
    header["n_fft"] = spec.cfg.n_fft;
    header["n_cp"] = spec.cfg.n_cp;
    header["p_edge"] = spec.cfg.p_edge;
    header["k_edge"] = spec.cfg.k_edge;
    header["condition_number"] = model.condition_number();
    const std::string head = header.dump();

    const std::vector<std::filesystem::path> paths = {
        dir / "w_ini.csv", dir / "w_ini_inv.csv", dir / "w_ini.bin",
        dir / "w_ini_inv.bin"};
    matrix_to_csv(model.w(), head, paths[0]);
    matrix_to_csv(model.pre_equalizer(), head, paths[1]);
    matrix_to_binary(model.w(), head, paths[2]);
    matrix_to_binary(model.pre_equalizer(), head, paths[3]);
    return paths;
}

std::string ber_plot_script(const ExperimentSpec& spec, const std::string& csv_name) {
    std::ostringstream out;
    out << "#!/usr/bin/env python3\n";
    out << "# Generated alongside " << csv_name << "; overlays the closed-form\n";
    out << "# Rayleigh/AWGN reference curves embedded below.\n";
    out << "import csv\n";
    out << "import collections\n";
    out << "import matplotlib\n";
    out << "matplotlib.use('Agg')\n";
    out << "import matplotlib.pyplot as plt\n\n";
    out << "theory = [\n";
    for (const double e : spec.ebn0_db)
        out << "    (" << format_double(e) << ", "
            << format_double(theoretical_ber(spec.order, e, spec.channel)) << "),\n";
    out << "]\n\n";
    out << "rows = collections.defaultdict(list)\n";
    out << "with open('" << csv_name << "') as f:\n";
    out << "    for r in csv.DictReader(f):\n";
    out << "        key = (r['experiment'], r['numerology'])\n";
    out << "        rows[key].append((float(r['ebn0_db']), float(r['ber'])))\n\n";
    out << "plt.figure(figsize=(7, 5))\n";
    out << "plt.semilogy([e for e, _ in theory], [max(b, 1e-12) for _, b in theory],\n";
    out << "             'k-', label='theoretical')\n";
    out << "markers = {'ber_preeq': 'o', 'ber_plain': 's'}\n";
    out << "for (exp, mu), pts in sorted(rows.items()):\n";
    out << "    pts.sort()\n";
    out << "    plt.semilogy([e for e, _ in pts], [max(b, 1e-12) for _, b in pts],\n";
    out << "                 marker=markers.get(exp, 'x'), linestyle='--',\n";
    out << "                 label=f'{exp} mu={mu}')\n";
    out << "plt.xlabel('Eb/N0 (dB)')\n";
    out << "plt.ylabel('BER')\n";
    out << "plt.grid(True, which='both', alpha=0.3)\n";
    out << "plt.legend()\n";
    out << "plt.title('" << spec.order.order << "-QAM, " << to_string(spec.channel)
        << "')\n";
    out << "plt.savefig('" << csv_name << ".png', dpi=150)\n";
    out << "print('wrote " << csv_name << ".png')\n";
    return out.str();
}

std::string papr_plot_script(const std::string& csv_name) {
    std::ostringstream out;
    out << "#!/usr/bin/env python3\n";
    out << "# Generated alongside " << csv_name << ".\n";
    out << "import csv\n";
    out << "import matplotlib\n";
    out << "matplotlib.use('Agg')\n";
    out << "import matplotlib.pyplot as plt\n\n";
    out << "t, pre, plain = [], [], []\n";
    out << "with open('" << csv_name << "') as f:\n";
    out << "    for r in csv.DictReader(f):\n";
    out << "        t.append(float(r['threshold_db']))\n";
    out << "        pre.append(float(r['ccdf_preeq']))\n";
    out << "        plain.append(float(r['ccdf_plain']))\n\n";
    out << "plt.figure(figsize=(7, 5))\n";
    out << "plt.semilogy(t, [max(v, 1e-9) for v in pre], 'o-', markevery=20,\n";
    out << "             label='pre-equalized')\n";
    out << "plt.semilogy(t, [max(v, 1e-9) for v in plain], '^-', markevery=20,\n";
    out << "             label='plain')\n";
    out << "plt.xlabel('PAPR threshold (dB)')\n";
    out << "plt.ylabel('CCDF')\n";
    out << "plt.ylim(1e-5, 1)\n";
    out << "plt.grid(True, which='both', alpha=0.3)\n";
    out << "plt.legend()\n";
    out << "plt.savefig('" << csv_name << ".png', dpi=150)\n";
    out << "print('wrote " << csv_name << ".png')\n";
    return out.str();
}

}  // namespace inipre
