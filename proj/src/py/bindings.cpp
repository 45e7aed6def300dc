#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include "inipre/channel.hpp"
#include "inipre/experiment.hpp"
#include "inipre/io.hpp"

namespace py = pybind11;
using namespace inipre;

PYBIND11_MODULE(_inipre, m) {
    m.doc() = "mixed-numerology OFDM simulation with INI pre-equalization";

    py::register_exception<ConfigError>(m, "ConfigError", PyExc_ValueError);
    py::register_exception<DimensionError>(m, "DimensionError", PyExc_ValueError);
    py::register_exception<NumericalError>(m, "NumericalError", PyExc_ArithmeticError);

    py::class_<MixedConfig>(m, "MixedConfig")
        .def_readonly("mu_low", &MixedConfig::mu_low)
        .def_readonly("mu_high", &MixedConfig::mu_high)
        .def_readonly("n_fft", &MixedConfig::n_fft)
        .def_readonly("m_fft", &MixedConfig::m_fft)
        .def_readonly("q_ratio", &MixedConfig::q_ratio)
        .def_readonly("n_cp", &MixedConfig::n_cp)
        .def_readonly("m_cp", &MixedConfig::m_cp)
        .def_readonly("p_edge", &MixedConfig::p_edge)
        .def_readonly("k_edge", &MixedConfig::k_edge)
        .def_readonly("scs_base_hz", &MixedConfig::scs_base_hz)
        .def("frame_len", &MixedConfig::frame_len)
        .def("slot_len", &MixedConfig::slot_len)
        .def("stacked_dim", &MixedConfig::stacked_dim)
        .def("subcarrier_spacing_hz", &MixedConfig::subcarrier_spacing_hz)
        .def("sample_rate_hz", &MixedConfig::sample_rate_hz);

    m.def("make_mixed_config", &make_mixed_config, py::arg("mu_low"),
          py::arg("mu_high"), py::arg("n_fft"), py::arg("n_cp"), py::arg("p_edge"),
          py::arg("k_edge"));

    py::class_<BandRef>(m, "BandRef")
        .def_static("low", &BandRef::low)
        .def_static("high_slot", &BandRef::high_slot, py::arg("slot"))
        .def_readonly("high", &BandRef::high)
        .def_readonly("slot", &BandRef::slot);

    m.def(
        "qam_modulate",
        [](const std::vector<std::uint8_t>& bits, int order) {
            return qam_modulate(bits, QamOrder::of(order));
        },
        py::arg("bits"), py::arg("order"));
    m.def(
        "qam_demodulate_hard",
        [](const Eigen::VectorXcd& symbols, int order) {
            return qam_demodulate_hard(symbols, QamOrder::of(order));
        },
        py::arg("symbols"), py::arg("order"));
    m.def(
        "qam_constellation",
        [](int order) { return qam_constellation(QamOrder::of(order)); },
        py::arg("order"));

    py::class_<SymbolGrid>(m, "SymbolGrid")
        .def_readwrite("x0", &SymbolGrid::x0)
        .def_readwrite("x1", &SymbolGrid::x1)
        .def("stacked", &SymbolGrid::stacked)
        .def_static("from_stacked", &SymbolGrid::from_stacked, py::arg("stacked"),
                    py::arg("cfg"))
        .def_static(
            "from_bits",
            [](const std::vector<std::uint8_t>& bits, int order,
               const MixedConfig& cfg) {
                return SymbolGrid::from_bits(bits, QamOrder::of(order), cfg);
            },
            py::arg("bits"), py::arg("order"), py::arg("cfg"))
        .def_static("zero", &SymbolGrid::zero, py::arg("cfg"));

    py::class_<TimeFrame>(m, "TimeFrame")
        .def(py::init([](const Eigen::VectorXcd& samples, double fs) {
                 return TimeFrame{samples, fs};
             }),
             py::arg("samples"), py::arg("sample_rate_hz") = 0.0)
        .def_readwrite("samples", &TimeFrame::samples)
        .def_readwrite("sample_rate_hz", &TimeFrame::sample_rate_hz);

    m.def("idft_with_cp", &idft_with_cp, py::arg("spec"), py::arg("size"),
          py::arg("cp"));
    m.def("demod_low", &demod_low, py::arg("frame"), py::arg("cfg"));
    m.def("demod_high", &demod_high, py::arg("frame"), py::arg("q"), py::arg("cfg"));
    m.def("demod_stacked", &demod_stacked, py::arg("frame"), py::arg("cfg"));
    m.def("build_frame", &build_frame, py::arg("grid"), py::arg("cfg"),
          py::arg("pre_eq") = static_cast<const IniModel*>(nullptr));

    py::class_<IniBlock>(m, "IniBlock")
        .def_readonly("victim", &IniBlock::victim)
        .def_readonly("interferer", &IniBlock::interferer)
        .def_readonly("entries", &IniBlock::entries);

    py::class_<IniModel>(m, "IniModel")
        .def_property_readonly("w", &IniModel::w)
        .def_property_readonly("pre_equalizer", &IniModel::pre_equalizer)
        .def_property_readonly("condition_number", &IniModel::condition_number)
        .def_property_readonly("config", &IniModel::config)
        .def_static("inversions_performed", &IniModel::inversions_performed);

    m.def("w_block_closed_form", &w_block_closed_form, py::arg("victim"),
          py::arg("interferer"), py::arg("cfg"));
    m.def("w_block_oracle", &w_block_oracle, py::arg("victim"), py::arg("interferer"),
          py::arg("cfg"));
    m.def("assemble_w", &assemble_w, py::arg("cfg"),
          py::arg("condition_limit") = IniModel::kDefaultConditionLimit);
    m.def("pre_equalize", &pre_equalize, py::arg("grid"), py::arg("model"));
    m.def("residual_ini", &residual_ini, py::arg("grid"), py::arg("cfg"),
          py::arg("model") = static_cast<const IniModel*>(nullptr));

    py::class_<RngStream>(m, "RngStream")
        .def(py::init<std::uint64_t, std::uint64_t, std::uint64_t>(), py::arg("seed"),
             py::arg("stream") = 0, py::arg("substream") = 0)
        .def("uniform", &RngStream::uniform)
        .def("gaussian", &RngStream::gaussian);

    py::class_<FadeRealization>(m, "FadeRealization")
        .def(py::init([](std::complex<double> h) { return FadeRealization{h}; }),
             py::arg("h"))
        .def_readonly("h", &FadeRealization::h);

    m.def("awgn", &awgn, py::arg("frame"), py::arg("noise_variance"), py::arg("rng"));
    m.def("rayleigh_block", &rayleigh_block, py::arg("frame"), py::arg("rng"));
    m.def("one_tap_equalize", &one_tap_equalize, py::arg("demodulated"),
          py::arg("fade"));

    m.def("ber", &ber, py::arg("tx"), py::arg("rx"));
    m.def("evm_db", &evm_db, py::arg("received"), py::arg("reference"));
    m.def("papr_db", &papr_db, py::arg("frame"));
    m.def("post_dft_snr", &post_dft_snr, py::arg("cfg"), py::arg("noise_variance"),
          py::arg("band"));
    m.def(
        "theoretical_ber",
        [](int order, double ebn0_db, const std::string& channel) {
            return theoretical_ber(QamOrder::of(order), ebn0_db,
                                   channel_model_from_string(channel));
        },
        py::arg("order"), py::arg("ebn0_db"), py::arg("channel"));

    py::class_<BerRow>(m, "BerRow")
        .def_readonly("experiment", &BerRow::experiment)
        .def_readonly("numerology", &BerRow::numerology)
        .def_readonly("qam_order", &BerRow::qam_order)
        .def_readonly("channel", &BerRow::channel)
        .def_readonly("ebn0_db", &BerRow::ebn0_db)
        .def_readonly("bits", &BerRow::bits)
        .def_readonly("errors", &BerRow::errors)
        .def_readonly("ber", &BerRow::ber)
        .def_readonly("ci95", &BerRow::ci95);

    py::class_<PaprResult>(m, "PaprResult")
        .def_readonly("thresholds_db", &PaprResult::thresholds_db)
        .def_readonly("ccdf_preeq", &PaprResult::ccdf_preeq)
        .def_readonly("ccdf_plain", &PaprResult::ccdf_plain)
        .def_readonly("frames", &PaprResult::frames)
        .def("to_csv", &PaprResult::to_csv);

    py::class_<CheckResult>(m, "CheckResult")
        .def_readonly("name", &CheckResult::name)
        .def_readonly("measured", &CheckResult::measured)
        .def_readonly("limit", &CheckResult::limit)
        .def_readonly("pass_", &CheckResult::pass);

    py::class_<VerifyReport>(m, "VerifyReport")
        .def_readonly("checks", &VerifyReport::checks)
        .def("all_pass", &VerifyReport::all_pass)
        .def("to_text", &VerifyReport::to_text);

    py::class_<ExperimentSpec>(m, "ExperimentSpec")
        .def_static("from_file", &ExperimentSpec::from_file, py::arg("path"))
        .def_property(
            "qam_order", [](const ExperimentSpec& s) { return s.order.order; },
            [](ExperimentSpec& s, int o) { s.order = QamOrder::of(o); })
        .def_readwrite("ebn0_db", &ExperimentSpec::ebn0_db)
        .def_readwrite("min_bits", &ExperimentSpec::min_bits)
        .def_readwrite("max_bit_errors", &ExperimentSpec::max_bit_errors)
        .def_readwrite("max_bits", &ExperimentSpec::max_bits)
        .def_readwrite("papr_frames", &ExperimentSpec::papr_frames)
        .def_readwrite("seed", &ExperimentSpec::seed)
        .def_readwrite("out_dir", &ExperimentSpec::out_dir)
        .def_readwrite("threads", &ExperimentSpec::threads)
        .def_property_readonly("cfg",
                               [](const ExperimentSpec& s) { return s.cfg; })
        .def("to_json", &ExperimentSpec::to_json);

    m.def("run_verify", &run_verify, py::arg("spec"));
    m.def(
        "run_ber_sweep",
        [](const ExperimentSpec& spec) { return run_ber_sweep(spec); },
        py::arg("spec"), py::call_guard<py::gil_scoped_release>());
    m.def("run_papr", &run_papr, py::arg("spec"),
          py::call_guard<py::gil_scoped_release>());
    m.def("export_matrix", &export_matrix, py::arg("spec"), py::arg("dir"));

    m.def("frame_to_csv", &frame_to_csv, py::arg("frame"), py::arg("path"));
    m.def("frame_from_csv", &frame_from_csv, py::arg("path"),
          py::arg("sample_rate_hz") = 0.0);
    m.def("frame_to_binary", &frame_to_binary, py::arg("frame"), py::arg("path"));
    m.def("frame_from_binary", &frame_from_binary, py::arg("path"),
          py::arg("sample_rate_hz") = 0.0);

    m.attr("__version__") = "0.1.0";
}
