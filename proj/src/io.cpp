#include "inipre/io.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace inipre {

static_assert(std::endian::native == std::endian::little,
              "serialization assumes a little-endian host");

namespace {

constexpr char kMatrixMagic[8] = {'I', 'N', 'I', 'P', 'R', 'E', 'W', '1'};

std::string format_double(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::ofstream open_out(const std::filesystem::path& path, bool binary) {
    std::ofstream out(path, binary ? std::ios::binary : std::ios::out);
    if (!out) throw ConfigError("cannot open '" + path.string() + "' for writing");
    return out;
}

std::ifstream open_in(const std::filesystem::path& path, bool binary) {
    std::ifstream in(path, binary ? std::ios::binary : std::ios::in);
    if (!in) throw ConfigError("cannot open '" + path.string() + "' for reading");
    return in;
}

void write_u32(std::ofstream& out, std::uint32_t v) {
    out.write(reinterpret_cast<const char*>(&v), sizeof v);
}

std::uint32_t read_u32(std::ifstream& in) {
    std::uint32_t v = 0;
    in.read(reinterpret_cast<char*>(&v), sizeof v);
    return v;
}

}  // namespace

void frame_to_csv(const TimeFrame& frame, const std::filesystem::path& path) {
    auto out = open_out(path, false);
    for (Eigen::Index i = 0; i < frame.samples.size(); ++i)
        out << format_double(frame.samples[i].real()) << ','
            << format_double(frame.samples[i].imag()) << '\n';
}

TimeFrame frame_from_csv(const std::filesystem::path& path, double sample_rate_hz) {
    auto in = open_in(path, false);
    std::vector<std::complex<double>> samples;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        const auto comma = line.find(',');
        if (comma == std::string::npos)
            throw ConfigError("malformed frame CSV line: " + line);
        samples.emplace_back(std::stod(line.substr(0, comma)),
                             std::stod(line.substr(comma + 1)));
    }
    TimeFrame frame{Eigen::VectorXcd(samples.size()), sample_rate_hz};
    for (std::size_t i = 0; i < samples.size(); ++i) frame.samples[i] = samples[i];
    return frame;
}

void frame_to_binary(const TimeFrame& frame, const std::filesystem::path& path) {
    auto out = open_out(path, true);
    out.write(reinterpret_cast<const char*>(frame.samples.data()),
              static_cast<std::streamsize>(frame.samples.size() * 2 * sizeof(double)));
}

TimeFrame frame_from_binary(const std::filesystem::path& path, double sample_rate_hz) {
    auto in = open_in(path, true);
    in.seekg(0, std::ios::end);
    const auto bytes = static_cast<std::size_t>(in.tellg());
    in.seekg(0);
    if (bytes % (2 * sizeof(double)) != 0)
        throw ConfigError("frame binary size is not a whole number of complex samples");
    TimeFrame frame{Eigen::VectorXcd(bytes / (2 * sizeof(double))), sample_rate_hz};
    in.read(reinterpret_cast<char*>(frame.samples.data()),
            static_cast<std::streamsize>(bytes));
    return frame;
}

void matrix_to_csv(const Eigen::MatrixXcd& m, const std::string& header_json,
                   const std::filesystem::path& path) {
    auto out = open_out(path, false);
    out << "# " << header_json << '\n';
    out << "row,col,re,im\n";
    for (Eigen::Index r = 0; r < m.rows(); ++r)
        for (Eigen::Index c = 0; c < m.cols(); ++c)
            out << r << ',' << c << ',' << format_double(m(r, c).real()) << ','
                << format_double(m(r, c).imag()) << '\n';
}

Eigen::MatrixXcd matrix_from_csv(const std::filesystem::path& path) {
    auto in = open_in(path, false);
    std::string line;
    struct Entry {
        long r, c;
        double re, im;
    };
    std::vector<Entry> entries;
    long max_r = -1, max_c = -1;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#' || line.rfind("row,", 0) == 0) continue;
        Entry e{};
        if (std::sscanf(line.c_str(), "%ld,%ld,%lf,%lf", &e.r, &e.c, &e.re, &e.im) != 4)
            throw ConfigError("malformed matrix CSV line: " + line);
        max_r = std::max(max_r, e.r);
        max_c = std::max(max_c, e.c);
        entries.push_back(e);
    }
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(max_r + 1, max_c + 1);
    for (const auto& e : entries) m(e.r, e.c) = {e.re, e.im};
    return m;
}

void matrix_to_binary(const Eigen::MatrixXcd& m, const std::string& header_json,
                      const std::filesystem::path& path) {
    auto out = open_out(path, true);
    out.write(kMatrixMagic, sizeof kMatrixMagic);
    write_u32(out, static_cast<std::uint32_t>(m.rows()));
    write_u32(out, static_cast<std::uint32_t>(m.cols()));
    write_u32(out, static_cast<std::uint32_t>(header_json.size()));
    out.write(header_json.data(), static_cast<std::streamsize>(header_json.size()));
    // row-major so the layout matches the CSV ordering
    for (Eigen::Index r = 0; r < m.rows(); ++r)
        for (Eigen::Index c = 0; c < m.cols(); ++c) {
            const double re = m(r, c).real(), im = m(r, c).imag();
            out.write(reinterpret_cast<const char*>(&re), sizeof re);
            out.write(reinterpret_cast<const char*>(&im), sizeof im);
        }
}

Eigen::MatrixXcd matrix_from_binary(const std::filesystem::path& path,
                                    std::string* header_json) {
    auto in = open_in(path, true);
    char magic[8];
    in.read(magic, sizeof magic);
    if (!in || std::memcmp(magic, kMatrixMagic, sizeof magic) != 0)
        throw ConfigError("'" + path.string() + "' is not a matrix binary file");
    const auto rows = read_u32(in);
    const auto cols = read_u32(in);
    const auto header_len = read_u32(in);
    std::string header(header_len, '\0');
    in.read(header.data(), header_len);
    if (header_json) *header_json = header;
    Eigen::MatrixXcd m(rows, cols);
    for (std::uint32_t r = 0; r < rows; ++r)
        for (std::uint32_t c = 0; c < cols; ++c) {
            double re = 0.0, im = 0.0;
            in.read(reinterpret_cast<char*>(&re), sizeof re);
            in.read(reinterpret_cast<char*>(&im), sizeof im);
            m(r, c) = {re, im};
        }
    if (!in) throw ConfigError("matrix binary file truncated");
    return m;
}

}  // namespace inipre
