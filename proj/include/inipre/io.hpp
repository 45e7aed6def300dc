#pragma once

#include <Eigen/Dense>
#include <filesystem>
#include <string>

#include "inipre/chain.hpp"
#include "inipre/config.hpp"

namespace inipre {

// TimeFrame serialization: CSV with two columns (re,imag per line) and a raw
// little-endian binary of interleaved float64 pairs, sample order.
void frame_to_csv(const TimeFrame& frame, const std::filesystem::path& path);
TimeFrame frame_from_csv(const std::filesystem::path& path, double sample_rate_hz = 0.0);
void frame_to_binary(const TimeFrame& frame, const std::filesystem::path& path);
TimeFrame frame_from_binary(const std::filesystem::path& path, double sample_rate_hz = 0.0);

// Matrix export: CSV rows "row,col,re,im" preceded by '#' header lines, and
// a binary layout of magic "INIPREW1", u32 rows, u32 cols, u32 header bytes,
// the UTF-8 JSON header, then row-major interleaved float64 pairs. All
// integers and floats little-endian. The header records the configuration
// and the condition number.
void matrix_to_csv(const Eigen::MatrixXcd& m, const std::string& header_json,
                   const std::filesystem::path& path);
Eigen::MatrixXcd matrix_from_csv(const std::filesystem::path& path);
void matrix_to_binary(const Eigen::MatrixXcd& m, const std::string& header_json,
                      const std::filesystem::path& path);
Eigen::MatrixXcd matrix_from_binary(const std::filesystem::path& path,
                                    std::string* header_json = nullptr);

}  // namespace inipre
