#pragma once

#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "bandsinc/spectral.hpp"
#include "bandsinc/transforms.hpp"

namespace bandsinc::csv {

/// Numeric CSV with one header row.
struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<double>> rows;
};

/// 17 significant digits, enough to round-trip any double.
std::string format_double(double value);

Table parse_table(std::istream& in, const std::string& source);
Table read_table(const std::filesystem::path& path);
void write_table(std::ostream& out, const Table& table);
/// Writes to a sibling temporary file and renames it into place.
void write_table_atomic(const std::filesystem::path& path, const Table& table);

/// Columns k1..kd,re,im; one row per k in I_M^d in any order.
Spectrum read_spectrum(const std::filesystem::path& path, int M, int d);
Table spectrum_table(const Spectrum& spectrum);

/// Columns x1..xd.
std::vector<std::vector<double>> read_nodes(const std::filesystem::path& path, int d);

/// Columns j,re,im with j counted from 1.
Table values_table(std::span<const Complex> values);

}  // namespace bandsinc::csv
