#include "bandsinc/csv.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <system_error>

#include "bandsinc/error.hpp"
#include "bandsinc/geometry.hpp"

namespace bandsinc::csv {

namespace {

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> cells;
  std::string cell;
  std::istringstream stream(line);
  while (std::getline(stream, cell, ',')) {
    const auto first = cell.find_first_not_of(" \t\r");
    const auto last = cell.find_last_not_of(" \t\r");
    cells.push_back(first == std::string::npos ? std::string() : cell.substr(first, last - first + 1));
  }
  if (!line.empty() && line.back() == ',') cells.emplace_back();
  return cells;
}

double parse_cell(const std::string& cell, const std::string& source, std::size_t line) {
  const std::string where = source + ":" + std::to_string(line);
  if (cell.empty()) throw Error(Errc::Parse, where + ": empty cell");
  std::size_t consumed = 0;
  double value = 0.0;
  try {
    value = std::stod(cell, &consumed);
  } catch (const std::exception&) {
    throw Error(Errc::Parse, where + ": not a number: '" + cell + "'");
  }
  if (consumed != cell.size()) throw Error(Errc::Parse, where + ": trailing characters in '" + cell + "'");
  return value;
}

void expect_header(const Table& table, const std::vector<std::string>& expected, const std::string& source) {
  if (table.header != expected) {
    std::string want;
    for (const auto& name : expected) want += (want.empty() ? "" : ",") + name;
    throw Error(Errc::Parse, source + ": expected header '" + want + "'");
  }
}

}  // namespace

std::string format_double(double value) {
  char buffer[40];
  std::snprintf(buffer, sizeof buffer, "%.17g", value);
  return buffer;
}

Table parse_table(std::istream& in, const std::string& source) {
  Table table;
  std::string line;
  std::size_t line_number = 0;
  bool have_header = false;
  while (std::getline(in, line)) {
    ++line_number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    auto cells = split(line);
    if (!have_header) {
      table.header = std::move(cells);
      have_header = true;
      continue;
    }
    if (cells.size() != table.header.size()) {
      throw Error(Errc::Parse, source + ":" + std::to_string(line_number) + ": expected " +
                                   std::to_string(table.header.size()) + " columns, got " + std::to_string(cells.size()));
    }
    std::vector<double> row;
    row.reserve(cells.size());
    for (const auto& cell : cells) row.push_back(parse_cell(cell, source, line_number));
    table.rows.push_back(std::move(row));
  }
  if (!have_header) throw Error(Errc::Parse, source + ": missing header row");
  return table;
}

Table read_table(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::Io, "cannot open '" + path.string() + "'");
  return parse_table(in, path.string());
}

void write_table(std::ostream& out, const Table& table) {
  for (std::size_t c = 0; c < table.header.size(); ++c) out << (c ? "," : "") << table.header[c];
  out << '\n';
  for (const auto& row : table.rows) {
    for (std::size_t c = 0; c < row.size(); ++c) out << (c ? "," : "") << format_double(row[c]);
    out << '\n';
  }
}

void write_table_atomic(const std::filesystem::path& path, const Table& table) {
  std::filesystem::path temp = path;
  temp += ".tmp";
  {
    std::ofstream out(temp, std::ios::trunc);
    if (!out) throw Error(Errc::Io, "cannot write '" + temp.string() + "'");
    write_table(out, table);
    out.flush();
    if (!out) throw Error(Errc::Io, "write failed for '" + temp.string() + "'");
  }
  std::error_code ec;
  std::filesystem::rename(temp, path, ec);
  if (ec) {
    std::filesystem::remove(temp, ec);
    throw Error(Errc::Io, "cannot move output into '" + path.string() + "'");
  }
}

Spectrum read_spectrum(const std::filesystem::path& path, int M, int d) {
  const Table table = read_table(path);
  std::vector<std::string> expected;
  for (int t = 1; t <= d; ++t) expected.push_back("k" + std::to_string(t));
  expected.emplace_back("re");
  expected.emplace_back("im");
  expect_header(table, expected, path.string());

  const std::size_t count = ipow(static_cast<std::size_t>(M), d);
  Spectrum spectrum{M, d, std::vector<Complex>(count)};
  std::vector<bool> seen(count, false);
  for (std::size_t r = 0; r < table.rows.size(); ++r) {
    const auto& row = table.rows[r];
    MultiIndex k(static_cast<std::size_t>(d));
    for (int t = 0; t < d; ++t) {
      const double value = row[static_cast<std::size_t>(t)];
      if (value != std::floor(value) || value < -M / 2 || value >= M / 2) {
        throw Error(Errc::Parse, path.string() + ": row " + std::to_string(r + 1) + " has index outside I_M");
      }
      k[static_cast<std::size_t>(t)] = static_cast<int>(value);
    }
    const std::size_t i = linear_index(k, M);
    if (seen[i]) throw Error(Errc::Parse, path.string() + ": row " + std::to_string(r + 1) + " repeats an index");
    seen[i] = true;
    spectrum.values[i] = Complex(row[static_cast<std::size_t>(d)], row[static_cast<std::size_t>(d) + 1]);
  }
  for (std::size_t i = 0; i < count; ++i) {
    if (!seen[i]) {
      const auto k = multi_index(i, M, d);
      std::string text;
      for (int component : k) text += (text.empty() ? "" : ",") + std::to_string(component);
      throw Error(Errc::Parse, path.string() + ": missing spectrum row for k = (" + text + ")");
    }
  }
  return spectrum;
}

Table spectrum_table(const Spectrum& spectrum) {
  Table table;
  for (int t = 1; t <= spectrum.dim; ++t) table.header.push_back("k" + std::to_string(t));
  table.header.emplace_back("re");
  table.header.emplace_back("im");
  for (std::size_t i = 0; i < spectrum.values.size(); ++i) {
    std::vector<double> row;
    for (int component : multi_index(i, spectrum.bandwidth, spectrum.dim)) row.push_back(component);
    row.push_back(spectrum.values[i].real());
    row.push_back(spectrum.values[i].imag());
    table.rows.push_back(std::move(row));
  }
  return table;
}

std::vector<std::vector<double>> read_nodes(const std::filesystem::path& path, int d) {
  Table table = read_table(path);
  std::vector<std::string> expected;
  for (int t = 1; t <= d; ++t) expected.push_back("x" + std::to_string(t));
  expect_header(table, expected, path.string());
  return std::move(table.rows);
}

Table values_table(std::span<const Complex> values) {
  Table table{{"j", "re", "im"}, {}};
  table.rows.reserve(values.size());
  for (std::size_t j = 0; j < values.size(); ++j) {
    table.rows.push_back({static_cast<double>(j + 1), values[j].real(), values[j].imag()});
  }
  return table;
}

}  // namespace bandsinc::csv
