#include "blochdrive/scenarios/csv.hpp"

#include <cstdio>

#include "blochdrive/core/errors.hpp"

namespace blochdrive {

std::string format_number(double x, int precision) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", precision, x);
  return buf;
}

CsvWriter::CsvWriter(const std::filesystem::path& path, std::vector<std::string> columns,
                     const std::vector<std::pair<std::string, std::string>>& meta, int precision)
    : out_(path, std::ios::binary | std::ios::trunc), width_(columns.size()), precision_(precision) {
  if (!out_) throw ConfigError("cannot write '" + path.string() + "'");
  out_ << kCsvVersionLine << '\n';
  for (const auto& [k, v] : meta) out_ << "# " << k << '=' << v << '\n';
  for (std::size_t i = 0; i < columns.size(); ++i) out_ << (i ? "," : "") << columns[i];
  out_ << '\n';
}

void CsvWriter::row(std::initializer_list<double> values) {
  row(std::span<const double>(values.begin(), values.size()));
}

void CsvWriter::row(std::span<const double> values) {
  if (values.size() != width_) throw ArgumentError("csv row has the wrong number of columns");
  for (std::size_t i = 0; i < values.size(); ++i)
    out_ << (i ? "," : "") << format_number(values[i], precision_);
  out_ << '\n';
}

}  // namespace blochdrive
