#pragma once

#include <filesystem>
#include <fstream>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace blochdrive {

inline constexpr const char* kCsvVersionLine = "# bloch-drive csv v1";

// Writes one CSV file: version line, `# key=value` metadata lines, column
// header, then rows of numbers at fixed significant digits.
class CsvWriter {
 public:
  CsvWriter(const std::filesystem::path& path, std::vector<std::string> columns,
            const std::vector<std::pair<std::string, std::string>>& meta, int precision = 17);

  void row(std::initializer_list<double> values);
  void row(std::span<const double> values);

 private:
  std::ofstream out_;
  std::size_t width_;
  int precision_;
};

std::string format_number(double x, int precision = 17);

}  // namespace blochdrive
