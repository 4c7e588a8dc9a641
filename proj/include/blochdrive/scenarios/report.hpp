#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace blochdrive {

// How a row's error is formed. `at_least` rows carry the bound in the
// predicted column and an error of max(0, bound - measured).
enum class Check { absolute, relative, circular, at_least };

std::string_view to_string(Check c);

struct ReportRow {
  std::string quantity;
  double predicted = 0.0;
  double measured = 0.0;
  double abs_error = 0.0;
  double rel_error = 0.0;
  double tolerance = 0.0;
  Check check = Check::absolute;
  bool pass = false;

  double error() const;
};

class ComparisonReport {
 public:
  ComparisonReport() = default;
  explicit ComparisonReport(std::string scenario) : scenario_(std::move(scenario)) {}

  const ReportRow& add(std::string quantity, double predicted, double measured, double tolerance,
                       Check check);
  void note(std::string line) { notes_.push_back(std::move(line)); }

  const std::string& scenario() const { return scenario_; }
  const std::vector<ReportRow>& rows() const { return rows_; }
  const std::vector<std::string>& notes() const { return notes_; }
  const ReportRow* find(std::string_view quantity) const;
  bool passed() const;

  std::string render(int precision = 17) const;
  // Reads back the output of render(). Throws ArgumentError on malformed text.
  static ComparisonReport parse(std::string_view text);

 private:
  std::string scenario_;
  std::vector<ReportRow> rows_;
  std::vector<std::string> notes_;
};

}  // namespace blochdrive
