#include "blochdrive/scenarios/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <sstream>

#include "blochdrive/core/errors.hpp"
#include "blochdrive/core/types.hpp"

namespace blochdrive {

std::string_view to_string(Check c) {
  switch (c) {
    case Check::absolute: return "absolute";
    case Check::relative: return "relative";
    case Check::circular: return "circular";
    case Check::at_least: return "at_least";
  }
  return "absolute";
}

namespace {

Check parse_check(std::string_view s) {
  for (Check c : {Check::absolute, Check::relative, Check::circular, Check::at_least})
    if (to_string(c) == s) return c;
  throw ArgumentError("report: unknown check '" + std::string(s) + "'");
}

std::string fmt(double x, int precision) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", precision, x);
  return buf;
}

}  // namespace

double ReportRow::error() const {
  switch (check) {
    case Check::relative: return rel_error;
    case Check::at_least: return std::max(0.0, predicted - measured);
    default: return abs_error;
  }
}

const ReportRow& ComparisonReport::add(std::string quantity, double predicted, double measured,
                                       double tolerance, Check check) {
  ReportRow r;
  r.quantity = std::move(quantity);
  r.predicted = predicted;
  r.measured = measured;
  r.abs_error = check == Check::circular ? std::abs(wrap_angle(measured - predicted))
                                         : std::abs(measured - predicted);
  r.rel_error = predicted != 0.0 ? r.abs_error / std::abs(predicted) : r.abs_error;
  r.tolerance = tolerance;
  r.check = check;
  // NaN measurements never pass
  r.pass = r.error() <= tolerance;
  rows_.push_back(std::move(r));
  return rows_.back();
}

const ReportRow* ComparisonReport::find(std::string_view quantity) const {
  for (const auto& r : rows_)
    if (r.quantity == quantity) return &r;
  return nullptr;
}

bool ComparisonReport::passed() const {
  return std::all_of(rows_.begin(), rows_.end(), [](const ReportRow& r) { return r.pass; });
}

std::string ComparisonReport::render(int precision) const {
  std::ostringstream out;
  out << "# bloch-drive report v1\n";
  out << "scenario " << scenario_ << "\n";
  for (const auto& n : notes_) out << "note " << n << "\n";
  out << "columns quantity predicted measured abs_error rel_error tolerance check status\n";
  int passed_rows = 0;
  for (const auto& r : rows_) {
    out << "row " << r.quantity << ' ' << fmt(r.predicted, precision) << ' '
        << fmt(r.measured, precision) << ' ' << fmt(r.abs_error, precision) << ' '
        << fmt(r.rel_error, precision) << ' ' << fmt(r.tolerance, precision) << ' '
        << to_string(r.check) << ' ' << (r.pass ? "PASS" : "FAIL") << "\n";
    passed_rows += r.pass;
  }
  out << "result " << (passed() ? "PASS" : "FAIL") << ' ' << passed_rows << '/' << rows_.size()
      << "\n";
  return out.str();
}

ComparisonReport ComparisonReport::parse(std::string_view text) {
  ComparisonReport report;
  std::istringstream in{std::string(text)};
  std::string line;
  bool header = false;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (line == "# bloch-drive report v1") {
      header = true;
      continue;
    }
    std::istringstream ls(line);
    std::string tag;
    ls >> tag;
    if (tag == "scenario") {
      ls >> report.scenario_;
    } else if (tag == "note") {
      std::string rest;
      std::getline(ls, rest);
      report.notes_.push_back(rest.empty() ? rest : rest.substr(1));
    } else if (tag == "row") {
      ReportRow r;
      std::string num[5], check, status;
      if (!(ls >> r.quantity >> num[0] >> num[1] >> num[2] >> num[3] >> num[4] >> check >> status))
        throw ArgumentError("report: malformed row '" + line + "'");
      double* fields[5] = {&r.predicted, &r.measured, &r.abs_error, &r.rel_error, &r.tolerance};
      for (int i = 0; i < 5; ++i) *fields[i] = std::strtod(num[i].c_str(), nullptr);
      r.check = parse_check(check);
      r.pass = status == "PASS";
      report.rows_.push_back(std::move(r));
    }
  }
  if (!header) throw ArgumentError("report: missing version header");
  return report;
}

}  // namespace blochdrive
