#include "blochdrive/scenarios/analysis.hpp"

#include <algorithm>
#include <cmath>

#include "blochdrive/core/errors.hpp"

namespace blochdrive {

std::vector<double> sample_times(const ObservableSeries& series) {
  return column(series, &ObservableSample::t);
}

std::vector<double> column(const ObservableSeries& series, double ObservableSample::*member) {
  std::vector<double> out;
  out.reserve(series.size());
  for (const auto& s : series.samples) out.push_back(s.*member);
  return out;
}

double interpolate_at(std::span<const double> times, std::span<const double> values, double t) {
  if (times.empty() || times.size() != values.size())
    throw ArgumentError("interpolate_at: empty or mismatched series");
  if (t <= times.front()) return values.front();
  if (t >= times.back()) return values.back();
  const auto it = std::upper_bound(times.begin(), times.end(), t);
  const std::size_t i = static_cast<std::size_t>(it - times.begin());
  const double w = (t - times[i - 1]) / (times[i] - times[i - 1]);
  return values[i - 1] + w * (values[i] - values[i - 1]);
}

std::vector<double> moving_average(std::span<const double> values, int window) {
  if (window < 1) throw ArgumentError("moving_average: window must be >= 1");
  const long n = static_cast<long>(values.size());
  const long half = window / 2;
  std::vector<double> prefix(values.size() + 1, 0.0);
  for (long i = 0; i < n; ++i) prefix[i + 1] = prefix[i] + values[i];
  std::vector<double> out(values.size());
  for (long i = 0; i < n; ++i) {
    const long lo = std::max(0L, i - half);
    const long hi = std::min(n - 1, i + half);
    out[i] = (prefix[hi + 1] - prefix[lo]) / static_cast<double>(hi - lo + 1);
  }
  return out;
}

double measure_period(std::span<const double> times, std::span<const double> values) {
  if (times.size() != values.size() || times.size() < 3)
    throw ArgumentError("measure_period: need at least three samples");
  const auto [lo, hi] = std::minmax_element(values.begin(), values.end());
  const double mid = 0.5 * (*lo + *hi);
  std::vector<double> crossings;
  for (std::size_t i = 1; i < values.size(); ++i) {
    const double a = values[i - 1] - mid;
    const double b = values[i] - mid;
    if ((a < 0.0 && b >= 0.0) || (a >= 0.0 && b < 0.0)) {
      const double w = a / (a - b);
      crossings.push_back(times[i - 1] + w * (times[i] - times[i - 1]));
    }
  }
  if (crossings.size() < 2) throw StateError("measure_period: fewer than two midline crossings");
  return 2.0 * (crossings.back() - crossings.front()) / static_cast<double>(crossings.size() - 1);
}

double peak_to_peak(std::span<const double> values) {
  if (values.empty()) return 0.0;
  const auto [lo, hi] = std::minmax_element(values.begin(), values.end());
  return *hi - *lo;
}

double mean_over(std::span<const double> times, std::span<const double> values, double t0,
                 double t1) {
  double sum = 0.0;
  int count = 0;
  for (std::size_t i = 0; i < times.size(); ++i) {
    if (times[i] >= t0 && times[i] <= t1) {
      sum += values[i];
      ++count;
    }
  }
  if (count == 0) throw ArgumentError("mean_over: no samples in window");
  return sum / count;
}

double width_variation(const ObservableSeries& series, double edge_limit) {
  if (series.samples.empty()) return 0.0;
  const double w0 = series.samples.front().width;
  double lo = w0, hi = w0;
  for (const auto& s : series.samples) {
    if (s.edge_occupancy >= edge_limit) continue;
    lo = std::min(lo, s.width);
    hi = std::max(hi, s.width);
  }
  return (hi - lo) / w0;
}

double circular_distance(double a, double b) { return std::abs(wrap_angle(a - b)); }

std::size_t nearest_sample(const ObservableSeries& series, double t) {
  if (series.samples.empty()) throw ArgumentError("nearest_sample: empty series");
  std::size_t best = 0;
  for (std::size_t i = 1; i < series.size(); ++i)
    if (std::abs(series[i].t - t) < std::abs(series[best].t - t)) best = i;
  return best;
}

}  // namespace blochdrive
