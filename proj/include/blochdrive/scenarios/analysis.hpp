#pragma once

#include <span>
#include <vector>

#include "blochdrive/numeric/evolution.hpp"

namespace blochdrive {

std::vector<double> sample_times(const ObservableSeries& series);
std::vector<double> column(const ObservableSeries& series, double ObservableSample::*member);

// Linear interpolation; clamps outside the sampled range.
double interpolate_at(std::span<const double> times, std::span<const double> values, double t);

// Centered running mean over `window` points, shrinking at the ends.
std::vector<double> moving_average(std::span<const double> values, int window);

// Period of an oscillating signal from crossings of its midline,
// (max+min)/2. Successive crossings are half a period apart. Throws
// StateError when fewer than two crossings are seen.
double measure_period(std::span<const double> times, std::span<const double> values);

double peak_to_peak(std::span<const double> values);

// Mean of `values` over samples with t in [t0, t1].
double mean_over(std::span<const double> times, std::span<const double> values, double t0,
                 double t1);

// Relative spread (max - min) / first of the widths, counting only samples
// whose edge occupancy is below `edge_limit`.
double width_variation(const ObservableSeries& series, double edge_limit);

// |a - b| measured around the circle.
double circular_distance(double a, double b);

// Index of the sample closest to t.
std::size_t nearest_sample(const ObservableSeries& series, double t);

}  // namespace blochdrive
