#pragma once

#include <filesystem>
#include <string>
#include <utility>
#include <vector>

#include "blochdrive/numeric/evolution.hpp"
#include "blochdrive/scenarios/config.hpp"
#include "blochdrive/scenarios/report.hpp"

namespace blochdrive {

// Time axis used in the CSV outputs: t_written = t / scale.
struct TimeScale {
  std::string unit;
  double scale = 1.0;
};

TimeScale time_scale(const ScenarioConfig& config);

struct ScenarioOutcome {
  ComparisonReport report;
  std::filesystem::path directory;
  // Observable series of every numeric run, labelled by arm.
  std::vector<std::pair<std::string, ObservableSeries>> runs;

  int exit_code() const { return report.passed() ? 0 : 1; }
};

// Runs the numeric oracle and the analytic predictions for a scenario and
// writes envelope.csv, observables.csv, predicted.csv and report.txt into
// config.output.directory. A shaking_sweep scenario writes sweep.csv
// instead of the run files.
// Throws ConfigError for invalid configs and BoundaryContaminationError
// when a chain run reaches the edges.
ScenarioOutcome run_scenario(const ScenarioConfig& config);

// Analytic side only: writes predicted.csv and returns a short summary.
std::string predict_scenario(const ScenarioConfig& config);

struct ShakingPoint {
  int n = 0;
  double F_A = 0.0;
  double omega = 0.0;
  double shaking_max = 0.0;
  double drift_velocity = 0.0;
  bool monotone = true;  // not larger than the previous omega of the same (n, F_A)
};

std::vector<ShakingPoint> sweep_shaking(const SweepConfig& sweep, double J, double k0);
void write_sweep_csv(const std::filesystem::path& path, const std::vector<ShakingPoint>& points,
                     int precision = 17);

// Sawtooth train with the same pulse centers and impulses as `gaussian`.
ScenarioConfig sawtooth_variant(const ScenarioConfig& gaussian, double width);

// Runs two pulse-train configs and compares site probabilities at the
// quiet times between pulses and at the end. Throws ArgumentError when the
// trains differ in impulses, pulse timing, lattice or packet.
ComparisonReport compare_trains(const ScenarioConfig& a, const ScenarioConfig& b,
                                double tolerance = 1e-2);

}  // namespace blochdrive
