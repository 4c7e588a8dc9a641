#pragma once

#include <span>
#include <string_view>
#include <vector>

namespace blochdrive {

enum class Phenomenon { bloch_oscillation, bloch_translation, super_bloch, dynamic_localization };

std::string_view to_string(Phenomenon p);

// Closed-form characteristics of a driven-packet phenomenon. Fields that do
// not apply to a kind are zero.
struct PhenomenonPrediction {
  Phenomenon kind = Phenomenon::bloch_oscillation;
  double period = 0.0;
  double extent = 0.0;
  double drift_velocity = 0.0;
  double effective_hopping = 0.0;
  double effective_force = 0.0;
  double shaking_max = 0.0;
};

// Constant force F0: period 2pi/|F0|, extent 4J/|F0|. Throws for F0 = 0.
PhenomenonPrediction predict_bloch_oscillation(double F0, double J, double k0);

// D(t) = (2J/F0) [cos(k0 - F0 t) - cos k0].
double bloch_oscillation_displacement(double F0, double J, double k0, double t);

// Resonant drive F = n omega + F_A cos(omega t). Drift 2J (-1)^n J_n(F_A/omega) sin k0,
// shaking period 2pi/omega, shaking_max sampled from the exact displacement.
PhenomenonPrediction predict_bloch_translation(int n, double F_A, double omega, double J,
                                               double k0);

// Bloch translation whose Bessel factor is (nearly) zero; kind is tagged
// dynamic_localization.
PhenomenonPrediction predict_dynamic_localization(int n, double F_A, double omega, double J,
                                                  double k0);

// Deviation D(t) - drift * t of the resonant drive at the given times.
std::vector<double> bloch_translation_shaking(int n, double F_A, double omega, double J, double k0,
                                              std::span<const double> times);

inline constexpr int kShakingSamplesPerPeriod = 2048;

// max |D(t) - drift t| over one drive period.
double shaking_max(int n, double F_A, double omega, double J, double k0);

// Detuned drive F = (n + delta) omega + F_A cos(omega t). Throws for delta = 0.
PhenomenonPrediction predict_super_bloch(int n, double delta, double F_A, double omega, double J,
                                         double k0);

// Period-averaged displacement (2J (-1)^n / (delta omega)) J_n [cos(k0 - delta omega t) - cos k0].
double super_bloch_mean_displacement(int n, double delta, double F_A, double omega, double J,
                                     double k0, double t);

// Time derivative of super_bloch_mean_displacement.
double super_bloch_mean_velocity(int n, double delta, double F_A, double omega, double J,
                                 double k0, double t);

}  // namespace blochdrive
