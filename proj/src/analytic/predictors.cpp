#include "blochdrive/analytic/predictors.hpp"

#include <algorithm>
#include <cmath>

#include "blochdrive/analytic/bessel.hpp"
#include "blochdrive/core/errors.hpp"
#include "blochdrive/core/types.hpp"
#include "blochdrive/fields/integrals.hpp"

namespace blochdrive {
namespace {

double sign_power(int n) { return (n % 2 == 0) ? 1.0 : -1.0; }

void check_drive(double omega, double J) {
  if (!(omega > 0.0)) throw ArgumentError("omega must be positive");
  if (!(J > 0.0)) throw ArgumentError("hopping must be positive");
}

double resonant_drift(int n, double F_A, double omega, double J, double k0) {
  return 2.0 * J * sign_power(n) * bessel_jn_signed(n, F_A / omega) * std::sin(k0);
}

}  // namespace

std::string_view to_string(Phenomenon p) {
  switch (p) {
    case Phenomenon::bloch_oscillation: return "BO";
    case Phenomenon::bloch_translation: return "BT";
    case Phenomenon::super_bloch: return "SBO";
    case Phenomenon::dynamic_localization: return "DL";
  }
  return "?";
}

PhenomenonPrediction predict_bloch_oscillation(double F0, double J, double k0) {
  (void)k0;
  if (F0 == 0.0 || !std::isfinite(F0)) {
    throw ArgumentError("Bloch oscillations need a nonzero force; F0 = 0 is free motion");
  }
  if (!(J > 0.0)) throw ArgumentError("hopping must be positive");
  PhenomenonPrediction p;
  p.kind = Phenomenon::bloch_oscillation;
  p.period = kTwoPi / std::abs(F0);
  p.extent = 4.0 * J / std::abs(F0);
  p.drift_velocity = 0.0;
  p.effective_hopping = J;
  p.effective_force = F0;
  return p;
}

double bloch_oscillation_displacement(double F0, double J, double k0, double t) {
  if (F0 == 0.0) return 2.0 * J * std::sin(k0) * t;
  return 2.0 * J / F0 * (std::cos(k0 - F0 * t) - std::cos(k0));
}

std::vector<double> bloch_translation_shaking(int n, double F_A, double omega, double J, double k0,
                                              std::span<const double> times) {
  check_drive(omega, J);
  const FieldProfile drive(field::AcDc{n, 0.0, F_A, omega});
  const auto fis = field_integrals_series(drive, 0.0, times, J);
  const double drift = resonant_drift(n, F_A, omega, J, k0);
  std::vector<double> out(times.size());
  for (std::size_t i = 0; i < times.size(); ++i) {
    const double d = 2.0 * J * (fis[i].u * std::sin(k0) - fis[i].v * std::cos(k0));
    out[i] = d - drift * times[i];
  }
  return out;
}

double shaking_max(int n, double F_A, double omega, double J, double k0) {
  check_drive(omega, J);
  const double tau = kTwoPi / omega;
  std::vector<double> times(kShakingSamplesPerPeriod + 1);
  for (int i = 0; i <= kShakingSamplesPerPeriod; ++i) {
    times[i] = tau * i / kShakingSamplesPerPeriod;
  }
  const auto dd = bloch_translation_shaking(n, F_A, omega, J, k0, times);
  double best = 0.0;
  for (double x : dd) best = std::max(best, std::abs(x));
  return best;
}

PhenomenonPrediction predict_bloch_translation(int n, double F_A, double omega, double J,
                                               double k0) {
  check_drive(omega, J);
  PhenomenonPrediction p;
  p.kind = Phenomenon::bloch_translation;
  p.period = kTwoPi / omega;
  p.drift_velocity = resonant_drift(n, F_A, omega, J, k0);
  p.effective_hopping = J * std::abs(bessel_jn_signed(n, F_A / omega));
  p.shaking_max = shaking_max(n, F_A, omega, J, k0);
  return p;
}

PhenomenonPrediction predict_dynamic_localization(int n, double F_A, double omega, double J,
                                                  double k0) {
  auto p = predict_bloch_translation(n, F_A, omega, J, k0);
  p.kind = Phenomenon::dynamic_localization;
  return p;
}

PhenomenonPrediction predict_super_bloch(int n, double delta, double F_A, double omega, double J,
                                         double k0) {
  check_drive(omega, J);
  if (delta == 0.0 || !std::isfinite(delta)) {
    throw ArgumentError("zero detuning is Bloch translation; use predict_bloch_translation");
  }
  const double bessel = bessel_jn_signed(n, F_A / omega);
  const double force = delta * omega;
  PhenomenonPrediction p;
  p.kind = Phenomenon::super_bloch;
  p.period = kTwoPi / std::abs(force);
  p.effective_hopping = J * std::abs(bessel);
  p.effective_force = force;
  p.extent = 4.0 * J * std::abs(bessel / force);
  p.drift_velocity = super_bloch_mean_velocity(n, delta, F_A, omega, J, k0, 0.0);
  return p;
}

double super_bloch_mean_displacement(int n, double delta, double F_A, double omega, double J,
                                     double k0, double t) {
  const double force = delta * omega;
  const double bessel = bessel_jn_signed(n, F_A / omega);
  return 2.0 * J * sign_power(n) / force * bessel * (std::cos(k0 - force * t) - std::cos(k0));
}

double super_bloch_mean_velocity(int n, double delta, double F_A, double omega, double J,
                                 double k0, double t) {
  const double force = delta * omega;
  const double bessel = bessel_jn_signed(n, F_A / omega);
  return 2.0 * J * sign_power(n) * bessel * std::sin(k0 - force * t);
}

}  // namespace blochdrive
