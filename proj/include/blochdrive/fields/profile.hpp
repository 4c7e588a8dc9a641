#pragma once

#include <string>
#include <type_traits>
#include <variant>
#include <vector>

namespace blochdrive {

namespace field {

struct Constant {
  double F0 = 0.0;
};

// F(t) = (n + delta) omega + F_A cos(omega t)
struct AcDc {
  int n = 0;
  double delta = 0.0;
  double F_A = 0.0;
  double omega = 1.0;
};

// F(t) = sum_n sqrt(pi)/(2 sigma) exp(-(t - T_n)^2 / sigma^2); every pulse
// carries impulse pi/2. Pulses are truncated at +-8 sigma.
struct GaussianTrain {
  double sigma = 1.0;
  std::vector<double> centers;
};

// Isosceles triangle of base `width` centred at `center` whose area equals
// `impulse`.
struct SawtoothPulse {
  double center = 0.0;
  double width = 1.0;
  double impulse = 0.0;

  double peak() const { return 2.0 * impulse / width; }
};

struct SawtoothTrain {
  std::vector<SawtoothPulse> pulses;
};

// Piecewise-linear interpolation of samples; undefined outside
// [times.front(), times.back()].
struct Tabulated {
  std::vector<double> times;
  std::vector<double> values;
};

}  // namespace field

inline constexpr double kGaussianTruncation = 8.0;  // in units of sigma

class FieldProfile {
 public:
  using Variant = std::variant<field::Constant, field::AcDc, field::GaussianTrain,
                               field::SawtoothTrain, field::Tabulated>;

  FieldProfile() : v_(field::Constant{}) {}
  // Validates; throws ArgumentError.
  FieldProfile(Variant v);  // NOLINT(google-explicit-constructor)
  template <typename Alternative>
    requires std::is_constructible_v<Variant, Alternative> &&
             (!std::is_same_v<std::decay_t<Alternative>, Variant>)
  FieldProfile(Alternative alt)  // NOLINT(google-explicit-constructor)
      : FieldProfile(Variant(std::move(alt))) {}

  static FieldProfile zero() { return FieldProfile(field::Constant{0.0}); }

  const Variant& variant() const { return v_; }
  template <typename T>
  const T* get_if() const {
    return std::get_if<T>(&v_);
  }

  std::string type_name() const;

  // Advisory diagnostics (e.g. overlapping Gaussian pulses); empty when clean.
  std::vector<std::string> warnings() const;

  // Impulse carried by each pulse of a pulse train; empty for other kinds.
  std::vector<double> pulse_impulses() const;
  std::vector<double> pulse_centers() const;
  std::vector<double> pulse_half_widths() const;

 private:
  Variant v_;
};

// F(t). Throws DomainError for tabulated profiles queried off-grid.
double evaluate(const FieldProfile& profile, double t);

// I(t_prime, t) = integral of F over [t, t_prime]. Closed forms for every
// profile kind. Throws ArgumentError when t_prime < t.
double impulse(const FieldProfile& profile, double t, double t_prime);

// I(t, origin) for any ordering of the two times.
double signed_impulse(const FieldProfile& profile, double origin, double t);

// Flux phase phi(t) = 2 pi Phi(t) / N threading a ring.
class FluxProfile {
 public:
  // phi(t) given directly by a profile shape evaluated at t.
  static FluxProfile direct(FieldProfile shape);
  // phi(t) = -I(t, 0), the flux equivalent to the chain driven by `field`.
  static FluxProfile from_field(FieldProfile field);
  static FluxProfile constant(double phi);

  bool is_from_field() const { return from_field_; }
  const FieldProfile& source() const { return profile_; }

  double phase(double t) const;

 private:
  FluxProfile(FieldProfile p, bool from_field) : profile_(std::move(p)), from_field_(from_field) {}
  FieldProfile profile_;
  bool from_field_ = false;
};

// Bond phase 2 pi Phi / N for Phi flux quanta through an N-site ring.
double flux_phase_from_quanta(double quanta, int sites);

}  // namespace blochdrive
