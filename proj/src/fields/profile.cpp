#include "blochdrive/fields/profile.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "blochdrive/core/errors.hpp"
#include "blochdrive/core/types.hpp"

namespace blochdrive {
namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

void require_finite(double x, const char* what) {
  if (!std::isfinite(x)) throw ArgumentError(std::string(what) + " must be finite");
}

double gaussian_amplitude(double sigma) { return std::sqrt(kPi) / (2.0 * sigma); }

// Integral of one truncated Gaussian pulse over [a, b], a <= b.
double gaussian_pulse_integral(double sigma, double center, double a, double b) {
  const double lo = center - kGaussianTruncation * sigma;
  const double hi = center + kGaussianTruncation * sigma;
  a = std::clamp(a, lo, hi);
  b = std::clamp(b, lo, hi);
  if (b <= a) return 0.0;
  return 0.25 * kPi * (std::erf((b - center) / sigma) - std::erf((a - center) / sigma));
}

// Antiderivative of a triangular pulse measured from its left foot.
double sawtooth_cumulative(const field::SawtoothPulse& p, double t) {
  const double h = 0.5 * p.width;
  const double s = t - p.center;
  const double peak = p.peak();
  if (s <= -h) return 0.0;
  if (s >= h) return p.impulse;
  if (s <= 0.0) return peak * (s + h) * (s + h) / (2.0 * h);
  return 0.5 * p.impulse + peak * (s - s * s / (2.0 * h));
}

// Index i with times[i] <= t <= times[i+1].
std::size_t segment(const field::Tabulated& tab, double t) {
  if (t < tab.times.front() || t > tab.times.back()) {
    std::ostringstream os;
    os << "time " << t << " outside tabulated range [" << tab.times.front() << ", "
       << tab.times.back() << "]";
    throw DomainError(os.str());
  }
  auto it = std::upper_bound(tab.times.begin(), tab.times.end(), t);
  std::size_t i = static_cast<std::size_t>(it - tab.times.begin());
  if (i == 0) i = 1;
  if (i >= tab.times.size()) i = tab.times.size() - 1;
  return i - 1;
}

double tabulated_value(const field::Tabulated& tab, double t) {
  const std::size_t i = segment(tab, t);
  const double t0 = tab.times[i], t1 = tab.times[i + 1];
  const double w = (t - t0) / (t1 - t0);
  return (1.0 - w) * tab.values[i] + w * tab.values[i + 1];
}

// Integral from times.front() to t of the interpolant.
double tabulated_cumulative(const field::Tabulated& tab, double t) {
  const std::size_t seg = segment(tab, t);
  double acc = 0.0;
  for (std::size_t i = 0; i < seg; ++i) {
    acc += 0.5 * (tab.values[i] + tab.values[i + 1]) * (tab.times[i + 1] - tab.times[i]);
  }
  acc += 0.5 * (tab.values[seg] + tabulated_value(tab, t)) * (t - tab.times[seg]);
  return acc;
}

void validate(const FieldProfile::Variant& v) {
  std::visit(overloaded{
                 [](const field::Constant& c) { require_finite(c.F0, "F0"); },
                 [](const field::AcDc& a) {
                   require_finite(a.delta, "delta");
                   require_finite(a.F_A, "F_A");
                   if (!(a.omega > 0.0) || !std::isfinite(a.omega)) {
                     throw ArgumentError("omega must be positive");
                   }
                 },
                 [](const field::GaussianTrain& g) {
                   if (!(g.sigma > 0.0) || !std::isfinite(g.sigma)) {
                     throw ArgumentError("sigma must be positive");
                   }
                   for (std::size_t i = 0; i < g.centers.size(); ++i) {
                     require_finite(g.centers[i], "pulse center");
                     if (i > 0 && !(g.centers[i] > g.centers[i - 1])) {
                       throw ArgumentError("pulse centers must be strictly increasing");
                     }
                   }
                 },
                 [](const field::SawtoothTrain& s) {
                   for (std::size_t i = 0; i < s.pulses.size(); ++i) {
                     const auto& p = s.pulses[i];
                     require_finite(p.center, "pulse center");
                     require_finite(p.impulse, "pulse impulse");
                     if (!(p.width > 0.0) || !std::isfinite(p.width)) {
                       throw ArgumentError("pulse width must be positive");
                     }
                     if (i > 0 && !(p.center > s.pulses[i - 1].center)) {
                       throw ArgumentError("pulse centers must be strictly increasing");
                     }
                   }
                 },
                 [](const field::Tabulated& t) {
                   if (t.times.size() < 2 || t.times.size() != t.values.size()) {
                     throw ArgumentError("tabulated profile needs >= 2 matching samples");
                   }
                   for (std::size_t i = 0; i < t.times.size(); ++i) {
                     require_finite(t.times[i], "sample time");
                     require_finite(t.values[i], "sample value");
                     if (i > 0 && !(t.times[i] > t.times[i - 1])) {
                       throw ArgumentError("sample times must be strictly increasing");
                     }
                   }
                 },
             },
             v);
}

}  // namespace

FieldProfile::FieldProfile(Variant v) : v_(std::move(v)) { validate(v_); }

std::string FieldProfile::type_name() const {
  return std::visit(overloaded{
                        [](const field::Constant&) { return "constant"; },
                        [](const field::AcDc&) { return "ac_dc"; },
                        [](const field::GaussianTrain&) { return "gaussian_train"; },
                        [](const field::SawtoothTrain&) { return "sawtooth_train"; },
                        [](const field::Tabulated&) { return "tabulated"; },
                    },
                    v_);
}

std::vector<std::string> FieldProfile::warnings() const {
  std::vector<std::string> out;
  if (const auto* g = get_if<field::GaussianTrain>()) {
    for (std::size_t i = 1; i < g->centers.size(); ++i) {
      if (g->centers[i] - g->centers[i - 1] < 2.0 * kGaussianTruncation * g->sigma) {
        std::ostringstream os;
        os << "gaussian pulses " << i - 1 << " and " << i
           << " overlap; per-pulse impulse is no longer pi/2";
        out.push_back(os.str());
      }
    }
  }
  if (const auto* s = get_if<field::SawtoothTrain>()) {
    for (std::size_t i = 1; i < s->pulses.size(); ++i) {
      const auto& a = s->pulses[i - 1];
      const auto& b = s->pulses[i];
      if (b.center - a.center < 0.5 * (a.width + b.width)) {
        std::ostringstream os;
        os << "sawtooth pulses " << i - 1 << " and " << i << " overlap";
        out.push_back(os.str());
      }
    }
  }
  return out;
}

std::vector<double> FieldProfile::pulse_impulses() const {
  std::vector<double> out;
  if (const auto* g = get_if<field::GaussianTrain>()) {
    for (double c : g->centers) out.push_back(gaussian_pulse_integral(g->sigma, c, -INFINITY, INFINITY));
  } else if (const auto* s = get_if<field::SawtoothTrain>()) {
    for (const auto& p : s->pulses) out.push_back(p.impulse);
  }
  return out;
}

std::vector<double> FieldProfile::pulse_centers() const {
  std::vector<double> out;
  if (const auto* g = get_if<field::GaussianTrain>()) {
    out = g->centers;
  } else if (const auto* s = get_if<field::SawtoothTrain>()) {
    for (const auto& p : s->pulses) out.push_back(p.center);
  }
  return out;
}

std::vector<double> FieldProfile::pulse_half_widths() const {
  std::vector<double> out;
  if (const auto* g = get_if<field::GaussianTrain>()) {
    out.assign(g->centers.size(), kGaussianTruncation * g->sigma);
  } else if (const auto* s = get_if<field::SawtoothTrain>()) {
    for (const auto& p : s->pulses) out.push_back(0.5 * p.width);
  }
  return out;
}

double evaluate(const FieldProfile& profile, double t) {
  return std::visit(
      overloaded{
          [](const field::Constant& c) { return c.F0; },
          [t](const field::AcDc& a) {
            return (a.n + a.delta) * a.omega + a.F_A * std::cos(a.omega * t);
          },
          [t](const field::GaussianTrain& g) {
            const double amp = gaussian_amplitude(g.sigma);
            double f = 0.0;
            for (double c : g.centers) {
              const double s = (t - c) / g.sigma;
              if (std::abs(s) <= kGaussianTruncation) f += amp * std::exp(-s * s);
            }
            return f;
          },
          [t](const field::SawtoothTrain& s) {
            double f = 0.0;
            for (const auto& p : s.pulses) {
              const double h = 0.5 * p.width;
              const double d = std::abs(t - p.center);
              if (d < h) f += p.peak() * (1.0 - d / h);
            }
            return f;
          },
          [t](const field::Tabulated& tab) { return tabulated_value(tab, t); },
      },
      profile.variant());
}

double impulse(const FieldProfile& profile, double t, double t_prime) {
  if (t_prime < t) throw ArgumentError("impulse requires t_prime >= t");
  return std::visit(
      overloaded{
          [&](const field::Constant& c) { return c.F0 * (t_prime - t); },
          [&](const field::AcDc& a) {
            return (a.n + a.delta) * a.omega * (t_prime - t) +
                   (a.F_A / a.omega) * (std::sin(a.omega * t_prime) - std::sin(a.omega * t));
          },
          [&](const field::GaussianTrain& g) {
            double acc = 0.0;
            for (double c : g.centers) acc += gaussian_pulse_integral(g.sigma, c, t, t_prime);
            return acc;
          },
          [&](const field::SawtoothTrain& s) {
            double acc = 0.0;
            for (const auto& p : s.pulses) {
              acc += sawtooth_cumulative(p, t_prime) - sawtooth_cumulative(p, t);
            }
            return acc;
          },
          [&](const field::Tabulated& tab) {
            return tabulated_cumulative(tab, t_prime) - tabulated_cumulative(tab, t);
          },
      },
      profile.variant());
}

double signed_impulse(const FieldProfile& profile, double origin, double t) {
  return t >= origin ? impulse(profile, origin, t) : -impulse(profile, t, origin);
}

FluxProfile FluxProfile::direct(FieldProfile shape) { return FluxProfile(std::move(shape), false); }

FluxProfile FluxProfile::from_field(FieldProfile field) {
  return FluxProfile(std::move(field), true);
}

FluxProfile FluxProfile::constant(double phi) {
  return FluxProfile(FieldProfile(field::Constant{phi}), false);
}

double FluxProfile::phase(double t) const {
  return from_field_ ? -signed_impulse(profile_, 0.0, t) : evaluate(profile_, t);
}

double flux_phase_from_quanta(double quanta, int sites) {
  if (sites < 1) throw ArgumentError("site count must be positive");
  return kTwoPi * quanta / sites;
}

}  // namespace blochdrive
