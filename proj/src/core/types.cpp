#include "blochdrive/core/types.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "blochdrive/core/errors.hpp"

namespace blochdrive {

double wrap_angle(double angle) {
  double r = std::remainder(angle, kTwoPi);
  if (r <= -kPi) r += kTwoPi;
  return r;
}

LatticeSpec LatticeSpec::chain(int sites, double hopping) {
  LatticeSpec spec{LatticeKind::chain, sites, hopping, sites / 2};
  spec.validate();
  return spec;
}

LatticeSpec LatticeSpec::ring(int sites, double hopping) {
  LatticeSpec spec{LatticeKind::ring, sites, hopping, 0};
  spec.validate();
  return spec;
}

void LatticeSpec::validate() const {
  if (sites < 2) throw ArgumentError("lattice needs at least 2 sites");
  // N = 2 would double the single bond of a ring.
  if (kind == LatticeKind::ring && sites < 3) throw ArgumentError("ring needs at least 3 sites");
  if (!(hopping > 0.0) || !std::isfinite(hopping)) throw ArgumentError("hopping must be positive");
}

TimeGrid TimeGrid::with_step(double t_start, double t_end, double eps) {
  if (!(eps > 0.0)) throw ArgumentError("time step must be positive");
  if (!(t_end > t_start)) throw ArgumentError("t_end must exceed t_start");
  const double span = t_end - t_start;
  const int steps = static_cast<int>(std::ceil(span / eps - 1e-9));
  TimeGrid grid{t_start, t_end, steps < 1 ? 1 : steps};
  grid.validate();
  return grid;
}

void TimeGrid::validate() const {
  if (!(t_end > t_start)) throw ArgumentError("t_end must exceed t_start");
  if (steps <= 0) throw ArgumentError("step count must be positive");
}

StateVector StateVector::normalized(std::vector<cplx> amplitudes) {
  StateVector s(std::move(amplitudes));
  if (s.size() == 0) throw ArgumentError("empty state");
  const double n2 = s.norm_squared();
  if (std::abs(n2 - 1.0) > 1e-12) {
    throw ArgumentError("state is not normalized: |psi|^2 = " + std::to_string(n2));
  }
  return s;
}

StateVector StateVector::normalize(std::vector<cplx> amplitudes) {
  StateVector s(std::move(amplitudes));
  const double n = s.norm();
  if (!(n > 0.0)) throw ArgumentError("cannot normalize a zero state");
  for (auto& a : s.amps_) a /= n;
  return s;
}

StateVector StateVector::unchecked(std::vector<cplx> amplitudes) {
  return StateVector(std::move(amplitudes));
}

StateVector StateVector::site(int sites, int index) {
  if (index < 0 || index >= sites) throw ArgumentError("site index out of range");
  std::vector<cplx> a(sites);
  a[index] = 1.0;
  return StateVector(std::move(a));
}

double StateVector::norm_squared() const {
  double s = 0.0;
  for (const auto& a : amps_) s += std::norm(a);
  return s;
}

double StateVector::norm() const { return std::sqrt(norm_squared()); }

std::vector<double> StateVector::probabilities() const {
  std::vector<double> p(amps_.size());
  for (std::size_t j = 0; j < amps_.size(); ++j) p[j] = std::norm(amps_[j]);
  return p;
}

double fidelity(const StateVector& a, const StateVector& b) {
  if (a.size() != b.size()) throw ArgumentError("state sizes differ");
  cplx overlap = 0.0;
  for (std::size_t j = 0; j < a.size(); ++j) overlap += std::conj(a[j]) * b[j];
  return std::norm(overlap);
}

double probability_distance(const StateVector& a, const StateVector& b) {
  if (a.size() != b.size()) throw ArgumentError("state sizes differ");
  double s = 0.0;
  for (std::size_t j = 0; j < a.size(); ++j) {
    const double d = std::norm(a[j]) - std::norm(b[j]);
    s += d * d;
  }
  return std::sqrt(s);
}

int default_edge_width(const LatticeSpec& lattice) { return std::max(1, lattice.sites / 20); }

double edge_occupancy(const StateVector& state, int width) {
  const std::size_t n = state.size();
  const std::size_t w = std::min<std::size_t>(static_cast<std::size_t>(std::max(width, 0)), n / 2);
  double s = 0.0;
  for (std::size_t j = 0; j < w; ++j) s += std::norm(state[j]) + std::norm(state[n - 1 - j]);
  return s;
}

MomentumGrid::MomentumGrid(int sites) : sites_(sites) {
  if (sites < 1) throw ArgumentError("momentum grid needs at least one point");
}

double MomentumGrid::value(int m) const { return wrap_angle(raw(m)); }

std::vector<double> MomentumGrid::values() const {
  std::vector<double> k(sites_);
  for (int m = 0; m < sites_; ++m) k[m] = value(m);
  return k;
}

}  // namespace blochdrive
