#pragma once

#include <complex>
#include <numbers>
#include <span>
#include <vector>

namespace blochdrive {

using cplx = std::complex<double>;

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Reduce an angle into the half-open interval (-pi, pi].
double wrap_angle(double angle);

enum class LatticeKind { chain, ring };

// Geometry and hopping of a one-dimensional tight-binding lattice.
// Sites are addressed by array index 0..N-1. For a chain the on-site
// potential of site j is F(t) * (j - position_offset); the offset only
// changes a global phase.
struct LatticeSpec {
  LatticeKind kind = LatticeKind::chain;
  int sites = 0;
  double hopping = 1.0;
  int position_offset = 0;

  // Chain with the default offset floor(N/2).
  static LatticeSpec chain(int sites, double hopping = 1.0);
  static LatticeSpec ring(int sites, double hopping = 1.0);

  // Throws ArgumentError when the invariants do not hold.
  void validate() const;

  bool is_chain() const { return kind == LatticeKind::chain; }
  bool is_ring() const { return kind == LatticeKind::ring; }
};

// Uniform time discretization t_n = t_start + n * step(), n = 0..steps.
struct TimeGrid {
  double t_start = 0.0;
  double t_end = 0.0;
  int steps = 0;

  // Grid covering [t_start, t_end] with step as close to `eps` as possible
  // without exceeding it.
  static TimeGrid with_step(double t_start, double t_end, double eps);

  void validate() const;
  double step() const { return (t_end - t_start) / steps; }
  double time(int n) const { return t_start + n * step(); }
};

class StateVector {
 public:
  StateVector() = default;

  // Validates unit norm to 1e-12.
  static StateVector normalized(std::vector<cplx> amplitudes);
  // Scales the amplitudes to unit norm. Throws on a zero vector.
  static StateVector normalize(std::vector<cplx> amplitudes);
  // No norm check; used for evolved states whose drift is a diagnostic.
  static StateVector unchecked(std::vector<cplx> amplitudes);
  static StateVector site(int sites, int index);

  std::size_t size() const { return amps_.size(); }
  const cplx& operator[](std::size_t j) const { return amps_[j]; }
  std::span<const cplx> amplitudes() const { return amps_; }
  double norm_squared() const;
  double norm() const;
  std::vector<double> probabilities() const;

 private:
  explicit StateVector(std::vector<cplx> a) : amps_(std::move(a)) {}
  std::vector<cplx> amps_;
};

double fidelity(const StateVector& a, const StateVector& b);

// Euclidean distance between the site-probability distributions.
double probability_distance(const StateVector& a, const StateVector& b);

// Width of the boundary region used for edge occupancy: 5% of the
// sites at each end, at least one site.
int default_edge_width(const LatticeSpec& lattice);

// Probability held by the outermost `width` sites at each end.
double edge_occupancy(const StateVector& state, int width);

// Discrete momenta k_m = 2 pi m / N, m = 0..N-1 (m = 0 is the grid point
// k = 2 pi). Reported momenta are reduced into (-pi, pi].
class MomentumGrid {
 public:
  explicit MomentumGrid(int sites);

  int size() const { return sites_; }
  double raw(int m) const { return kTwoPi * m / sites_; }
  double value(int m) const;
  std::vector<double> values() const;

 private:
  int sites_;
};

}  // namespace blochdrive
