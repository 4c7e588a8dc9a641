#include "blochdrive/numeric/hamiltonian.hpp"

#include <algorithm>
#include <cmath>

#include "blochdrive/core/errors.hpp"

namespace blochdrive {

std::vector<cplx> HamiltonianMatrix::dense() const {
  const int n = size();
  std::vector<cplx> h(static_cast<std::size_t>(n) * n);
  auto at = [&](int r, int c) -> cplx& { return h[r + static_cast<std::size_t>(c) * n]; };
  for (int j = 0; j < n; ++j) at(j, j) = diagonal[j];
  for (std::size_t b = 0; b < bonds.size(); ++b) {
    const int r = static_cast<int>(b);
    const int c = (r + 1) % n;
    at(r, c) += bonds[b];
    at(c, r) += std::conj(bonds[b]);
  }
  return h;
}

double HamiltonianMatrix::hermiticity_defect() const {
  const int n = size();
  const auto h = dense();
  double worst = 0.0;
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) {
      worst = std::max(worst, std::abs(h[r + c * n] - std::conj(h[c + r * n])));
    }
  }
  return worst;
}

HamiltonianMatrix build_hamiltonian(const LatticeSpec& lattice, const Drive& drive, double t) {
  lattice.validate();
  HamiltonianMatrix h;
  h.structure = lattice.kind;
  const int n = lattice.sites;
  const double J = lattice.hopping;
  if (lattice.is_chain()) {
    const auto* field = std::get_if<FieldProfile>(&drive);
    if (field == nullptr) throw ArgumentError("a chain is driven by a field profile");
    const double f = evaluate(*field, t);
    h.diagonal.resize(n);
    for (int j = 0; j < n; ++j) h.diagonal[j] = f * (j - lattice.position_offset);
    h.bonds.assign(n - 1, cplx{-J, 0.0});
  } else {
    const auto* flux = std::get_if<FluxProfile>(&drive);
    if (flux == nullptr) throw ArgumentError("a ring is driven by a flux profile");
    h.diagonal.assign(n, 0.0);
    h.bonds.assign(n, -J * std::polar(1.0, flux->phase(t)));
  }
  return h;
}

}  // namespace blochdrive
