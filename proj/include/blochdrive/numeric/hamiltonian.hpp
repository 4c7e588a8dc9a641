#pragma once

#include <variant>
#include <vector>

#include "blochdrive/core/types.hpp"
#include "blochdrive/fields/profile.hpp"

namespace blochdrive {

// A chain is driven by a force, a ring by a flux.
using Drive = std::variant<FieldProfile, FluxProfile>;

// Instantaneous single-particle Hamiltonian of the driven lattice.
// Chain: tridiagonal, diagonal F(t) (j - offset), bonds -J.
// Ring: cyclic tridiagonal, zero diagonal, bonds -J exp(i phi(t)) with
// phi = 2 pi Phi / N (Peierls phase). bonds[j] is the element H(j, j+1);
// for a ring bonds[N-1] is H(N-1, 0).
struct HamiltonianMatrix {
  LatticeKind structure = LatticeKind::chain;
  std::vector<double> diagonal;
  std::vector<cplx> bonds;

  int size() const { return static_cast<int>(diagonal.size()); }

  // Dense column-major matrix.
  std::vector<cplx> dense() const;

  // max |H - H^dagger| over the dense matrix.
  double hermiticity_defect() const;

  bool operator==(const HamiltonianMatrix&) const = default;
};

// Throws ArgumentError when the drive kind does not match the lattice
// (chain needs a FieldProfile, ring a FluxProfile).
HamiltonianMatrix build_hamiltonian(const LatticeSpec& lattice, const Drive& drive, double t);

}  // namespace blochdrive
