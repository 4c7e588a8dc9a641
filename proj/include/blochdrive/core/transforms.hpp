#pragma once

#include <span>
#include <vector>

#include "blochdrive/core/types.hpp"

namespace blochdrive {

// c_m = N^{-1/2} sum_j exp(-i k_m j) psi_j on the lattice momentum grid.
std::vector<cplx> dft_to_momentum(const StateVector& state, const LatticeSpec& lattice);

// Inverse of dft_to_momentum.
std::vector<cplx> dft_to_sites(std::span<const cplx> momentum, const LatticeSpec& lattice);

// |c_m|^2 for every grid momentum.
std::vector<double> momentum_distribution(const StateVector& state, const LatticeSpec& lattice);

namespace transforms {

// Unitary in-place transforms backed by FFTW. Plans are created once per
// size under a lock and executed through the new-array interface, so the
// functions are safe to call from concurrent threads.

void forward_dft(std::span<cplx> data);
void inverse_dft(std::span<cplx> data);

// Orthonormal DST-I applied to real and imaginary parts. It is its own
// inverse and diagonalizes the open-chain hopping matrix.
void sine_transform(std::span<cplx> data);

}  // namespace transforms
}  // namespace blochdrive
