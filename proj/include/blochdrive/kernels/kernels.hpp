#pragma once

#include <span>
#include <string_view>

#include "blochdrive/core/types.hpp"

// Data-parallel inner loops of the propagators and observables.
//
// Every kernel has a portable scalar reference implementation and, on x86-64,
// an AVX2/FMA variant compiled separately and selected at runtime from the
// CPU's feature flags. The variants agree with the reference up to rounding
// (summation order differs); tests pin that equivalence.

namespace blochdrive::kernels {

struct Moments {
  double mass = 0.0;    // sum_j |psi_j|^2
  double first = 0.0;   // sum_j j |psi_j|^2
  double second = 0.0;  // sum_j j^2 |psi_j|^2
};

struct KernelTable {
  std::string_view name;

  // out[m] = sum_j basis[j + m*n] * in[j], basis real column-major n x n.
  void (*project)(std::span<const double> basis, std::span<const cplx> in, std::span<cplx> out);

  // out[j] = sum_m basis[j + m*n] * in[m].
  void (*expand)(std::span<const double> basis, std::span<const cplx> in, std::span<cplx> out);

  // data[i] *= factors[i]
  void (*multiply)(std::span<cplx> data, std::span<const cplx> factors);

  Moments (*moments)(std::span<const cplx> psi);
};

const KernelTable& scalar();

// nullptr when the build or the CPU lacks AVX2+FMA.
const KernelTable* avx2();

// Fastest supported table. BLOCH_DRIVE_SIMD=scalar forces the reference
// kernels; the choice is made once per process.
const KernelTable& active();

namespace detail {
const KernelTable* avx2_table();  // defined in the AVX2 translation unit
}

}  // namespace blochdrive::kernels
