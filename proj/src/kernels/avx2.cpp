#include "blochdrive/kernels/kernels.hpp"

#if defined(__x86_64__) && defined(__AVX2__) && defined(__FMA__)
#define BLOCHDRIVE_HAVE_AVX2 1
#include <immintrin.h>
#endif

namespace blochdrive::kernels::detail {

#if defined(BLOCHDRIVE_HAVE_AVX2)
namespace {

// [z0, z1] -> [z0, z0, z1, z1], matching two interleaved complex numbers.
inline __m256d widen_pair(const double* z) {
  return _mm256_permute4x64_pd(_mm256_castpd128_pd256(_mm_loadu_pd(z)), _MM_SHUFFLE(1, 1, 0, 0));
}

inline __m128d fold(__m256d v) {
  return _mm_add_pd(_mm256_castpd256_pd128(v), _mm256_extractf128_pd(v, 1));
}

void project_avx2(std::span<const double> basis, std::span<const cplx> in, std::span<cplx> out) {
  const std::size_t n = in.size();
  const double* psi = reinterpret_cast<const double*>(in.data());
  for (std::size_t m = 0; m < out.size(); ++m) {
    const double* col = basis.data() + m * n;
    __m256d acc0 = _mm256_setzero_pd();
    __m256d acc1 = _mm256_setzero_pd();
    std::size_t j = 0;
    for (; j + 4 <= n; j += 4) {
      acc0 = _mm256_fmadd_pd(widen_pair(col + j), _mm256_loadu_pd(psi + 2 * j), acc0);
      acc1 = _mm256_fmadd_pd(widen_pair(col + j + 2), _mm256_loadu_pd(psi + 2 * j + 4), acc1);
    }
    for (; j + 2 <= n; j += 2) {
      acc0 = _mm256_fmadd_pd(widen_pair(col + j), _mm256_loadu_pd(psi + 2 * j), acc0);
    }
    alignas(16) double r[2];
    _mm_store_pd(r, fold(_mm256_add_pd(acc0, acc1)));
    for (; j < n; ++j) {
      r[0] += col[j] * in[j].real();
      r[1] += col[j] * in[j].imag();
    }
    out[m] = {r[0], r[1]};
  }
}

void expand_avx2(std::span<const double> basis, std::span<const cplx> in, std::span<cplx> out) {
  const std::size_t n = out.size();
  const std::size_t cols = in.size();
  const double* w = reinterpret_cast<const double*>(in.data());
  double* dst = reinterpret_cast<double*>(out.data());
  std::size_t j = 0;
  // Four output amplitudes stay in registers while the columns stream by.
  for (; j + 4 <= n; j += 4) {
    __m256d acc0 = _mm256_setzero_pd();
    __m256d acc1 = _mm256_setzero_pd();
    for (std::size_t m = 0; m < cols; ++m) {
      const double* col = basis.data() + m * n + j;
      const __m256d wm = _mm256_broadcast_pd(reinterpret_cast<const __m128d*>(w + 2 * m));
      acc0 = _mm256_fmadd_pd(widen_pair(col), wm, acc0);
      acc1 = _mm256_fmadd_pd(widen_pair(col + 2), wm, acc1);
    }
    _mm256_storeu_pd(dst + 2 * j, acc0);
    _mm256_storeu_pd(dst + 2 * j + 4, acc1);
  }
  for (; j < n; ++j) {
    double re = 0.0, im = 0.0;
    for (std::size_t m = 0; m < cols; ++m) {
      const double z = basis[m * n + j];
      re += z * in[m].real();
      im += z * in[m].imag();
    }
    out[j] = {re, im};
  }
}

void multiply_avx2(std::span<cplx> data, std::span<const cplx> factors) {
  double* a = reinterpret_cast<double*>(data.data());
  const double* b = reinterpret_cast<const double*>(factors.data());
  const std::size_t n = data.size();
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const __m256d x = _mm256_loadu_pd(a + 2 * i);
    const __m256d y = _mm256_loadu_pd(b + 2 * i);
    const __m256d y_re = _mm256_movedup_pd(y);              // [br, br]
    const __m256d y_im = _mm256_permute_pd(y, 0b1111);      // [bi, bi]
    const __m256d x_swap = _mm256_permute_pd(x, 0b0101);    // [ai, ar]
    const __m256d cross = _mm256_mul_pd(x_swap, y_im);      // [ai bi, ar bi]
    _mm256_storeu_pd(a + 2 * i, _mm256_fmaddsub_pd(x, y_re, cross));
  }
  for (; i < n; ++i) {
    const double ar = data[i].real(), ai = data[i].imag();
    const double br = factors[i].real(), bi = factors[i].imag();
    data[i] = {ar * br - ai * bi, ai * br + ar * bi};
  }
}

Moments moments_avx2(std::span<const cplx> psi) {
  const double* x = reinterpret_cast<const double*>(psi.data());
  const std::size_t n = psi.size();
  __m256d mass = _mm256_setzero_pd();
  __m256d first = _mm256_setzero_pd();
  __m256d second = _mm256_setzero_pd();
  // hadd interleaves lanes as [p0, p2, p1, p3].
  __m256d idx = _mm256_setr_pd(0.0, 2.0, 1.0, 3.0);
  const __m256d step = _mm256_set1_pd(4.0);
  std::size_t j = 0;
  for (; j + 4 <= n; j += 4) {
    const __m256d a = _mm256_loadu_pd(x + 2 * j);
    const __m256d b = _mm256_loadu_pd(x + 2 * j + 4);
    const __m256d p = _mm256_hadd_pd(_mm256_mul_pd(a, a), _mm256_mul_pd(b, b));
    mass = _mm256_add_pd(mass, p);
    const __m256d px = _mm256_mul_pd(p, idx);
    first = _mm256_add_pd(first, px);
    second = _mm256_fmadd_pd(px, idx, second);
    idx = _mm256_add_pd(idx, step);
  }
  alignas(16) double r[2];
  Moments out;
  _mm_store_pd(r, fold(mass));
  out.mass = r[0] + r[1];
  _mm_store_pd(r, fold(first));
  out.first = r[0] + r[1];
  _mm_store_pd(r, fold(second));
  out.second = r[0] + r[1];
  for (; j < n; ++j) {
    const double p = std::norm(psi[j]);
    const double xj = static_cast<double>(j);
    out.mass += p;
    out.first += xj * p;
    out.second += xj * xj * p;
  }
  return out;
}

constexpr KernelTable kAvx2{"avx2", project_avx2, expand_avx2, multiply_avx2, moments_avx2};

}  // namespace

const KernelTable* avx2_table() {
  static const bool supported = __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
  return supported ? &kAvx2 : nullptr;
}

#else

const KernelTable* avx2_table() { return nullptr; }

#endif

}  // namespace blochdrive::kernels::detail
