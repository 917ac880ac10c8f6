// AVX2 + FMA kernels. Two complex values per 256-bit register in the
// interleaved [re, im, re, im] layout of std::complex<double>. Functions
// carry target attributes instead of the whole file being built with
// -mavx2, so no AVX-encoded inline helper can leak into scalar callers.

#include "crossn/kernels.hpp"

#if defined(CROSSN_HAVE_AVX2)

#include <immintrin.h>

#define CROSSN_AVX2 __attribute__((target("avx2,fma")))

namespace crossn::kernels {
namespace {

CROSSN_AVX2 inline const double* as_doubles(const Scalar* p) {
  return reinterpret_cast<const double*>(p);
}
CROSSN_AVX2 inline double* as_doubles(Scalar* p) { return reinterpret_cast<double*>(p); }

CROSSN_AVX2 void axpy_avx2(Scalar alpha, const Scalar* x, Scalar* y, std::size_t n) {
  const __m256d ar = _mm256_set1_pd(alpha.real());
  const __m256d ai = _mm256_set1_pd(alpha.imag());
  const double* xd = as_doubles(x);
  double* yd = as_doubles(y);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const __m256d xv = _mm256_loadu_pd(xd + 2 * i);
    const __m256d swapped = _mm256_permute_pd(xv, 0b0101);
    // even lanes: ar*xr - ai*xi, odd lanes: ar*xi + ai*xr
    const __m256d prod = _mm256_fmaddsub_pd(ar, xv, _mm256_mul_pd(ai, swapped));
    _mm256_storeu_pd(yd + 2 * i, _mm256_add_pd(_mm256_loadu_pd(yd + 2 * i), prod));
  }
  if (i < n) scalar_table().axpy(alpha, x + i, y + i, n - i);
}

CROSSN_AVX2 inline double hsum(__m256d v) {
  const __m128d lo = _mm256_castpd256_pd128(v);
  const __m128d hi = _mm256_extractf128_pd(v, 1);
  const __m128d s = _mm_add_pd(lo, hi);
  return _mm_cvtsd_f64(_mm_add_sd(s, _mm_unpackhi_pd(s, s)));
}

// Sum of even lanes minus sum of odd lanes.
CROSSN_AVX2 inline double alternating_sum(__m256d v) {
  const __m128d lo = _mm256_castpd256_pd128(v);
  const __m128d hi = _mm256_extractf128_pd(v, 1);
  const __m128d s = _mm_add_pd(lo, hi);
  return _mm_cvtsd_f64(_mm_sub_sd(s, _mm_unpackhi_pd(s, s)));
}

struct DotAccum {
  __m256d same;     // [xr*yr, xi*yi, ...]
  __m256d crossed;  // [xr*yi, xi*yr, ...]
};

CROSSN_AVX2 inline DotAccum accumulate(const Scalar* x, const Scalar* y, std::size_t pairs) {
  __m256d same = _mm256_setzero_pd();
  __m256d crossed = _mm256_setzero_pd();
  const double* xd = as_doubles(x);
  const double* yd = as_doubles(y);
  for (std::size_t p = 0; p < pairs; ++p) {
    const __m256d xv = _mm256_loadu_pd(xd + 4 * p);
    const __m256d yv = _mm256_loadu_pd(yd + 4 * p);
    same = _mm256_fmadd_pd(xv, yv, same);
    crossed = _mm256_fmadd_pd(xv, _mm256_permute_pd(yv, 0b0101), crossed);
  }
  return {same, crossed};
}

CROSSN_AVX2 Scalar dotu_avx2(const Scalar* x, const Scalar* y, std::size_t n) {
  const std::size_t pairs = n / 2;
  const DotAccum acc = accumulate(x, y, pairs);
  Scalar s(alternating_sum(acc.same), hsum(acc.crossed));
  if (n % 2) s += scalar_table().dotu(x + 2 * pairs, y + 2 * pairs, 1);
  return s;
}

CROSSN_AVX2 Scalar dotc_avx2(const Scalar* x, const Scalar* y, std::size_t n) {
  const std::size_t pairs = n / 2;
  const DotAccum acc = accumulate(x, y, pairs);
  Scalar s(hsum(acc.same), alternating_sum(acc.crossed));
  if (n % 2) s += scalar_table().dotc(x + 2 * pairs, y + 2 * pairs, 1);
  return s;
}

CROSSN_AVX2 double norm_sq_avx2(const Scalar* x, std::size_t n) {
  const double* xd = as_doubles(x);
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const __m256d xv = _mm256_loadu_pd(xd + 2 * i);
    acc = _mm256_fmadd_pd(xv, xv, acc);
  }
  double s = hsum(acc);
  if (i < n) s += scalar_table().norm_sq(x + i, n - i);
  return s;
}

constexpr KernelTable kAvx2{Isa::Avx2, "avx2", axpy_avx2, dotu_avx2, dotc_avx2, norm_sq_avx2};

}  // namespace

const KernelTable& avx2_table() noexcept { return kAvx2; }

}  // namespace crossn::kernels

#endif  // CROSSN_HAVE_AVX2
