#include "superpose/kernels.hpp"

#if defined(SUPERPOSE_HAVE_AVX2_BUILD)

#include <immintrin.h>

// Complex doubles are stored interleaved (re, im), two per __m256d lane pair.
// Tails shorter than the vector width fall back to the scalar loop.

namespace superpose::kernels {

namespace {

inline double hsum(__m256d v) {
  __m128d lo = _mm256_castpd256_pd128(v);
  __m128d hi = _mm256_extractf128_pd(v, 1);
  lo = _mm_add_pd(lo, hi);
  return _mm_cvtsd_f64(_mm_add_sd(lo, _mm_unpackhi_pd(lo, lo)));
}

cplx dotc_avx2(const cplx* a, const cplx* b, std::size_t n) {
  const double* pa = reinterpret_cast<const double*>(a);
  const double* pb = reinterpret_cast<const double*>(b);
  const std::size_t n2 = n & ~std::size_t(1);

  // re: ar*br + ai*bi accumulates in acc_re; im: ai*br - ar*bi in acc_im.
  __m256d acc_re = _mm256_setzero_pd();
  __m256d acc_im = _mm256_setzero_pd();
  const __m256d sign = _mm256_set_pd(1.0, -1.0, 1.0, -1.0);
  for (std::size_t k = 0; k < n2; k += 2) {
    __m256d va = _mm256_loadu_pd(pa + 2 * k);
    __m256d vb = _mm256_loadu_pd(pb + 2 * k);
    acc_re = _mm256_add_pd(acc_re, _mm256_mul_pd(va, vb));
    __m256d vbs = _mm256_shuffle_pd(vb, vb, 0x5);  // [bi, br] per complex
    acc_im = _mm256_add_pd(acc_im, _mm256_mul_pd(sign, _mm256_mul_pd(va, vbs)));
  }
  double re = hsum(acc_re);
  double im = hsum(acc_im);
  for (std::size_t k = n2; k < n; ++k) {
    const double ar = a[k].real(), ai = a[k].imag();
    const double br = b[k].real(), bi = b[k].imag();
    re += ar * br + ai * bi;
    im += ai * br - ar * bi;
  }
  return {re, im};
}

double sumsq_avx2(const cplx* a, std::size_t n) {
  const double* pa = reinterpret_cast<const double*>(a);
  const std::size_t n2 = n & ~std::size_t(1);
  __m256d acc = _mm256_setzero_pd();
  for (std::size_t k = 0; k < n2; k += 2) {
    __m256d v = _mm256_loadu_pd(pa + 2 * k);
    acc = _mm256_add_pd(acc, _mm256_mul_pd(v, v));
  }
  double s = hsum(acc);
  for (std::size_t k = n2; k < n; ++k) {
    s += a[k].real() * a[k].real() + a[k].imag() * a[k].imag();
  }
  return s;
}

// [s*x] for a lane pair: addsub(sr*x, si*swap(x)) gives the complex product.
inline __m256d cmul(__m256d sr, __m256d si, __m256d x) {
  __m256d xs = _mm256_shuffle_pd(x, x, 0x5);
  return _mm256_addsub_pd(_mm256_mul_pd(sr, x), _mm256_mul_pd(si, xs));
}

void axpby_avx2(cplx alpha, const cplx* x, cplx beta, const cplx* y, cplx* out, std::size_t n) {
  const double* px = reinterpret_cast<const double*>(x);
  const double* py = reinterpret_cast<const double*>(y);
  double* po = reinterpret_cast<double*>(out);
  const std::size_t n2 = n & ~std::size_t(1);
  const __m256d ar = _mm256_set1_pd(alpha.real()), ai = _mm256_set1_pd(alpha.imag());
  const __m256d br = _mm256_set1_pd(beta.real()), bi = _mm256_set1_pd(beta.imag());
  for (std::size_t k = 0; k < n2; k += 2) {
    __m256d vx = _mm256_loadu_pd(px + 2 * k);
    __m256d vy = _mm256_loadu_pd(py + 2 * k);
    _mm256_storeu_pd(po + 2 * k, _mm256_add_pd(cmul(ar, ai, vx), cmul(br, bi, vy)));
  }
  for (std::size_t k = n2; k < n; ++k) {
    out[k] = alpha * x[k] + beta * y[k];
  }
}

void scale_avx2(cplx s, const cplx* x, cplx* out, std::size_t n) {
  const double* px = reinterpret_cast<const double*>(x);
  double* po = reinterpret_cast<double*>(out);
  const std::size_t n2 = n & ~std::size_t(1);
  const __m256d sr = _mm256_set1_pd(s.real()), si = _mm256_set1_pd(s.imag());
  for (std::size_t k = 0; k < n2; k += 2) {
    _mm256_storeu_pd(po + 2 * k, cmul(sr, si, _mm256_loadu_pd(px + 2 * k)));
  }
  for (std::size_t k = n2; k < n; ++k) {
    out[k] = s * x[k];
  }
}

}  // namespace

const Ops* avx2_ops_impl() {
  static const Ops ops{dotc_avx2, sumsq_avx2, axpby_avx2, scale_avx2, "avx2"};
  return &ops;
}

}  // namespace superpose::kernels

#endif  // SUPERPOSE_HAVE_AVX2_BUILD
