#pragma once

#include <complex>
#include <cstddef>
#include <string_view>

namespace superpose::kernels {

using cplx = std::complex<double>;

// Inner-loop primitives over contiguous complex arrays. Every entry points to
// a scalar reference implementation or a SIMD variant of it; the two are
// equivalence-tested against each other on random inputs (summation order may
// differ, so agreement is to rounding, not bitwise).
struct Ops {
  // sum_k a[k] * conj(b[k])
  cplx (*dotc)(const cplx* a, const cplx* b, std::size_t n);
  // sum_k |a[k]|^2
  double (*sumsq)(const cplx* a, std::size_t n);
  // out[k] = alpha*x[k] + beta*y[k]; out may alias x or y
  void (*axpby)(cplx alpha, const cplx* x, cplx beta, const cplx* y, cplx* out, std::size_t n);
  // out[k] = s*x[k]; out may alias x
  void (*scale)(cplx s, const cplx* x, cplx* out, std::size_t n);
  const char* name;
};

const Ops& scalar_ops();

// AVX2 table, or nullptr when the binary lacks the variant or the CPU lacks
// the instructions.
const Ops* avx2_ops();

// Currently selected table. Resolution happens once, on first use: the
// SUPERPOSE_KERNELS environment variable ("scalar", "avx2", "auto") wins,
// otherwise the best available variant is chosen.
const Ops& active();

// Force a variant by name; returns false (and changes nothing) when the
// variant is unavailable. Not safe to call concurrently with kernel use.
bool select(std::string_view name);

inline cplx dotc(const cplx* a, const cplx* b, std::size_t n) { return active().dotc(a, b, n); }
inline double sumsq(const cplx* a, std::size_t n) { return active().sumsq(a, n); }
inline void axpby(cplx alpha, const cplx* x, cplx beta, const cplx* y, cplx* out, std::size_t n) {
  active().axpby(alpha, x, beta, y, out, n);
}
inline void scale(cplx s, const cplx* x, cplx* out, std::size_t n) { active().scale(s, x, out, n); }

}  // namespace superpose::kernels
