#include "superpose/kernels.hpp"

namespace superpose::kernels {

namespace {

cplx dotc_scalar(const cplx* a, const cplx* b, std::size_t n) {
  double re = 0.0, im = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    const double ar = a[k].real(), ai = a[k].imag();
    const double br = b[k].real(), bi = b[k].imag();
    re += ar * br + ai * bi;
    im += ai * br - ar * bi;
  }
  return {re, im};
}

double sumsq_scalar(const cplx* a, std::size_t n) {
  double acc = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    acc += a[k].real() * a[k].real() + a[k].imag() * a[k].imag();
  }
  return acc;
}

void axpby_scalar(cplx alpha, const cplx* x, cplx beta, const cplx* y, cplx* out, std::size_t n) {
  for (std::size_t k = 0; k < n; ++k) {
    out[k] = alpha * x[k] + beta * y[k];
  }
}

void scale_scalar(cplx s, const cplx* x, cplx* out, std::size_t n) {
  for (std::size_t k = 0; k < n; ++k) {
    out[k] = s * x[k];
  }
}

}  // namespace

const Ops& scalar_ops() {
  static const Ops ops{dotc_scalar, sumsq_scalar, axpby_scalar, scale_scalar, "scalar"};
  return ops;
}

}  // namespace superpose::kernels
