#include "superpose/complex_matrix.hpp"

#include <cmath>

#include "superpose/errors.hpp"
#include "superpose/kernels.hpp"

namespace superpose {

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<value_type> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows_ * cols_) {
    fail(Errc::length_mismatch, "matrix entry count does not match rows*cols");
  }
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
  ComplexMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix out(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) {
      out(j, i) = std::conj((*this)(i, j));
    }
  }
  return out;
}

bool ComplexMatrix::all_finite() const {
  for (const auto& z : entries_) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
  }
  return true;
}

double frobenius_norm_sq(const ComplexMatrix& m) {
  return kernels::sumsq(m.data(), m.size());
}

double frobenius_norm(const ComplexMatrix& m) { return std::sqrt(frobenius_norm_sq(m)); }

ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.cols() != b.rows()) fail(Errc::shape_mismatch, "matmul: inner dimensions differ");
  ComplexMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const auto aik = a(i, k);
      for (std::size_t j = 0; j < b.cols(); ++j) {
        out(i, j) += aik * b(k, j);
      }
    }
  }
  return out;
}

ComplexMatrix multiply_adjoint(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.cols() != b.cols()) fail(Errc::shape_mismatch, "multiply_adjoint: column counts differ");
  ComplexMatrix out(a.rows(), b.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < b.rows(); ++j) {
      out(i, j) = kernels::dotc(a.row(i), b.row(j), a.cols());
    }
  }
  return out;
}

ComplexMatrix gram(const ComplexMatrix& m) {
  const std::size_t n = m.rows();
  ComplexMatrix out(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    out(i, i) = kernels::sumsq(m.row(i), m.cols());
    for (std::size_t j = i + 1; j < n; ++j) {
      const auto v = kernels::dotc(m.row(i), m.row(j), m.cols());
      out(i, j) = v;
      out(j, i) = std::conj(v);
    }
  }
  return out;
}

ComplexMatrix linear_combination(std::complex<double> alpha, const ComplexMatrix& a,
                                 std::complex<double> beta, const ComplexMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    fail(Errc::shape_mismatch, "linear_combination: shapes differ");
  }
  ComplexMatrix out(a.rows(), a.cols());
  kernels::axpby(alpha, a.data(), beta, b.data(), out.data(), a.size());
  return out;
}

ComplexMatrix scaled(const ComplexMatrix& m, std::complex<double> s) {
  ComplexMatrix out(m.rows(), m.cols());
  kernels::scale(s, m.data(), out.data(), m.size());
  return out;
}

std::complex<double> trace(const ComplexMatrix& m) {
  std::complex<double> t = 0.0;
  const std::size_t n = m.rows() < m.cols() ? m.rows() : m.cols();
  for (std::size_t i = 0; i < n; ++i) t += m(i, i);
  return t;
}

}  // namespace superpose
