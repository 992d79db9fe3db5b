#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace superpose {

/// Dense complex matrix, row-major. The one numeric carrier used everywhere:
/// states in matrix form, Gram matrices, unitaries.
class ComplexMatrix {
 public:
  using value_type = std::complex<double>;

  ComplexMatrix() = default;
  ComplexMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), entries_(rows * cols) {}
  ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<value_type> entries);

  static ComplexMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t size() const { return entries_.size(); }

  value_type& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const value_type& operator()(std::size_t i, std::size_t j) const {
    return entries_[i * cols_ + j];
  }

  value_type* data() { return entries_.data(); }
  const value_type* data() const { return entries_.data(); }

  const value_type* row(std::size_t i) const { return entries_.data() + i * cols_; }
  value_type* row(std::size_t i) { return entries_.data() + i * cols_; }

  ComplexMatrix adjoint() const;
  bool all_finite() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<value_type> entries_;
};

double frobenius_norm_sq(const ComplexMatrix& m);
double frobenius_norm(const ComplexMatrix& m);

/// A * B (cold path, plain triple loop)
ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b);

/// A * B† via row-by-row conjugated dot products; rows are contiguous so this
/// is the kernels' fast path. Requires matching column counts.
ComplexMatrix multiply_adjoint(const ComplexMatrix& a, const ComplexMatrix& b);

/// M * M†, filled from the upper triangle so the result is exactly Hermitian
/// with a real diagonal.
ComplexMatrix gram(const ComplexMatrix& m);

/// alpha*A + beta*B elementwise
ComplexMatrix linear_combination(std::complex<double> alpha, const ComplexMatrix& a,
                                 std::complex<double> beta, const ComplexMatrix& b);

ComplexMatrix scaled(const ComplexMatrix& m, std::complex<double> s);

std::complex<double> trace(const ComplexMatrix& m);

}  // namespace superpose
