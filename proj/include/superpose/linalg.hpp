#pragma once

#include <complex>
#include <vector>

#include "superpose/complex_matrix.hpp"

namespace superpose {

/// Result of a Hermitian eigendecomposition, M = V diag(lambda) V†.
/// Eigenvalues are sorted ascending (lambda_1 <= ... <= lambda_n), so the
/// largest eigenvalue lives at the back. Eigenvector columns are orthonormal.
struct EigenDecomposition {
  std::vector<double> eigenvalues;
  ComplexMatrix eigenvectors;
};

/// Cyclic complex Jacobi eigensolver for small dense Hermitian matrices.
/// Sweeps until the largest off-diagonal magnitude drops below
/// 1e-14 * ||M||_F, capped at 100 sweeps (no_convergence beyond that).
/// `tol` is the relative asymmetry budget: ||M - M†||_F <= tol * ||M||_F,
/// otherwise not_hermitian.
EigenDecomposition hermitian_eig(const ComplexMatrix& m, double tol = 1e-10);

/// Same solver for matrices that are positive semidefinite by construction
/// (Gram matrices): eigenvalues in [-tol, 0) are snapped to 0, anything more
/// negative is a numeric failure.
EigenDecomposition hermitian_eig_psd(const ComplexMatrix& m, double tol = 1e-10);

/// Singular values of M, descending, length rows(M): square roots of the
/// eigenvalues of M M†.
std::vector<double> singular_values(const ComplexMatrix& m);

/// Tr(A B†) = sum_ij A_ij conj(B_ij)
std::complex<double> frobenius_inner(const ComplexMatrix& a, const ComplexMatrix& b);

/// Number of singular values above rel_tol * sigma_max.
int numerical_rank(const ComplexMatrix& m, double rel_tol = 1e-9);

/// Both eigenvalue interlacing chains
///   lambda_i(H) + lambda_1(K) <= lambda_i(H+K) <= lambda_i(H) + lambda_n(K)
/// for every i, within additive tolerance tol.
bool weyl_check(const ComplexMatrix& h, const ComplexMatrix& k, double tol);

/// Largest violation margin of the two chains (<= 0 when they hold exactly).
double weyl_margin(const ComplexMatrix& h, const ComplexMatrix& k);

}  // namespace superpose
