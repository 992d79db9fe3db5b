#include "superpose/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <functional>
#include <numeric>

#include "superpose/errors.hpp"
#include "superpose/kernels.hpp"

namespace superpose {

namespace {

constexpr int kMaxSweeps = 100;
constexpr double kSweepTol = 1e-14;

double max_offdiag(const ComplexMatrix& a) {
  double best = 0.0;
  for (std::size_t p = 0; p + 1 < a.rows(); ++p) {
    for (std::size_t q = p + 1; q < a.rows(); ++q) {
      best = std::max(best, std::abs(a(p, q)));
    }
  }
  return best;
}

void check_square_hermitian(const ComplexMatrix& m, double tol) {
  if (m.rows() != m.cols()) fail(Errc::non_square, "hermitian_eig: matrix is not square");
  if (m.size() == 0) fail(Errc::non_square, "hermitian_eig: empty matrix");
  if (!m.all_finite()) fail(Errc::numeric_failure, "hermitian_eig: non-finite entries");
  double asym = 0.0;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      asym += std::norm(m(i, j) - std::conj(m(j, i)));
    }
  }
  const double fro = frobenius_norm(m);
  if (std::sqrt(asym) > tol * std::max(fro, 1e-300)) {
    fail(Errc::not_hermitian, "hermitian_eig: asymmetry exceeds tolerance");
  }
}

}  // namespace

EigenDecomposition hermitian_eig(const ComplexMatrix& m, double tol) {
  check_square_hermitian(m, tol);
  const std::size_t n = m.rows();

  // Work on the exactly-Hermitian average; conjugate-mirrored updates then
  // stay mirrored bit-for-bit through the sweeps.
  ComplexMatrix a(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    a(i, i) = {m(i, i).real(), 0.0};
    for (std::size_t j = i + 1; j < n; ++j) {
      const auto v = 0.5 * (m(i, j) + std::conj(m(j, i)));
      a(i, j) = v;
      a(j, i) = std::conj(v);
    }
  }
  ComplexMatrix v = ComplexMatrix::identity(n);

  const double threshold = kSweepTol * std::max(frobenius_norm(a), 1e-300);
  bool converged = max_offdiag(a) <= threshold;
  for (int sweep = 0; sweep < kMaxSweeps && !converged; ++sweep) {
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const auto b = a(p, q);
        const double ab = std::abs(b);
        if (ab <= 0.01 * threshold) continue;

        // Absorb the phase so the pivot block is real, then a classic
        // symmetric Jacobi rotation annihilates it. Combined unitary G acts
        // on columns (p,q): G_pp=c, G_pq=s, G_qp=-s*conj(u), G_qq=c*conj(u).
        const std::complex<double> u = b / ab;
        const double app = a(p, p).real();
        const double aqq = a(q, q).real();
        const double tau = (aqq - app) / (2.0 * ab);
        const double t = (tau >= 0.0) ? 1.0 / (tau + std::sqrt(1.0 + tau * tau))
                                      : 1.0 / (tau - std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;
        const std::complex<double> su = s * std::conj(u);

        for (std::size_t i = 0; i < n; ++i) {
          if (i == p || i == q) continue;
          const auto xp = a(i, p);
          const auto xq = a(i, q);
          a(i, p) = c * xp - su * xq;
          a(i, q) = s * xp + c * std::conj(u) * xq;
          a(p, i) = std::conj(a(i, p));
          a(q, i) = std::conj(a(i, q));
        }
        a(p, p) = {app - t * ab, 0.0};
        a(q, q) = {aqq + t * ab, 0.0};
        a(p, q) = 0.0;
        a(q, p) = 0.0;

        for (std::size_t i = 0; i < n; ++i) {
          const auto vp = v(i, p);
          const auto vq = v(i, q);
          v(i, p) = c * vp - su * vq;
          v(i, q) = s * vp + c * std::conj(u) * vq;
        }
      }
    }
    converged = max_offdiag(a) <= threshold;
  }
  if (!converged) fail(Errc::no_convergence, "hermitian_eig: sweep cap reached");

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t i, std::size_t j) { return a(i, i).real() < a(j, j).real(); });

  EigenDecomposition out;
  out.eigenvalues.resize(n);
  out.eigenvectors = ComplexMatrix(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    out.eigenvalues[k] = a(order[k], order[k]).real();
    for (std::size_t i = 0; i < n; ++i) {
      out.eigenvectors(i, k) = v(i, order[k]);
    }
  }
  return out;
}

EigenDecomposition hermitian_eig_psd(const ComplexMatrix& m, double tol) {
  EigenDecomposition d = hermitian_eig(m, tol);
  for (double& lam : d.eigenvalues) {
    if (lam < 0.0) {
      if (lam < -tol) {
        fail(Errc::numeric_failure, "hermitian_eig_psd: eigenvalue below -tol on a PSD input");
      }
      lam = 0.0;
    }
  }
  return d;
}

std::vector<double> singular_values(const ComplexMatrix& m) {
  if (m.size() == 0 || frobenius_norm_sq(m) == 0.0) {
    fail(Errc::zero_matrix, "singular_values: zero matrix");
  }

  // One-sided Jacobi (Hestenes): rotate column pairs until mutually
  // orthogonal, then the singular values are the column norms. Unlike the
  // Gram-eigenvalue route this resolves small singular values to full
  // precision, which the rank cut at 1e-9 relies on.
  const std::size_t rows = m.rows(), cols = m.cols();
  std::vector<std::vector<std::complex<double>>> col(cols);
  for (std::size_t j = 0; j < cols; ++j) {
    col[j].resize(rows);
    for (std::size_t i = 0; i < rows; ++i) col[j][i] = m(i, j);
  }

  const double fro_sq = frobenius_norm_sq(m);  // invariant under the rotations
  bool converged = cols < 2;
  for (int sweep = 0; sweep < kMaxSweeps && !converged; ++sweep) {
    converged = true;
    for (std::size_t p = 0; p + 1 < cols; ++p) {
      for (std::size_t q = p + 1; q < cols; ++q) {
        const double app = kernels::sumsq(col[p].data(), rows);
        const double aqq = kernels::sumsq(col[q].data(), rows);
        // deflated columns (norm at the noise floor) would otherwise chase
        // each other around the null space forever
        if (std::min(app, aqq) <= 1e-28 * fro_sq) continue;
        const auto g = kernels::dotc(col[q].data(), col[p].data(), rows);  // <c_p, c_q>
        const double ab = std::abs(g);
        if (ab <= 1e-14 * std::sqrt(app * aqq) || ab == 0.0) continue;
        converged = false;

        const std::complex<double> u = g / ab;
        const double tau = (aqq - app) / (2.0 * ab);
        const double t = (tau >= 0.0) ? 1.0 / (tau + std::sqrt(1.0 + tau * tau))
                                      : 1.0 / (tau - std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;
        const std::complex<double> su = s * std::conj(u);
        for (std::size_t i = 0; i < rows; ++i) {
          const auto xp = col[p][i];
          const auto xq = col[q][i];
          col[p][i] = c * xp - su * xq;
          col[q][i] = s * xp + c * std::conj(u) * xq;
        }
      }
    }
  }
  if (!converged) fail(Errc::no_convergence, "singular_values: sweep cap reached");

  std::vector<double> norms(cols);
  for (std::size_t j = 0; j < cols; ++j) {
    norms[j] = std::sqrt(kernels::sumsq(col[j].data(), rows));
  }
  std::sort(norms.begin(), norms.end(), std::greater<>());
  // contract: length rows(M); beyond min(rows, cols) the values are zero
  std::vector<double> sv(rows, 0.0);
  for (std::size_t i = 0; i < rows && i < norms.size(); ++i) sv[i] = norms[i];
  return sv;
}

std::complex<double> frobenius_inner(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    fail(Errc::shape_mismatch, "frobenius_inner: shapes differ");
  }
  return kernels::dotc(a.data(), b.data(), a.size());
}

int numerical_rank(const ComplexMatrix& m, double rel_tol) {
  if (rel_tol <= 0.0 || rel_tol >= 1.0) fail(Errc::domain_error, "numerical_rank: rel_tol outside (0,1)");
  const auto sv = singular_values(m);
  const double cut = rel_tol * sv.front();
  int r = 0;
  for (double s : sv) {
    if (s > cut) ++r;
  }
  return r;
}

double weyl_margin(const ComplexMatrix& h, const ComplexMatrix& k) {
  if (h.rows() != k.rows() || h.cols() != k.cols()) {
    fail(Errc::shape_mismatch, "weyl_check: shapes differ");
  }
  const auto lh = hermitian_eig(h).eigenvalues;
  const auto lk = hermitian_eig(k).eigenvalues;
  const auto ls = hermitian_eig(linear_combination(1.0, h, 1.0, k)).eigenvalues;
  const std::size_t n = lh.size();
  double margin = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < n; ++i) {
    margin = std::max(margin, lh[i] + lk.front() - ls[i]);  // lower chain
    margin = std::max(margin, ls[i] - (lh[i] + lk.back())); // upper chain
  }
  return margin;
}

bool weyl_check(const ComplexMatrix& h, const ComplexMatrix& k, double tol) {
  return weyl_margin(h, k) <= tol;
}

}  // namespace superpose
