#include "superpose/states.hpp"

#include <algorithm>
#include <cmath>

#include "superpose/errors.hpp"
#include "superpose/kernels.hpp"
#include "superpose/linalg.hpp"

namespace superpose {

namespace {

constexpr double kNormTol = 1e-12;
constexpr double kDegenerate = 1e-12;

}  // namespace

PureState PureState::from_matrix(ComplexMatrix psi) {
  if (psi.rows() < 1 || psi.cols() < 1) fail(Errc::domain_error, "state: empty dimensions");
  if (!psi.all_finite()) fail(Errc::numeric_failure, "state: non-finite amplitudes");
  const double nrm = frobenius_norm(psi);
  if (std::abs(nrm - 1.0) > kNormTol) {
    fail(Errc::domain_error, "state: Frobenius norm is not 1 within 1e-12");
  }
  return PureState(std::move(psi));
}

PureState PureState::normalized(const ComplexMatrix& m) {
  if (m.rows() < 1 || m.cols() < 1) fail(Errc::domain_error, "state: empty dimensions");
  if (!m.all_finite()) fail(Errc::numeric_failure, "state: non-finite amplitudes");
  const double nrm = frobenius_norm(m);
  if (nrm <= 0.0) fail(Errc::zero_vector, "state: cannot normalize the zero matrix");
  return PureState(scaled(m, 1.0 / nrm));
}

PureState PureState::from_vector(std::span<const std::complex<double>> v, std::size_t n,
                                 std::size_t m) {
  if (v.size() != n * m) {
    fail(Errc::length_mismatch, "from_vector: expected n*m amplitudes");
  }
  ComplexMatrix psi(n, m, std::vector<std::complex<double>>(v.begin(), v.end()));
  return normalized(psi);
}

ComplexMatrix reduced_density(const PureState& s) { return gram(s.matrix()); }

ConcurrenceRoutes concurrence_routes(const PureState& s) {
  ConcurrenceRoutes r{};

  const ComplexMatrix rho = reduced_density(s);
  r.trace_form = std::sqrt(std::max(0.0, 1.0 - kernels::sumsq(rho.data(), rho.size())));

  const auto sv = singular_values(s.matrix());
  double quartic = 0.0;
  for (double sigma : sv) quartic += sigma * sigma * sigma * sigma;
  r.sigma_form = std::sqrt(std::max(0.0, 1.0 - quartic));

  // other-party reduction psi† psi; the cross sum has no cancellation, so it
  // keeps relative accuracy for nearly-product states
  const auto mu = hermitian_eig_psd(gram(s.matrix().adjoint())).eigenvalues;
  double cross = 0.0;
  for (std::size_t i = 0; i < mu.size(); ++i) {
    for (std::size_t j = 0; j < mu.size(); ++j) {
      if (i != j) cross += mu[i] * mu[j];
    }
  }
  r.cross_form = std::sqrt(std::max(0.0, cross));
  return r;
}

double concurrence(const PureState& s) {
  const auto r = concurrence_routes(s);
  const double sq[3] = {r.trace_form * r.trace_form, r.sigma_form * r.sigma_form,
                        r.cross_form * r.cross_form};
  for (int i = 0; i < 3; ++i) {
    for (int j = i + 1; j < 3; ++j) {
      if (std::abs(sq[i] - sq[j]) > 5e-12) {
        fail(Errc::numeric_failure, "concurrence: evaluation routes disagree");
      }
    }
  }
  const double cmin = std::min({r.trace_form, r.sigma_form, r.cross_form});
  const double cmax = std::max({r.trace_form, r.sigma_form, r.cross_form});
  if (cmin > 1e-4 && cmax - cmin > 1e-10) {
    fail(Errc::numeric_failure, "concurrence: evaluation routes disagree");
  }
  return r.trace_form;
}

PureState pad_to(const PureState& s, std::size_t n_new, std::size_t m_new) {
  if (n_new < s.n() || m_new < s.m()) {
    fail(Errc::shrink_not_allowed, "pad_to: target dimensions are smaller");
  }
  ComplexMatrix out(n_new, m_new);
  for (std::size_t i = 0; i < s.n(); ++i) {
    for (std::size_t j = 0; j < s.m(); ++j) {
      out(i, j) = s.matrix()(i, j);
    }
  }
  return PureState::from_matrix(std::move(out));
}

RelationClass classify_relation(const PureState& a, const PureState& b, double tol) {
  if (a.n() != b.n() || a.m() != b.m()) {
    fail(Errc::shape_mismatch, "classify_relation: states have different shapes (pad first)");
  }
  const double bio_residual = frobenius_norm(multiply_adjoint(a.matrix(), b.matrix()));
  if (bio_residual <= tol) return {Relation::biorthogonal, tol};
  const double overlap = std::abs(frobenius_inner(a.matrix(), b.matrix()));
  if (overlap <= tol) return {Relation::trace_orthogonal, tol};
  return {Relation::general, tol};
}

SuperpositionInput::SuperpositionInput(std::complex<double> alpha_, std::complex<double> beta_,
                                       PureState psi_, PureState phi_)
    : alpha(alpha_), beta(beta_), psi(std::move(psi_)), phi(std::move(phi_)) {
  if (psi.n() != phi.n() || psi.m() != phi.m()) {
    fail(Errc::shape_mismatch, "superposition: state shapes differ (pad first)");
  }
  const double amp = std::norm(alpha) + std::norm(beta);
  if (std::abs(amp - 1.0) > 1e-12) {
    fail(Errc::domain_error, "superposition: |alpha|^2 + |beta|^2 is not 1 within 1e-12");
  }
}

Superposition superpose(const SuperpositionInput& inp) {
  Superposition out;
  out.gamma = linear_combination(inp.alpha, inp.psi.matrix(), inp.beta, inp.phi.matrix());
  out.norm_sq = frobenius_norm_sq(out.gamma);
  if (out.norm_sq < kDegenerate) {
    fail(Errc::degenerate_superposition, "superpose: ||gamma||^2 below 1e-12");
  }
  return out;
}

}  // namespace superpose
