#include "superpose/bounds.hpp"

#include <algorithm>
#include <cmath>

#include "superpose/errors.hpp"
#include "superpose/linalg.hpp"

namespace superpose {

namespace {

constexpr double kPremiseTol = 1e-8;

void check_unit_interval(double x, const char* what) {
  if (!(x >= 0.0) || !(x <= 1.0 + 1e-12)) {
    fail(Errc::domain_error, std::string(what) + " outside [0, 1]");
  }
}

void check_common_domains(double c_sq, double alpha_sq, double beta_sq, double lambda_max,
                          int r) {
  if (!(c_sq >= 0.0) || c_sq >= 1.0) fail(Errc::domain_error, "c_sq outside [0, 1)");
  check_unit_interval(alpha_sq, "alpha_sq");
  check_unit_interval(beta_sq, "beta_sq");
  check_unit_interval(lambda_max, "lambda_max");
  if (r < 1) fail(Errc::domain_error, "rank below 1");
}

double lambda_max_of(const PureState& s) {
  return hermitian_eig_psd(gram(s.matrix())).eigenvalues.back();
}

struct Anchors {
  double c_sq_psi, c_sq_phi;
  double alpha_sq, beta_sq;
  double lambda_psi, lambda_phi;
};

Anchors anchors_of(const SuperpositionInput& inp) {
  Anchors a;
  const double c_psi = concurrence(inp.psi);
  const double c_phi = concurrence(inp.phi);
  a.c_sq_psi = c_psi * c_psi;
  a.c_sq_phi = c_phi * c_phi;
  a.alpha_sq = std::norm(inp.alpha);
  a.beta_sq = std::norm(inp.beta);
  a.lambda_psi = lambda_max_of(inp.psi);
  a.lambda_phi = lambda_max_of(inp.phi);
  return a;
}

void fill_combined(BoundReport& r) {
  r.lower_combined = std::max(r.lower_individual[0], r.lower_individual[1]);
  r.lower_symmetric = 0.5 * (r.lower_individual[0] + r.lower_individual[1]);
  r.upper_combined = std::min(r.upper_individual[0], r.upper_individual[1]);
  r.upper_symmetric = 0.5 * (r.upper_individual[0] + r.upper_individual[1]);
}

}  // namespace

double c_tilde_scaled(double c_psi, double alpha_sq, double beta_sq) {
  if (!(c_psi >= 0.0) || c_psi >= 1.0) fail(Errc::domain_error, "c_psi outside [0, 1)");
  check_unit_interval(alpha_sq, "alpha_sq");
  check_unit_interval(beta_sq, "beta_sq");
  if (std::abs(alpha_sq + beta_sq - 1.0) > 1e-12) {
    fail(Errc::domain_error, "alpha_sq + beta_sq is not 1");
  }
  return std::sqrt(alpha_sq * alpha_sq * c_psi * c_psi + beta_sq * beta_sq +
                   2.0 * alpha_sq * beta_sq);
}

double f_func(double c_sq, double ratio, double lambda_max, int r) {
  if (!(ratio >= 0.0) || !std::isfinite(ratio)) fail(Errc::domain_error, "ratio must be finite and >= 0");
  check_common_domains(c_sq, 0.0, 0.0, lambda_max, r);
  const double rl = ratio * lambda_max;
  return std::sqrt(c_sq + (r - 1) * rl * (2.0 + r * rl));
}

double f_scaled(double c_sq, double alpha_sq, double beta_sq, double lambda_max, int r) {
  check_common_domains(c_sq, alpha_sq, beta_sq, lambda_max, r);
  const double bl = beta_sq * lambda_max;
  return std::sqrt(alpha_sq * alpha_sq * c_sq + (r - 1) * bl * (2.0 * alpha_sq + r * bl));
}

double l_scaled(double c_sq, double alpha_sq, double beta_sq, double lambda_max, int r) {
  return l_tilde_func(c_sq, alpha_sq, beta_sq, lambda_max, r, 1.0);
}

double l_func(double c_sq, double alpha_sq, double beta_sq, double lambda_max, int r) {
  check_common_domains(c_sq, alpha_sq, beta_sq, lambda_max, r);
  if (alpha_sq <= 0.0) fail(Errc::domain_error, "l_func: alpha_sq must be positive");
  return l_scaled(c_sq, alpha_sq, beta_sq, lambda_max, r) / alpha_sq;
}

double l_tilde_func(double c_sq, double alpha_sq, double beta_sq, double lambda_max, int r,
                    double norm_sq) {
  check_common_domains(c_sq, alpha_sq, beta_sq, lambda_max, r);
  if (!(norm_sq > 0.0) || norm_sq > 2.0 + 1e-12) {
    fail(Errc::domain_error, "norm_sq outside (0, 2]");
  }
  const double bracket = alpha_sq * alpha_sq * c_sq +
                         beta_sq * beta_sq * (1.0 - r * lambda_max * lambda_max) +
                         2.0 * alpha_sq * beta_sq * lambda_max -
                         (1.0 - norm_sq * norm_sq / 4.0);
  return std::sqrt(std::max(0.0, bracket));
}

bool condition29(double c_sq, double alpha_sq, double beta_sq, int r) {
  check_common_domains(c_sq, alpha_sq, beta_sq, 0.0, r);
  return beta_sq * beta_sq + alpha_sq * alpha_sq * (c_sq + 1.0 / r) > 0.75;
}

bool condition38(double c_sq, double alpha_sq, double beta_sq, int r, double norm_sq) {
  check_common_domains(c_sq, alpha_sq, beta_sq, 0.0, r);
  return beta_sq * beta_sq + alpha_sq * alpha_sq * (c_sq + 1.0 / r) >
         1.0 - norm_sq * norm_sq / 4.0;
}

BoundReport theorem1_bounds(const SuperpositionInput& inp, bool force) {
  const double residual = frobenius_norm(multiply_adjoint(inp.psi.matrix(), inp.phi.matrix()));
  if (residual > kPremiseTol && !force) {
    fail(Errc::relation_violation, "theorem1_bounds: ||Psi Phi†||_F exceeds 1e-8");
  }

  const Anchors a = anchors_of(inp);
  const Superposition sup = superpose(inp);

  BoundReport r{};
  r.theorem = Theorem::t1;
  r.forced = force && residual > kPremiseTol;
  r.premise_residual = residual;
  r.norm_sq = sup.norm_sq;
  r.rank_r = numerical_rank(sup.gamma);
  r.lambda_max_psi = a.lambda_psi;
  r.lambda_max_phi = a.lambda_phi;
  r.actual_concurrence = concurrence(PureState::normalized(sup.gamma));

  r.lower_individual = {a.alpha_sq * std::sqrt(a.c_sq_psi), a.beta_sq * std::sqrt(a.c_sq_phi)};
  r.upper_individual = {c_tilde_scaled(std::sqrt(a.c_sq_psi), a.alpha_sq, a.beta_sq),
                        c_tilde_scaled(std::sqrt(a.c_sq_phi), a.beta_sq, a.alpha_sq)};
  fill_combined(r);
  r.condition_flag = std::nullopt;
  return r;
}

BoundReport theorem2_bounds(const SuperpositionInput& inp, bool force) {
  const double residual = std::abs(frobenius_inner(inp.psi.matrix(), inp.phi.matrix()));
  if (residual > kPremiseTol && !force) {
    fail(Errc::relation_violation, "theorem2_bounds: |Tr Psi Phi†| exceeds 1e-8");
  }

  const Anchors a = anchors_of(inp);
  const Superposition sup = superpose(inp);

  BoundReport r{};
  r.theorem = Theorem::t2;
  r.forced = force && residual > kPremiseTol;
  r.premise_residual = residual;
  r.norm_sq = sup.norm_sq;
  r.rank_r = numerical_rank(sup.gamma);
  r.lambda_max_psi = a.lambda_psi;
  r.lambda_max_phi = a.lambda_phi;
  r.actual_concurrence = concurrence(PureState::normalized(sup.gamma));

  r.upper_individual = {2.0 * f_scaled(a.c_sq_psi, a.alpha_sq, a.beta_sq, a.lambda_phi, r.rank_r),
                        2.0 * f_scaled(a.c_sq_phi, a.beta_sq, a.alpha_sq, a.lambda_psi, r.rank_r)};
  r.lower_individual = {2.0 * l_scaled(a.c_sq_psi, a.alpha_sq, a.beta_sq, a.lambda_phi, r.rank_r),
                        2.0 * l_scaled(a.c_sq_phi, a.beta_sq, a.alpha_sq, a.lambda_psi, r.rank_r)};
  fill_combined(r);

  // condition for the anchor that carries the better lower bound
  if (r.lower_individual[0] >= r.lower_individual[1]) {
    r.condition_flag = condition29(a.c_sq_psi, a.alpha_sq, a.beta_sq, r.rank_r);
  } else {
    r.condition_flag = condition29(a.c_sq_phi, a.beta_sq, a.alpha_sq, r.rank_r);
  }
  return r;
}

BoundReport theorem3_bounds(const SuperpositionInput& inp) {
  const Anchors a = anchors_of(inp);
  const Superposition sup = superpose(inp);
  const double ns = sup.norm_sq;
  const double scale = 2.0 / ns;  // bound values -> concurrence scale

  BoundReport r{};
  r.theorem = Theorem::t3;
  r.forced = false;
  r.premise_residual = 0.0;
  r.norm_sq = ns;
  r.rank_r = numerical_rank(sup.gamma);
  r.lambda_max_psi = a.lambda_psi;
  r.lambda_max_phi = a.lambda_phi;
  r.actual_concurrence = concurrence(PureState::normalized(sup.gamma));

  r.upper_individual = {
      scale * f_scaled(a.c_sq_psi, a.alpha_sq, a.beta_sq, a.lambda_phi, r.rank_r),
      scale * f_scaled(a.c_sq_phi, a.beta_sq, a.alpha_sq, a.lambda_psi, r.rank_r)};
  r.lower_individual = {
      scale * l_tilde_func(a.c_sq_psi, a.alpha_sq, a.beta_sq, a.lambda_phi, r.rank_r, ns),
      scale * l_tilde_func(a.c_sq_phi, a.beta_sq, a.alpha_sq, a.lambda_psi, r.rank_r, ns)};
  fill_combined(r);

  if (r.lower_individual[0] >= r.lower_individual[1]) {
    r.condition_flag = condition38(a.c_sq_psi, a.alpha_sq, a.beta_sq, r.rank_r, ns);
  } else {
    r.condition_flag = condition38(a.c_sq_phi, a.beta_sq, a.alpha_sq, r.rank_r, ns);
  }
  return r;
}

}  // namespace superpose
