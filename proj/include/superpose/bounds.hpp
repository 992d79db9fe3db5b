#pragma once

#include <array>
#include <optional>

#include "superpose/states.hpp"

namespace superpose {

enum class Theorem { t1, t2, t3 };

/// Everything one theorem evaluation produces for a superposition
/// Gamma+ = alpha*Psi + beta*Phi. All bounds are on the concurrence scale of
/// the normalized Gamma+, so lower <= actual <= upper holds directly.
/// Individual pairs are ordered [Psi-anchored, Phi-anchored]; the combined
/// bounds are their max (lower) / min (upper), the symmetric bounds the
/// averages, so by construction
///   lower_symmetric <= lower_combined,  upper_combined <= upper_symmetric.
struct BoundReport {
  Theorem theorem;
  double actual_concurrence;
  std::array<double, 2> lower_individual;
  double lower_combined;
  double lower_symmetric;
  std::array<double, 2> upper_individual;
  double upper_combined;
  double upper_symmetric;
  int rank_r;        // numerical rank of Gamma+ (its Schmidt rank)
  double norm_sq;    // ||Gamma+||_F^2 (1 for orthogonal/biorthogonal inputs)
  std::optional<bool> condition_flag;  // nonzero-lower-bound condition; empty for T1
  double lambda_max_psi;  // largest eigenvalue of Psi Psi†
  double lambda_max_phi;  // largest eigenvalue of Phi Phi†
  double premise_residual;  // ||Psi Phi†||_F (T1) or |Tr Psi Phi†| (T2); 0 for T3
  bool forced;              // premise check bypassed by the caller
};

/// |alpha|^2 * sqrt(C^2(Psi) + |beta|^4/|alpha|^4 + 2|beta|^2/|alpha|^2),
/// evaluated division-free as sqrt(a^4 c^2 + b^4 + 2 a^2 b^2) so alpha -> 0
/// is an exact limit. This is the scaled upper-bound factor of the
/// biorthogonal theorem.
double c_tilde_scaled(double c_psi, double alpha_sq, double beta_sq);

/// sqrt(c_sq + (r-1)*ratio*lambda*(2 + r*ratio*lambda)) with
/// ratio = |beta|^2/|alpha|^2; nondecreasing in ratio, lambda and r.
double f_func(double c_sq, double ratio, double lambda_max, int r);

/// |alpha|^2 * f, division-free:
/// sqrt(a^4 c_sq + (r-1) b^2 lambda (2 a^2 + r b^2 lambda)).
double f_scaled(double c_sq, double alpha_sq, double beta_sq, double lambda_max, int r);

/// sqrt(max{0, c_sq + (b^4/a^4)(1 - r lambda^2) + 2 (b^2/a^2) lambda
///              - 3/(4 a^4)}); requires alpha_sq > 0 — callers wanting the
/// alpha -> 0 limit use l_scaled.
double l_func(double c_sq, double alpha_sq, double beta_sq, double lambda_max, int r);

/// |alpha|^2 * l, division-free:
/// sqrt(max{0, a^4 c_sq + b^4 (1 - r lambda^2) + 2 a^2 b^2 lambda - 3/4}).
double l_scaled(double c_sq, double alpha_sq, double beta_sq, double lambda_max, int r);

/// |alpha|^2-scaled lower-bound factor of the general theorem; reduces to
/// l_scaled at norm_sq = 1:
/// sqrt(max{0, a^4 c_sq + b^4 (1 - r lambda^2) + 2 a^2 b^2 lambda
///              - (1 - norm_sq^2/4)}).
double l_tilde_func(double c_sq, double alpha_sq, double beta_sq, double lambda_max, int r,
                    double norm_sq);

/// Strict inequality |beta|^4 + |alpha|^4 (c_sq + 1/r) > 3/4: when false, the
/// trace-orthogonal lower bound is provably the zero clamp for every partner
/// state. Advisory, evaluated with no tolerance.
bool condition29(double c_sq, double alpha_sq, double beta_sq, int r);

/// Same with the right-hand side 1 - norm_sq^2/4 (general form).
bool condition38(double c_sq, double alpha_sq, double beta_sq, int r, double norm_sq);

/// Biorthogonal premise (||Psi Phi†||_F = 0). Premise residual above 1e-8
/// raises relation_violation unless force is set.
BoundReport theorem1_bounds(const SuperpositionInput& inp, bool force = false);

/// Trace-orthogonal premise (Tr Psi Phi† = 0); biorthogonal inputs qualify.
BoundReport theorem2_bounds(const SuperpositionInput& inp, bool force = false);

/// Arbitrary pair; only degenerate superpositions are rejected.
BoundReport theorem3_bounds(const SuperpositionInput& inp);

}  // namespace superpose
