#pragma once

#include <complex>
#include <span>
#include <utility>

#include "superpose/complex_matrix.hpp"

namespace superpose {

/// Bipartite pure state in matrix form: an n x m matrix of amplitudes a_ij
/// for |psi> = sum_ij a_ij |i>_A |j>_B, unit Frobenius norm (within 1e-12).
class PureState {
 public:
  /// Wrap an already-normalized matrix; rejects norm drift beyond 1e-12.
  static PureState from_matrix(ComplexMatrix psi);

  /// Normalize an arbitrary nonzero matrix into a state.
  static PureState normalized(const ComplexMatrix& m);

  /// Reshape a row-major amplitude vector into an n x m state, normalizing.
  static PureState from_vector(std::span<const std::complex<double>> v, std::size_t n,
                               std::size_t m);

  const ComplexMatrix& matrix() const { return psi_; }
  std::size_t n() const { return psi_.rows(); }
  std::size_t m() const { return psi_.cols(); }

 private:
  explicit PureState(ComplexMatrix psi) : psi_(std::move(psi)) {}
  ComplexMatrix psi_;
};

/// rho_B = psi psi†: n x n, Hermitian, PSD, unit trace.
ComplexMatrix reduced_density(const PureState& s);

/// The three equivalent evaluations of the concurrence:
///   trace_form  sqrt(1 - Tr rho_B^2), summed directly from rho entries;
///   sigma_form  sqrt(1 - sum_i sigma_i^4) from the singular values of psi;
///   cross_form  sqrt(sum_{i!=j} mu_i mu_j) from the spectrum of psi† psi.
/// The routes share no eigensolve path; their spread is a solver health check.
struct ConcurrenceRoutes {
  double trace_form;
  double sigma_form;
  double cross_form;
};

ConcurrenceRoutes concurrence_routes(const PureState& s);

/// Concurrence in [0, sqrt(1 - 1/min(n,m))]. Evaluates all three routes,
/// requires them to agree (squares within 5e-12, values within 1e-10 away
/// from the degenerate near-zero regime) and returns the trace form.
double concurrence(const PureState& s);

/// Embed into a larger space by zero-padding the bottom/right; concurrence
/// is unchanged.
PureState pad_to(const PureState& s, std::size_t n_new, std::size_t m_new);

enum class Relation { biorthogonal, trace_orthogonal, general };

struct RelationClass {
  Relation kind;
  double tol;
};

/// Biorthogonal when ||Psi Phi†||_F <= tol, else trace-orthogonal when
/// |Tr Psi Phi†| <= tol, else general. Biorthogonality implies trace
/// orthogonality, so the tests are ordered strongest first.
RelationClass classify_relation(const PureState& a, const PureState& b, double tol = 1e-10);

/// Superposition amplitudes and the two (shape-matched) states. Validates
/// |alpha|^2 + |beta|^2 = 1 within 1e-12 on construction.
struct SuperpositionInput {
  SuperpositionInput(std::complex<double> alpha, std::complex<double> beta, PureState psi,
                     PureState phi);

  std::complex<double> alpha;
  std::complex<double> beta;
  PureState psi;
  PureState phi;
};

struct Superposition {
  ComplexMatrix gamma;  // alpha*Psi + beta*Phi, unnormalized
  double norm_sq;       // ||gamma||_F^2, in [0, 2]
};

/// Degenerate (norm_sq < 1e-12) superpositions are an error: the normalized
/// state, and with it the concurrence, is undefined there.
Superposition superpose(const SuperpositionInput& inp);

}  // namespace superpose
