#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <optional>
#include <utility>

#include "superpose/rng.hpp"
#include "superpose/states.hpp"

namespace superpose {

/// Seeded construction recipe. Identical configs give bit-identical outputs;
/// every generator derives its values from SplitMix64 streams keyed on
/// (seed, generator label), so the generators never perturb each other.
struct GeneratorConfig {
  std::uint64_t seed = 0;
  std::size_t n = 2;
  std::size_t m = 2;
  std::array<double, 2> alpha_sq_range{0.0, 1.0};
};

/// Haar-uniform state on the unit sphere of the n*m amplitude space
/// (normalized matrix of iid standard complex Gaussians).
PureState haar_state(const GeneratorConfig& cfg);

/// Pair with Psi Phi† = 0 to machine precision: a Haar m x m unitary's
/// columns are split into two blocks (sizes ceil(m/2) / floor(m/2), or
/// `split` when nonzero) and each state is built inside one block's row
/// space. Requires m >= 2.
std::pair<PureState, PureState> biorthogonal_pair(const GeneratorConfig& cfg,
                                                  std::size_t split = 0);

/// Pair with Tr Psi Phi† = 0 to machine precision (Gram-Schmidt in the n*m
/// vector space, fresh draw when the residual norm falls below 1e-6).
/// Requires n*m >= 2.
std::pair<PureState, PureState> orthogonal_pair(const GeneratorConfig& cfg);

/// (alpha, beta) with |alpha|^2 uniform in cfg.alpha_sq_range, independent
/// uniform phases, |alpha|^2 + |beta|^2 = 1.
std::pair<std::complex<double>, std::complex<double>> random_amplitudes(
    const GeneratorConfig& cfg);

struct SearchResult {
  std::optional<PureState> phi;  // empty when no positive bound was found
  double bound = 0.0;            // best trace-orthogonal lower_combined found
  std::size_t trials_evaluated = 0;
};

/// Random search for an orthogonal partner Phi maximizing the
/// trace-orthogonal lower bound of alpha*psi + beta*Phi. Half the trials are
/// biased toward partners with one dominant Schmidt coefficient (large
/// lambda_max), where the bound has room to clear its clamp. Amplitudes are
/// drawn per trial from cfg.alpha_sq_range. An empty search is a valid
/// outcome.
SearchResult lower_bound_search(const GeneratorConfig& cfg, const PureState& psi,
                                std::size_t trials);

/// Haar-distributed n x n unitary (QR of a Ginibre matrix with the phase fix).
ComplexMatrix haar_unitary(std::size_t n, SplitMix64& rng);

/// GUE-style random Hermitian matrix, (G + G†)/2 with Ginibre G.
ComplexMatrix random_hermitian(std::size_t n, SplitMix64& rng);

/// Ginibre matrix: iid standard complex Gaussian entries.
ComplexMatrix ginibre(std::size_t rows, std::size_t cols, SplitMix64& rng);

}  // namespace superpose
