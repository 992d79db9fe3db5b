#include "superpose/generators.hpp"

#include <cmath>

#include "superpose/bounds.hpp"
#include "superpose/errors.hpp"
#include "superpose/kernels.hpp"
#include "superpose/linalg.hpp"

namespace superpose {

namespace {

// stream labels, one per generator
enum : std::uint64_t {
  kStreamHaar = 1,
  kStreamBiorthogonal = 2,
  kStreamOrthogonal = 3,
  kStreamAmplitudes = 4,
  kStreamSearch = 5,
};

PureState haar_state_from(std::size_t n, std::size_t m, SplitMix64& rng) {
  return PureState::normalized(ginibre(n, m, rng));
}

// Gram-Schmidt step: x minus its projection on the unit state psi; returns
// the residual norm before normalization.
double project_out(const ComplexMatrix& psi, ComplexMatrix& x) {
  const auto overlap = kernels::dotc(x.data(), psi.data(), x.size());
  kernels::axpby(1.0, x.data(), -overlap, psi.data(), x.data(), x.size());
  return frobenius_norm(x);
}

}  // namespace

ComplexMatrix ginibre(std::size_t rows, std::size_t cols, SplitMix64& rng) {
  ComplexMatrix g(rows, cols);
  for (std::size_t k = 0; k < g.size(); ++k) {
    g.data()[k] = rng.next_complex_normal();
  }
  return g;
}

ComplexMatrix random_hermitian(std::size_t n, SplitMix64& rng) {
  const ComplexMatrix g = ginibre(n, n, rng);
  ComplexMatrix h(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    h(i, i) = {g(i, i).real(), 0.0};
    for (std::size_t j = i + 1; j < n; ++j) {
      const auto v = 0.5 * (g(i, j) + std::conj(g(j, i)));
      h(i, j) = v;
      h(j, i) = std::conj(v);
    }
  }
  return h;
}

ComplexMatrix haar_unitary(std::size_t n, SplitMix64& rng) {
  // Gram-Schmidt on Ginibre columns. This is QR with a positive-real R
  // diagonal, whose Q factor is Haar-distributed; the second projection pass
  // restores the orthogonality lost to rounding.
  ComplexMatrix g = ginibre(n, n, rng);
  ComplexMatrix q(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<std::complex<double>> col(n);
    for (std::size_t i = 0; i < n; ++i) col[i] = g(i, j);
    for (int pass = 0; pass < 2; ++pass) {
      for (std::size_t k = 0; k < j; ++k) {
        std::complex<double> proj = 0.0;
        for (std::size_t i = 0; i < n; ++i) proj += std::conj(q(i, k)) * col[i];
        for (std::size_t i = 0; i < n; ++i) col[i] -= proj * q(i, k);
      }
    }
    double nrm = 0.0;
    for (const auto& z : col) nrm += std::norm(z);
    nrm = std::sqrt(nrm);
    if (nrm < 1e-8) {
      // essentially impossible for Gaussian draws; redraw the source column
      for (std::size_t i = 0; i < n; ++i) g(i, j) = rng.next_complex_normal();
      --j;
      continue;
    }
    for (std::size_t i = 0; i < n; ++i) q(i, j) = col[i] / nrm;
  }
  return q;
}

PureState haar_state(const GeneratorConfig& cfg) {
  if (cfg.n < 1 || cfg.m < 1) fail(Errc::dimension_too_small, "haar_state: n, m must be >= 1");
  auto rng = SplitMix64::stream(cfg.seed, kStreamHaar);
  return haar_state_from(cfg.n, cfg.m, rng);
}

std::pair<PureState, PureState> biorthogonal_pair(const GeneratorConfig& cfg,
                                                  std::size_t split) {
  if (cfg.m < 2) {
    fail(Errc::dimension_too_small, "biorthogonal_pair: needs m >= 2");
  }
  const std::size_t k = split == 0 ? (cfg.m + 1) / 2 : split;
  if (k < 1 || k >= cfg.m) fail(Errc::domain_error, "biorthogonal_pair: split outside [1, m-1]");

  auto rng = SplitMix64::stream(cfg.seed, kStreamBiorthogonal);
  const ComplexMatrix w = haar_unitary(cfg.m, rng);

  // W1 = columns [0, k), W2 = the rest. Psi = G1 W1†, Phi = G2 W2†: the rows
  // of Psi live in span(W1), those of Phi in span(W2), so Psi Phi† = 0.
  ComplexMatrix w1(cfg.m, k), w2(cfg.m, cfg.m - k);
  for (std::size_t i = 0; i < cfg.m; ++i) {
    for (std::size_t j = 0; j < k; ++j) w1(i, j) = w(i, j);
    for (std::size_t j = k; j < cfg.m; ++j) w2(i, j - k) = w(i, j);
  }
  const ComplexMatrix g1 = ginibre(cfg.n, k, rng);
  const ComplexMatrix g2 = ginibre(cfg.n, cfg.m - k, rng);
  PureState psi = PureState::normalized(multiply_adjoint(g1, w1));
  PureState phi = PureState::normalized(multiply_adjoint(g2, w2));
  return {std::move(psi), std::move(phi)};
}

std::pair<PureState, PureState> orthogonal_pair(const GeneratorConfig& cfg) {
  if (cfg.n * cfg.m < 2) {
    fail(Errc::dimension_too_small, "orthogonal_pair: needs n*m >= 2");
  }
  auto rng = SplitMix64::stream(cfg.seed, kStreamOrthogonal);
  const PureState psi = haar_state_from(cfg.n, cfg.m, rng);
  for (;;) {
    ComplexMatrix x = ginibre(cfg.n, cfg.m, rng);
    const double xnorm = frobenius_norm(x);
    if (xnorm <= 0.0) continue;
    kernels::scale(1.0 / xnorm, x.data(), x.data(), x.size());
    const double residual = project_out(psi.matrix(), x);
    if (residual < 1e-6) continue;  // near-parallel draw, retry
    return {psi, PureState::normalized(x)};
  }
}

std::pair<std::complex<double>, std::complex<double>> random_amplitudes(
    const GeneratorConfig& cfg) {
  const auto [lo, hi] = cfg.alpha_sq_range;
  if (!(lo >= 0.0) || !(hi <= 1.0) || lo > hi) {
    fail(Errc::empty_range, "random_amplitudes: alpha_sq_range must be within [0, 1]");
  }
  auto rng = SplitMix64::stream(cfg.seed, kStreamAmplitudes);
  const double a_sq = rng.next_uniform(lo, hi);
  const double pa = rng.next_phase();
  const double pb = rng.next_phase();
  const std::complex<double> alpha = std::sqrt(a_sq) * std::polar(1.0, pa);
  const std::complex<double> beta = std::sqrt(1.0 - a_sq) * std::polar(1.0, pb);
  return {alpha, beta};
}

SearchResult lower_bound_search(const GeneratorConfig& cfg, const PureState& psi,
                                std::size_t trials) {
  SearchResult best;
  auto rng = SplitMix64::stream(cfg.seed, kStreamSearch);
  const std::size_t n = psi.n(), m = psi.m();

  for (std::size_t t = 0; t < trials; ++t) {
    ComplexMatrix cand(n, m);
    if (t % 2 == 0) {
      // biased trial: dominant Schmidt coefficient (near-product partner),
      // where lambda_max stays close to 1 after orthogonalization
      ComplexMatrix u = ginibre(n, 1, rng);
      ComplexMatrix v = ginibre(m, 1, rng);
      const double nu = frobenius_norm(u), nv = frobenius_norm(v);
      if (nu <= 0.0 || nv <= 0.0) continue;
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < m; ++j) {
          cand(i, j) = (u(i, 0) / nu) * std::conj(v(j, 0) / nv);
        }
      }
    } else {
      cand = ginibre(n, m, rng);
      const double nrm = frobenius_norm(cand);
      if (nrm <= 0.0) continue;
      kernels::scale(1.0 / nrm, cand.data(), cand.data(), cand.size());
    }
    const double residual = project_out(psi.matrix(), cand);
    if (residual < 1e-6) continue;
    const PureState phi = PureState::normalized(cand);
    ++best.trials_evaluated;

    GeneratorConfig amp_cfg = cfg;
    amp_cfg.seed = derive_seed(cfg.seed, t);
    const auto [alpha, beta] = random_amplitudes(amp_cfg);
    const BoundReport report = theorem2_bounds(SuperpositionInput(alpha, beta, psi, phi));
    if (report.lower_combined > best.bound) {
      best.bound = report.lower_combined;
      best.phi = phi;
    }
  }
  return best;
}

}  // namespace superpose
