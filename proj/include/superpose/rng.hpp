#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>

namespace superpose {

// SplitMix64 (Steele/Lea/Flood; the java.util.SplittableRandom core). The
// state walks a 2^64 counter sequence with the golden-ratio increment and the
// output is a bijective finalizer of the state, so independent streams are
// obtained by placing their initial states at hash-separated phases:
// stream(seed, i) starts at mix(mix(seed) ^ mix(i + GAMMA)). Every generator
// in the library derives its values from one such stream, which makes a whole
// campaign replayable from (seed, trial_index) regardless of thread count.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t state) : state_(state) {}

  static std::uint64_t mix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  static SplitMix64 stream(std::uint64_t seed, std::uint64_t stream_id) {
    return SplitMix64(mix(mix(seed) ^ mix(stream_id + kGamma)));
  }

  std::uint64_t next_u64() {
    state_ += kGamma;
    return mix(state_);
  }

  // uniform in [0, 1), 53-bit resolution
  double next_unit() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  double next_uniform(double lo, double hi) { return lo + (hi - lo) * next_unit(); }

  double next_phase() { return 2.0 * std::numbers::pi * next_unit(); }

  // standard complex Gaussian (independent N(0,1) real and imaginary parts)
  // via the Box-Muller transform; consumes exactly two uniforms
  std::complex<double> next_complex_normal() {
    const double u1 = next_unit();
    const double u2 = next_unit();
    const double r = std::sqrt(-2.0 * std::log1p(-u1));
    const double t = 2.0 * std::numbers::pi * u2;
    return {r * std::cos(t), r * std::sin(t)};
  }

  double next_normal() {
    const auto z = next_complex_normal();
    return z.real();
  }

 private:
  static constexpr std::uint64_t kGamma = 0x9e3779b97f4a7c15ull;
  std::uint64_t state_;
};

/// 64-bit sub-seed for (seed, index); used to hand independent generator
/// configurations to campaign trials.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
  return SplitMix64::mix(SplitMix64::mix(seed) ^ SplitMix64::mix(index * 2 + 1));
}

}  // namespace superpose
