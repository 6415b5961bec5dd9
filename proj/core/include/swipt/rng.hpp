// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <complex>
#include <cmath>
#include <cstdint>
#include <random>

namespace swipt {

/// Deterministic random stream. Gaussian variates are produced by an
/// explicit Box-Muller transform over mt19937_64 output so that sequences
/// are bit-identical across standard libraries and platforms
/// (std::normal_distribution is implementation-defined).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t raw() { return gen_(); }

  /// Uniform on [0, 1) with 53 bits of mantissa.
  double uniform() {
    return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
  }

  /// Standard normal N(0, 1).
  double gaussian() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    // Box-Muller; u1 shifted away from 0 so log() is finite.
    const double u1 = (static_cast<double>(gen_() >> 11) + 0.5) * 0x1.0p-53;
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double a = 2.0 * M_PI * u2;
    spare_ = r * std::sin(a);
    have_spare_ = true;
    return r * std::cos(a);
  }

  /// Circularly-symmetric complex normal CN(0, 1):
  /// real and imaginary parts are independent N(0, 1/2).
  std::complex<double> cgaussian() {
    const double re = gaussian();
    const double im = gaussian();
    return {M_SQRT1_2 * re, M_SQRT1_2 * im};
  }

  /// Derives the seed of an independent substream. splitmix64-style mixing
  /// so that nearby (seed, stream) pairs land far apart in state space.
  /// Used to parallelize work across drops / Monte-Carlo chunks while
  /// keeping every stream reproducible.
  static std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) {
    std::uint64_t x = seed + 0x9E3779B97F4A7C15ULL * (stream + 1);
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
  }

 private:
  std::mt19937_64 gen_;
  double spare_ = 0.0;
  bool have_spare_ = false;
};

}  // namespace swipt
