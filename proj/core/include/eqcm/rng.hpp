#pragma once

#include <cstdint>
#include <random>

namespace eqcm {

/// Seedable random source with pinned sampling algorithms.
///
/// The engine is std::mt19937_64, whose output sequence is fixed by the
/// standard, and all derived draws (bounded integers, uniform reals,
/// gaussians) are implemented here instead of relying on the standard
/// distributions, whose algorithms vary between library implementations.
/// Integer draws are therefore bit-identical across platforms; dataset
/// splits and random strings depend only on the seed.
class RandomSource {
 public:
  explicit RandomSource(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  /// Unbiased draw from {0, ..., n-1} by rejection.
  std::uint64_t uniform_below(std::uint64_t n);

  /// Uniform double in [0, 1) with 53 random bits.
  double uniform01();

  /// Standard normal via Box-Muller; pairs are cached.
  double gaussian();

 private:
  std::mt19937_64 engine_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

}  // namespace eqcm
