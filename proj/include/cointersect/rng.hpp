#pragma once

#include <cstdint>

namespace coint {

/// splitmix64: state += 0x9E3779B97F4A7C15, then two xor-shift-multiply rounds
/// (0xBF58476D1CE4E5B9, 0x94D049BB133111EB) and a final xor-shift by 31.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next();

 private:
  std::uint64_t state_;
};

/// xoshiro256** seeded with four splitmix64 outputs.
class Rng {
 public:
  explicit Rng(std::uint64_t seed);

  std::uint64_t next();
  /// Uniform in [0, bound), bound >= 1, by rejection of the biased low range.
  std::uint64_t uniform(std::uint64_t bound);
  /// Uniform in [0, 1) with 53 random bits.
  double uniform_double();
  /// Uniform nonempty subset of {0..bits-1} as a mask, 1 <= bits <= 64.
  std::uint64_t nonempty_mask(int bits);

 private:
  std::uint64_t s_[4];
};

}  // namespace coint
