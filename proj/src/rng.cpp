#include "cointersect/rng.hpp"

#include <bit>

#include "cointersect/error.hpp"

namespace coint {

std::uint64_t SplitMix64::next() {
  state_ += 0x9E3779B97F4A7C15ULL;
  std::uint64_t z = state_;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

Rng::Rng(std::uint64_t seed) {
  SplitMix64 sm(seed);
  for (auto& s : s_) s = sm.next();
}

std::uint64_t Rng::next() {
  const std::uint64_t result = std::rotl(s_[1] * 5, 7) * 9;
  const std::uint64_t t = s_[1] << 17;
  s_[2] ^= s_[0];
  s_[3] ^= s_[1];
  s_[1] ^= s_[2];
  s_[0] ^= s_[3];
  s_[2] ^= t;
  s_[3] = std::rotl(s_[3], 45);
  return result;
}

std::uint64_t Rng::uniform(std::uint64_t bound) {
  if (bound == 0) throw DomainError("uniform: empty range");
  // Values below 2^64 mod bound would make the low residues more likely.
  const std::uint64_t threshold = (0 - bound) % bound;
  for (;;) {
    const std::uint64_t r = next();
    if (r >= threshold) return r % bound;
  }
}

double Rng::uniform_double() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

std::uint64_t Rng::nonempty_mask(int bits) {
  if (bits < 1 || bits > 64) throw DomainError("nonempty_mask: alphabet size must be in 1..64");
  if (bits == 64) {
    for (;;) {
      const std::uint64_t r = next();
      if (r != 0) return r;
    }
  }
  return 1 + uniform((std::uint64_t{1} << bits) - 1);
}

}  // namespace coint
