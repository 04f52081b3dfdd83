#pragma once

#include <cstdint>

namespace diffmom {

/// SplitMix64: the 64-bit mixing step of Steele, Lea and Flood's splittable
/// generator. Pure integer arithmetic, so streams are bit-identical across
/// platforms. Good enough statistically for Bernoulli draws at this scale and
/// trivial to fork into independent, documented sub-streams.
inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    state_ += 0x9E3779B97F4A7C15ULL;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  /// Uniform double in [0, 1) with 53 random bits.
  double next_double() { return (next() >> 11) * 0x1.0p-53; }

  bool bernoulli(double prob) { return next_double() < prob; }

  /// Uniform integer in [0, n).
  std::uint64_t next_below(std::uint64_t n) {
    // Rejection-free modulo is biased for huge n; all uses here have n far
    // below 2^32 where the bias is < 2^-32 of a draw, but keep it exact.
    std::uint64_t threshold = (0ULL - n) % n;
    for (;;) {
      std::uint64_t r = next();
      if (r >= threshold) return r % n;
    }
  }

 private:
  std::uint64_t state_;
};

/// Deterministic sub-stream seed for (root seed, index). Used to derive
/// per-village streams from a common seed and per-village IP-draw streams
/// from the IP seed.
inline std::uint64_t derive_stream(std::uint64_t root, std::uint64_t index) {
  return splitmix64(splitmix64(root) ^ (index + 0x9E3779B97F4A7C15ULL));
}

}  // namespace diffmom
