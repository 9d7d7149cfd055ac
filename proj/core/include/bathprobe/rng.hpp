#pragma once

#include <cstdint>

namespace bathprobe {

/// Counter-based uniform generator keyed by (seed, repetition, shot).
///
/// Every draw is a pure function of its three keys, so Monte Carlo results do
/// not depend on thread count or evaluation order. Bit-exact definition (all
/// arithmetic modulo 2^64):
///
///   mix(z):  z += 0x9E3779B97F4A7C15
///            z  = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
///            z  = (z ^ (z >> 27)) * 0x94D049BB133111EB
///            return z ^ (z >> 31)
///   word(seed, rep, shot) = mix(mix(mix(seed) ^ rep) ^ shot)
///   uniform(seed, rep, shot) = (word >> 11) * 2^-53        in [0, 1)
///
/// mix() is the SplitMix64 output function. See docs/rng.md for test vectors.
class KeyedUniform {
 public:
  explicit constexpr KeyedUniform(std::uint64_t seed) noexcept : seed_(seed) {}

  static constexpr std::uint64_t mix(std::uint64_t z) noexcept {
    z += 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  /// Independent stream derived from a parent seed: mix(seed ^ mix(stream)).
  static constexpr std::uint64_t substream(std::uint64_t seed, std::uint64_t stream) noexcept {
    return mix(seed ^ mix(stream));
  }

  constexpr std::uint64_t word(std::uint64_t repetition, std::uint64_t shot) const noexcept {
    return mix(mix(mix(seed_) ^ repetition) ^ shot);
  }

  constexpr double uniform(std::uint64_t repetition, std::uint64_t shot) const noexcept {
    return static_cast<double>(word(repetition, shot) >> 11) * 0x1.0p-53;
  }

  constexpr std::uint64_t seed() const noexcept { return seed_; }

 private:
  std::uint64_t seed_;
};

}  // namespace bathprobe
