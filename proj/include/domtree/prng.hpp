#pragma once

#include <cstdint>

namespace domtree {

/// SplitMix64 (Steele/Vigna), the public-domain 64-bit generator with
/// the canonical constants. The generator is part of the instance
/// corpus contract: identical seeds must reproduce identical instances
/// across platforms and reimplementations, so nothing here may change.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  /// next() % bound; the modulo construction (bias and all) is part of
  /// the documented generation procedure.
  std::uint64_t below(std::uint64_t bound) { return next() % bound; }

 private:
  std::uint64_t state_;
};

}  // namespace domtree
