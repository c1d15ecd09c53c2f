#pragma once

#include <cstdint>

namespace brush {

/// splitmix64. One shared stream feeds Math.random and randomColor.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed = 0) : state_(seed), seed_(seed) {}

  std::uint64_t next() {
    ++draws_;
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  /// Uniform in [0, 1) from the top 53 bits.
  double next_unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  std::uint64_t state() const { return state_; }
  std::uint64_t seed() const { return seed_; }
  /// Number of times the stream has advanced.
  std::uint64_t draws() const { return draws_; }

 private:
  std::uint64_t state_;
  std::uint64_t seed_;
  std::uint64_t draws_ = 0;
};

}  // namespace brush
