#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace konig {

/// Seeded generator shared by the random instance generators and the
/// sampled explorer.
///
/// std::mt19937_64 has a fully specified output sequence; the bounded draws
/// below avoid the standard distributions, whose algorithms are left to the
/// library vendor, so a seed reproduces the same stream on every platform.
/// Bump kAlgorithm whenever the derivation of any draw changes.
class Rng {
 public:
  static constexpr std::string_view kAlgorithm = "mt19937_64-v1";

  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  /// Uniform in [0, bound); bound must be positive.
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t threshold = (0 - bound) % bound;
    for (;;) {
      const std::uint64_t r = engine_();
      if (r >= threshold) return r % bound;
    }
  }

  /// Uniform in [0, 1) with 53 random bits.
  double unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace konig
