#pragma once

#include <cstdint>

namespace pairspan {

/// SplitMix64 (Steele, Lea, Vigna). Fixed here, rather than std::mt19937,
/// so that instances are bit-reproducible from a seed across platforms and
/// language ports.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  /// Uniform in [0,1) with 53 random bits.
  double next_unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  /// Uniform in [0, bound). Plain modulo: the tiny bias is irrelevant for
  /// test instances and keeps the sequence trivially portable.
  std::uint64_t next_below(std::uint64_t bound) { return next() % bound; }

 private:
  std::uint64_t state_;
};

}  // namespace pairspan
