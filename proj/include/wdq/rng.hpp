#pragma once

#include <cstdint>

namespace wdq {

/// SplitMix64 (Steele, Lea & Flood 2014). Chosen because the whole state
/// transition is fixed by these constants, so a seed reproduces the same
/// stream on every platform and standard library.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform draw from [0, bound); unbiased via rejection. bound > 0.
  std::uint64_t next_below(std::uint64_t bound) {
    std::uint64_t threshold = -bound % bound;  // 2^64 mod bound
    for (;;) {
      std::uint64_t v = next();
      if (v >= threshold) return v % bound;
    }
  }

  /// Uniform double in [0, 1), 53 bits of precision.
  double next_unit() { return (next() >> 11) * 0x1.0p-53; }

 private:
  std::uint64_t state_;
};

/// Deterministic sub-seed for item (a, b) of a batch keyed by `base`.
inline std::uint64_t derive_seed(std::uint64_t base, std::uint64_t a,
                                 std::uint64_t b) {
  auto mix = [](std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  };
  return mix(mix(mix(base) ^ (a + 1)) ^ (b + 1));
}

}  // namespace wdq
