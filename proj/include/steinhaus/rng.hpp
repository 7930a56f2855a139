#pragma once

#include <cstdint>

namespace steinhaus {

/// Seed for every pseudo-random component. Any 64-bit value is valid.
struct Seed {
  std::uint64_t value = 0;
  bool operator==(const Seed&) const = default;
};

/// SplitMix64, the fixed deterministic generator behind all sampling.
///
/// Output i (for i = 1, 2, ...) is mix64(seed + i * 0x9E3779B97F4A7C15), a
/// pure function of (seed, i) built from 64-bit shifts and multiplies, so
/// streams are identical across platforms and runs. Sampled digit streams and
/// campaign results are reproducible bit-for-bit; changing this algorithm is
/// a breaking change to every recorded result.
class SplitMix64 {
public:
  static constexpr std::uint64_t kGamma = 0x9E3779B97F4A7C15ULL;

  explicit SplitMix64(Seed seed) : state_(seed.value) {}

  static std::uint64_t mix64(std::uint64_t z) {
    z ^= z >> 30;
    z *= 0xBF58476D1CE4E5B9ULL;
    z ^= z >> 27;
    z *= 0x94D049BB133111EBULL;
    z ^= z >> 31;
    return z;
  }

  std::uint64_t next() {
    state_ += kGamma;
    return mix64(state_);
  }

private:
  std::uint64_t state_;
};

/// Uniform draw from {0, ..., bound-1} by rejection; exact (no modulo bias).
/// bound = 0 is invalid.
std::uint64_t uniform_below(SplitMix64& gen, std::uint64_t bound);

}  // namespace steinhaus
