#pragma once

#include <cstdint>

namespace betashift {

// Counter-based splittable generator in the SplitMix64 family
// (Steele/Lea/Flood construction: a strong 64-bit mixer applied to a
// Weyl sequence).  A stream is keyed by (seed, stream_id); draws are a
// pure function of (key, counter), so identical keys reproduce identical
// streams regardless of thread schedule, and distinct stream ids are
// statistically independent.
struct StreamRng {
  static constexpr std::uint64_t kGamma = 0x9E3779B97F4A7C15ull;

  std::uint64_t base;
  std::uint64_t ctr = 0;

  static std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  StreamRng(std::uint64_t seed, std::uint64_t stream_id)
      : base(mix64(seed + kGamma) ^ mix64(stream_id * kGamma + 0x6A09E667F3BCC909ull)) {}

  std::uint64_t next_u64() { return mix64(base + (ctr++) * kGamma); }

  // Uniform in [0,1) with 53 random bits.
  double next_unit() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  bool bernoulli(double p) { return next_unit() < p; }
};

}  // namespace betashift
