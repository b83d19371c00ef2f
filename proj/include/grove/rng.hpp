// Deterministic RNG streams. Each tree / replication owns one stream derived
// from (master seed, stream index), so results do not depend on scheduling.
//
// The engine is std::mt19937_64 (bit-exact across platforms by the standard).
// All value transforms are implemented here rather than via std:: distributions,
// whose output is implementation-defined; see README for the exact mappings.
#pragma once

#include <cstdint>
#include <random>

namespace grove {

// SplitMix64 finalizer, used for seed derivation.
inline std::uint64_t mix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ull;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

// Child seed for a numbered substream (tree index, replication index, ...).
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) {
  return mix64(seed ^ mix64(stream + 1));
}

class RngStream {
 public:
  RngStream(std::uint64_t seed, std::uint64_t stream)
      : engine_(derive_seed(seed, stream)) {}

  explicit RngStream(std::uint64_t seed) : RngStream(seed, 0) {}

  std::uint64_t next_u64() {
    ++draws_;
    return engine_();
  }

  // Uniform on [0,1), 53-bit resolution.
  double uniform01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  // Uniform on (0,1): rejects the (probability 2^-53) exact zero.
  double uniform_open01() {
    double u;
    do {
      u = uniform01();
    } while (u == 0.0);
    return u;
  }

  // Uniform integer in [0, n), unbiased via rejection.
  int uniform_int(int n) {
    const std::uint64_t un = static_cast<std::uint64_t>(n);
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % un;
    std::uint64_t x;
    do {
      x = next_u64();
    } while (x >= limit);
    return static_cast<int>(x % un);
  }

  // Standard normal via the inverse CDF (Wichura's PPND16 rational
  // approximation, accurate to ~1e-16), one uniform per variate.
  double normal();

  std::uint64_t draw_count() const { return draws_; }

 private:
  std::mt19937_64 engine_;
  std::uint64_t draws_ = 0;
};

// PPND16 on a caller-supplied p in (0,1); exposed for tests.
double inverse_normal_cdf(double p);

}  // namespace grove
