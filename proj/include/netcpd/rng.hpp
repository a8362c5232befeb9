#pragma once

#include <cmath>
#include <cstdint>
#include <initializer_list>

// Self-contained deterministic RNG. Everything downstream (generators,
// bootstrap, subsampling) must be bit-identical across runs, platforms and
// thread schedules, so std:: distributions (implementation-defined) are not
// used anywhere. Seeds for independent work items are derived from one master
// seed with tagged mixing instead of a shared sequential stream.

namespace netcpd {

inline constexpr std::uint64_t kGolden = 0x9e3779b97f4a7c15ULL;

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += kGolden;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// Derives an independent seed from a master seed and a list of stream tags
/// (e.g. {kStreamBootstrap, window_length, boundary, replicate}).
inline std::uint64_t derive_seed(std::uint64_t master,
                                 std::initializer_list<std::uint64_t> tags) {
  std::uint64_t s = splitmix64(master);
  for (std::uint64_t t : tags) s = splitmix64(s ^ (t + kGolden));
  return s;
}

// Stream tags; values are arbitrary but frozen (part of the reproducibility
// contract recorded in run manifests).
enum SeedStream : std::uint64_t {
  kStreamSnapshot = 1,
  kStreamRunLength = 2,
  kStreamSize = 3,
  kStreamBootstrap = 4,
  kStreamSubsample = 5,
  kStreamRepeatScenario = 6,
  kStreamRepeatDetector = 7,
};

/// xoshiro256** by Blackman & Vigna (public domain reference constants).
class Xoshiro256 {
 public:
  explicit Xoshiro256(std::uint64_t seed) {
    // Expand the 64-bit seed; all-zero state is unreachable this way.
    std::uint64_t x = seed;
    for (auto& w : s_) {
      x = splitmix64(x);
      w = x;
    }
  }

  std::uint64_t next() {
    const std::uint64_t result = rotl(s_[1] * 5, 7) * 9;
    const std::uint64_t t = s_[1] << 17;
    s_[2] ^= s_[0];
    s_[3] ^= s_[1];
    s_[1] ^= s_[2];
    s_[0] ^= s_[3];
    s_[2] ^= t;
    s_[3] = rotl(s_[3], 45);
    return result;
  }

  /// Uniform integer in [0, bound); bound must be nonzero. Lemire's unbiased
  /// multiply-shift rejection.
  std::uint64_t below(std::uint64_t bound) {
    std::uint64_t x = next();
    __uint128_t m = static_cast<__uint128_t>(x) * bound;
    auto lo = static_cast<std::uint64_t>(m);
    if (lo < bound) {
      const std::uint64_t threshold = -bound % bound;
      while (lo < threshold) {
        x = next();
        m = static_cast<__uint128_t>(x) * bound;
        lo = static_cast<std::uint64_t>(m);
      }
    }
    return static_cast<std::uint64_t>(m >> 64);
  }

  /// Uniform double in [0, 1) with 53-bit resolution.
  double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  bool bernoulli(double p) { return uniform01() < p; }

  /// Box-Muller without spare caching; two uniforms per variate keeps the
  /// draw count independent of call history.
  double normal(double mean, double stddev) {
    double u1 = uniform01();
    while (u1 == 0.0) u1 = uniform01();
    const double u2 = uniform01();
    const double r = std::sqrt(-2.0 * std::log(u1));
    return mean + stddev * r * std::cos(6.283185307179586476925286766559 * u2);
  }

 private:
  static std::uint64_t rotl(std::uint64_t v, int k) {
    return (v << k) | (v >> (64 - k));
  }
  std::uint64_t s_[4];
};

}  // namespace netcpd
