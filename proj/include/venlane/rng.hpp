#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>

namespace venlane {

// Named sub-streams. Every consumer of randomness derives its own stream from
// (seed, tag, index) so that changing one consumer never shifts another.
enum class StreamTag : std::uint64_t {
  train_data = 1,
  val_data = 2,
  test_data = 3,
  init_masks = 10,
  init_weights = 11,
  shuffle = 20,
  property_test = 99,
};

constexpr std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9E3779B97F4A7C15ull);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

/// xoshiro256** seeded through splitmix64. Uniform draws are built from the
/// raw bits, never through <random> distributions, so sequences are identical
/// across standard library implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) {
    std::uint64_t sm = seed;
    for (auto& word : s_) word = splitmix64(sm);
  }

  Rng(std::uint64_t seed, StreamTag tag, std::uint64_t index = 0)
      : Rng(derive(seed, static_cast<std::uint64_t>(tag), index)) {}

  static constexpr std::uint64_t derive(std::uint64_t seed, std::uint64_t tag,
                                        std::uint64_t index) {
    std::uint64_t h = seed;
    std::uint64_t a = splitmix64(h) ^ (tag * 0xD1B54A32D192ED03ull);
    std::uint64_t b = splitmix64(a) ^ (index * 0x8CB92BA72F3D8DD7ull);
    return splitmix64(b);
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

  /// Uniform double in [0, 1).
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  /// Unbiased integer in [0, n).
  std::uint64_t below(std::uint64_t n) {
    const std::uint64_t limit = -n % n;
    for (;;) {
      const std::uint64_t x = next();
      const unsigned __int128 m = static_cast<unsigned __int128>(x) * n;
      if (static_cast<std::uint64_t>(m) >= limit) return static_cast<std::uint64_t>(m >> 64);
    }
  }

  /// Standard normal via Box-Muller (one value per call, no cached pair).
  double normal() {
    double u1 = uniform();
    while (u1 <= 0.0) u1 = uniform();
    const double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
  }

 private:
  static constexpr std::uint64_t rotl(std::uint64_t x, int k) {
    return (x << k) | (x >> (64 - k));
  }

  std::uint64_t s_[4];
};

}  // namespace venlane
