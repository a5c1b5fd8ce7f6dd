#pragma once

#include <cstdint>
#include <limits>

#include "ubseq/int128.hpp"

namespace ubseq {

/// SplitMix64 generator. Every random choice in the library is derived from
/// one of these, seeded from the user's 64-bit seed.
class SplitMix64 {
 public:
  using result_type = std::uint64_t;

  explicit constexpr SplitMix64(std::uint64_t seed = 0) : state_(seed) {}

  /// Independent stream for item `index` of an experiment seeded with `seed`.
  static constexpr SplitMix64 for_index(std::uint64_t seed, std::uint64_t index) {
    SplitMix64 mixer(seed ^ (index * 0xD1B54A32D192ED03ull));
    return SplitMix64(mixer());
  }

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }

  constexpr result_type operator()() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  /// Uniform in [0, 1) with 53 random bits.
  double uniform01() { return static_cast<double>((*this)() >> 11) * 0x1p-53; }

  /// Uniform integer in [0, bound); bound > 0. Uses Lemire's multiply-shift.
  std::uint64_t below(std::uint64_t bound) {
    const u128 m = static_cast<u128>((*this)()) * bound;
    return hi64(m);
  }

  u128 next128() {
    const std::uint64_t hi = (*this)();
    return make_u128(hi, (*this)());
  }

 private:
  std::uint64_t state_;
};

}  // namespace ubseq
