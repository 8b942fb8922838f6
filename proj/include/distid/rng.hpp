#pragma once

#include <cstdint>

namespace distid {

/// Root seed of an experiment. Child seeds are derived, never drawn.
struct Seed {
  std::uint64_t value = 0x5EED;

  friend constexpr bool operator==(Seed, Seed) = default;
};

inline constexpr Seed kDefaultSeed{0x5EED};

namespace rng {

inline constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;

// SplitMix64 finalizer.
constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

}  // namespace rng

/// Child seed for stream `index` of `parent`; independent of evaluation order.
constexpr Seed derive_seed(Seed parent, std::uint64_t index) noexcept {
  return Seed{rng::mix64(rng::mix64(parent.value) ^ rng::mix64(index + rng::kGolden))};
}

/// Counter-based stream: draw k is mix64(key + (k+1)*golden). Jumping to any
/// draw is O(1), so streams for separate trials never share state.
class CounterStream {
 public:
  constexpr explicit CounterStream(Seed seed) noexcept : key_(rng::mix64(seed.value)) {}

  constexpr std::uint64_t next_u64() noexcept {
    ++counter_;
    return rng::mix64(key_ + counter_ * rng::kGolden);
  }

  /// Uniform double in [0, 1) with 53 random bits.
  constexpr double next_unit() noexcept {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  /// Uniform integer in [0, bound); bound > 0. Uses the multiply-high reduction.
  std::uint64_t next_below(std::uint64_t bound) noexcept {
    __extension__ using Wide = unsigned __int128;
    return static_cast<std::uint64_t>((static_cast<Wide>(next_u64()) * bound) >> 64);
  }

 private:
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

}  // namespace distid
