#pragma once

#include <cstdint>

namespace citecurve {

/// SplitMix64 finalizer; a bijective 64-bit avalanche mix.
constexpr std::uint64_t mix64(std::uint64_t x) noexcept {
  x ^= x >> 30;
  x *= 0xbf58476d1ce4e5b9ULL;
  x ^= x >> 27;
  x *= 0x94d049bb133111ebULL;
  x ^= x >> 31;
  return x;
}

/// Key of the independent stream for one dataset of a seeded run.
constexpr std::uint64_t derive_stream_key(std::uint64_t seed, std::uint64_t index) noexcept {
  return mix64(mix64(seed) + 0x9e3779b97f4a7c15ULL * (index + 1));
}

/// Counter-based uniform stream: the i-th draw depends only on (key, i), so
/// draws can be produced in any order or on any thread.
class CounterStream {
 public:
  constexpr explicit CounterStream(std::uint64_t key) noexcept : key_(key) {}

  [[nodiscard]] constexpr std::uint64_t bits(std::uint64_t counter) const noexcept {
    return mix64(key_ + 0x9e3779b97f4a7c15ULL * (counter + 1));
  }

  /// Uniform on the open interval (0, 1), 53-bit resolution.
  [[nodiscard]] constexpr double uniform(std::uint64_t counter) const noexcept {
    return (static_cast<double>(bits(counter) >> 11) + 0.5) * 0x1.0p-53;
  }

  [[nodiscard]] constexpr std::uint64_t key() const noexcept { return key_; }

 private:
  std::uint64_t key_;
};

}  // namespace citecurve
