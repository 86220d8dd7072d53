#pragma once

#include <cstdint>
#include <limits>
#include <string_view>

namespace senslab {

/// splitmix64 finalizer.
inline constexpr std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

/// Child seed number `stream` of `parent`. Every randomized component derives its
/// stream from one 64-bit master seed with this function, so results do not depend
/// on evaluation order.
inline constexpr std::uint64_t derive_seed(std::uint64_t parent, std::uint64_t stream) {
  return mix64(parent ^ mix64(stream + 0x9e3779b97f4a7c15ULL));
}

/// Named stream: FNV-1a of the component name, then derive_seed.
inline constexpr std::uint64_t derive_seed(std::uint64_t parent, std::string_view component) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (char ch : component) {
    h ^= static_cast<unsigned char>(ch);
    h *= 0x100000001b3ULL;
  }
  return derive_seed(parent, h);
}

/// Small UniformRandomBitGenerator; cheap to construct, which the per-node seed
/// splitting in the randomized evaluators relies on.
class SplitMix64 {
 public:
  using result_type = std::uint64_t;

  explicit SplitMix64(std::uint64_t seed = 0) : state_(seed) {}

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }

  result_type operator()() {
    state_ += 0x9e3779b97f4a7c15ULL;
    return mix64(state_);
  }

 private:
  std::uint64_t state_;
};

/// Uniform in [0, bound), bound > 0 (Lemire's multiply-shift with rejection).
template <class Rng>
std::uint64_t uniform_below(Rng& rng, std::uint64_t bound) {
  using u128 = unsigned __int128;
  u128 m = static_cast<u128>(rng()) * bound;
  auto low = static_cast<std::uint64_t>(m);
  if (low < bound) {
    std::uint64_t threshold = (0 - bound) % bound;
    while (low < threshold) {
      m = static_cast<u128>(rng()) * bound;
      low = static_cast<std::uint64_t>(m);
    }
  }
  return static_cast<std::uint64_t>(m >> 64);
}

/// Uniform double in [0, 1) with 53 random bits.
template <class Rng>
double uniform01(Rng& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace senslab
