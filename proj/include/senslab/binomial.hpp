#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <vector>

#include "senslab/errors.hpp"

namespace senslab {

inline constexpr unsigned kMaxVars = 24;

namespace detail {

struct BinomialTable {
  std::array<std::array<std::uint64_t, 65>, 65> c{};
  constexpr BinomialTable() {
    for (unsigned n = 0; n <= 64; ++n) {
      c[n][0] = 1;
      for (unsigned k = 1; k <= n; ++k) c[n][k] = c[n - 1][k - 1] + (k <= n - 1 ? c[n - 1][k] : 0);
    }
  }
};

inline constexpr BinomialTable kBinomials{};

}  // namespace detail

/// C(n, k); zero when k > n. Exact for n <= 64 (values that overflow are never requested
/// by the library, which caps n at kMaxVars).
inline constexpr std::uint64_t binomial(unsigned n, unsigned k) {
  if (k > n || n > 64) return 0;
  return detail::kBinomials.c[n][k];
}

/// |B(x, r)| = sum_{i <= r} C(n, i).
inline constexpr std::uint64_t ball_volume(unsigned n, unsigned r) {
  std::uint64_t total = 0;
  for (unsigned i = 0; i <= r && i <= n; ++i) total += binomial(n, i);
  return total;
}

/// Next integer with the same popcount (Gosper). Enumerates k-subsets in colex order.
inline constexpr std::uint64_t next_same_popcount(std::uint64_t v) {
  std::uint64_t t = v | (v - 1);
  return (t + 1) | (((~t & -~t) - 1) >> (std::countr_zero(v) + 1));
}

/// Calls fn(mask) for every k-subset of the low n bits, in increasing integer order.
template <class Fn>
void for_each_k_subset(unsigned n, unsigned k, Fn&& fn) {
  if (k > n) return;
  if (k == 0) {
    fn(std::uint32_t{0});
    return;
  }
  const std::uint64_t limit = std::uint64_t{1} << n;
  for (std::uint64_t v = (std::uint64_t{1} << k) - 1; v < limit; v = next_same_popcount(v)) {
    fn(static_cast<std::uint32_t>(v));
  }
}

/// Scatters the low bits of `packed` onto the set positions of `mask` (software pdep).
inline std::uint32_t deposit_bits(std::uint32_t packed, std::uint32_t mask) {
  std::uint32_t out = 0;
  for (std::uint32_t bit = 1; mask != 0; bit <<= 1) {
    std::uint32_t lowest = mask & (0u - mask);
    if (packed & bit) out |= lowest;
    mask ^= lowest;
  }
  return out;
}

/// Dense ranking of the offsets u in {0,1}^n with popcount(u) <= r: level by level,
/// colex rank within a level (combinatorial number system). rank() is O(r).
class BallIndexer {
 public:
  BallIndexer(unsigned n, unsigned radius) : n_(n), radius_(radius < n ? radius : n) {
    if (n > kMaxVars) throw ParameterError("BallIndexer: n exceeds " + std::to_string(kMaxVars));
    level_offset_.assign(radius_ + 2, 0);
    for (unsigned k = 0; k <= radius_; ++k) level_offset_[k + 1] = level_offset_[k] + binomial(n_, k);
  }

  unsigned n() const { return n_; }
  unsigned radius() const { return radius_; }
  std::uint64_t size() const { return level_offset_.back(); }
  std::uint64_t level_offset(unsigned k) const { return level_offset_[k]; }

  bool contains(std::uint32_t offset) const {
    return static_cast<unsigned>(std::popcount(offset)) <= radius_ && (n_ == 32 || (offset >> n_) == 0);
  }

  std::uint64_t rank(std::uint32_t offset) const {
    std::uint64_t r = 0;
    unsigned i = 1;
    for (std::uint32_t m = offset; m != 0; m &= m - 1, ++i) {
      r += binomial(static_cast<unsigned>(std::countr_zero(m)), i);
    }
    return level_offset_[i - 1] + r;
  }

  /// Visits offsets in rank order.
  template <class Fn>
  void for_each(Fn&& fn) const {
    for (unsigned k = 0; k <= radius_; ++k) for_each_k_subset(n_, k, fn);
  }

 private:
  unsigned n_;
  unsigned radius_;
  std::vector<std::uint64_t> level_offset_;
};

}  // namespace senslab
