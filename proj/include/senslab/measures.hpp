#pragma once

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <vector>

#include "senslab/errors.hpp"
#include "senslab/point.hpp"
#include "senslab/rational.hpp"
#include "senslab/truth_table.hpp"

namespace senslab {

namespace detail {

// Bits of a 64-bit word whose variable i (i < 6) is 0.
inline constexpr std::array<std::uint64_t, 6> kLowVarMask = {
    0x5555555555555555ULL, 0x3333333333333333ULL, 0x0F0F0F0F0F0F0F0FULL,
    0x00FF00FF00FF00FFULL, 0x0000FFFF0000FFFFULL, 0x00000000FFFFFFFFULL};

/// Word j of f XOR (f composed with flipping variable i), i zero-based.
inline std::uint64_t flip_diff_word(std::span<const std::uint64_t> words, std::size_t j, unsigned i) {
  const std::uint64_t w = words[j];
  if (i < 6) {
    const unsigned sh = 1u << i;
    const std::uint64_t m = kLowVarMask[i];
    return w ^ (((w & m) << sh) | ((w >> sh) & m));
  }
  return w ^ words[j ^ (std::size_t{1} << (i - 6))];
}

/// Bit-sliced per-point counters, 5 planes (n <= 24 < 32).
using Planes = std::array<std::uint64_t, 5>;

inline void add_bit(Planes& p, std::uint64_t d) {
  for (auto& plane : p) {
    if (d == 0) return;
    const std::uint64_t carry = plane & d;
    plane ^= d;
    d = carry;
  }
}

/// Max counter value among positions in mask (0 if mask is empty).
inline unsigned masked_max(const Planes& p, std::uint64_t mask) {
  unsigned value = 0;
  for (int b = 4; b >= 0; --b) {
    if (mask & p[b]) {
      value |= 1u << b;
      mask &= p[b];
    }
  }
  return value;
}

}  // namespace detail

/// s(f, x): number of neighbors y of x with f(y) != f(x).
inline unsigned sensitivity_at(const TruthTable& f, Point x) {
  require_same_dimension(f.n(), x.n(), "sensitivity_at");
  const bool v = f[x.index()];
  unsigned count = 0;
  for (unsigned i = 0; i < f.n(); ++i) count += f[x.index() ^ (std::uint32_t{1} << i)] != v;
  return count;
}

/// s(f, x) for every x, indexed by point index.
inline std::vector<std::uint8_t> pointwise_sensitivity(const TruthTable& f) {
  std::vector<std::uint8_t> out(f.size(), 0);
  const auto words = f.words();
  for (unsigned i = 0; i < f.n(); ++i) {
    for (std::size_t j = 0; j < words.size(); ++j) {
      for (std::uint64_t d = detail::flip_diff_word(words, j, i) & f.tail_mask(); d != 0; d &= d - 1) {
        ++out[j * 64 + std::countr_zero(d)];
      }
    }
  }
  return out;
}

struct SensitivityProfile {
  unsigned s = 0;
  unsigned s0 = 0;  ///< max over f^{-1}(0); 0 if empty
  unsigned s1 = 0;  ///< max over f^{-1}(1); 0 if empty
  friend bool operator==(const SensitivityProfile&, const SensitivityProfile&) = default;
};

inline SensitivityProfile sensitivity(const TruthTable& f) {
  const auto words = f.words();
  SensitivityProfile out;
  for (std::size_t j = 0; j < words.size(); ++j) {
    detail::Planes planes{};
    for (unsigned i = 0; i < f.n(); ++i) detail::add_bit(planes, detail::flip_diff_word(words, j, i));
    const std::uint64_t valid = (j + 1 == words.size()) ? f.tail_mask() : ~std::uint64_t{0};
    out.s1 = std::max(out.s1, detail::masked_max(planes, words[j] & valid));
    out.s0 = std::max(out.s0, detail::masked_max(planes, ~words[j] & valid));
  }
  out.s = std::max(out.s0, out.s1);
  return out;
}

/// Coefficients c_S (indexed by the mask of S) of the unique real multilinear polynomial
/// agreeing with f: c_S = sum_{T subset S} (-1)^{|S|-|T|} f(1(T)).
inline IntegerFunction mobius_coefficients(const TruthTable& f) {
  IntegerFunction c = IntegerFunction::from_table(f);
  for (unsigned i = 0; i < f.n(); ++i) {
    const std::uint32_t bit = std::uint32_t{1} << i;
    for (std::uint64_t x = 0; x < c.size(); ++x)
      if (x & bit) c.values[x] -= c.values[x ^ bit];
  }
  return c;
}

/// Inverse of mobius_coefficients: value(x) = sum_{S subset supp(x)} c_S.
inline IntegerFunction evaluate_multilinear(const IntegerFunction& coefficients) {
  IntegerFunction v = coefficients;
  for (unsigned i = 0; i < v.n; ++i) {
    const std::uint32_t bit = std::uint32_t{1} << i;
    for (std::uint64_t x = 0; x < v.size(); ++x)
      if (x & bit) v.values[x] += v.values[x ^ bit];
  }
  return v;
}

/// Mod-2 Mobius transform (its own inverse): the F2 coefficients of f as a table over sets.
inline TruthTable mobius_f2(const TruthTable& f) {
  TruthTable c = f;
  auto words = c.mutable_words();
  for (unsigned i = 0; i < f.n(); ++i) {
    if (i < 6) {
      const unsigned sh = 1u << i;
      for (auto& w : words) w ^= (w & detail::kLowVarMask[i]) << sh;
    } else {
      const std::size_t stride = std::size_t{1} << (i - 6);
      for (std::size_t j = 0; j < words.size(); ++j)
        if (j & stride) words[j] ^= words[j ^ stride];
    }
  }
  return c;
}

/// Largest |S| with a nonzero coefficient; 0 for constants.
inline unsigned degree(const TruthTable& f) {
  const auto c = mobius_coefficients(f);
  unsigned d = 0;
  for (std::uint64_t S = 0; S < c.size(); ++S)
    if (c.values[S] != 0) d = std::max(d, static_cast<unsigned>(std::popcount(S)));
  return d;
}

inline unsigned degree_f2(const TruthTable& f) {
  unsigned d = 0;
  for (auto S : mobius_f2(f).ones()) d = std::max(d, static_cast<unsigned>(std::popcount(S)));
  return d;
}

struct Bias {
  Rational mu0;
  Rational mu1;
};

inline Bias bias(const TruthTable& f) {
  const auto ones = f.count_ones();
  return {dyadic(f.size() - ones, f.n()), dyadic(ones, f.n())};
}

/// A nonempty set is a subcube iff it equals the set of points agreeing with one member
/// on every coordinate where the whole set is constant.
inline bool is_subcube(const TruthTable& members) {
  const auto pts = members.ones();
  if (pts.empty()) return false;
  std::uint32_t all_and = ~std::uint32_t{0};
  std::uint32_t all_or = 0;
  for (auto p : pts) {
    all_and &= p;
    all_or |= p;
  }
  const unsigned free_coords = static_cast<unsigned>(std::popcount(all_and ^ all_or));
  return pts.size() == (std::uint64_t{1} << free_coords);
}

struct BiasBoundReport {
  bool holds_0 = true;  ///< s0 >= log2(1/mu0), vacuous when mu0 = 0
  bool holds_1 = true;
  bool tight_0 = false;  ///< equality
  bool tight_1 = false;
  bool subcube_0 = false;  ///< f^{-1}(0) is a subcube
  bool subcube_1 = false;
};

/// s_b >= log2(1/mu_b) is checked exactly as 2^{s_b} * |f^{-1}(b)| >= 2^n.
inline BiasBoundReport check_bias_bound(const TruthTable& f) {
  const auto sens = sensitivity(f);
  const std::uint64_t ones = f.count_ones();
  const std::uint64_t zeros = f.size() - ones;
  BiasBoundReport r;
  auto check = [&](unsigned sb, std::uint64_t count, bool& holds, bool& tight) {
    if (count == 0) return;
    const unsigned __int128 lhs = static_cast<unsigned __int128>(count) << sb;
    holds = lhs >= f.size();
    tight = lhs == f.size();
  };
  check(sens.s0, zeros, r.holds_0, r.tight_0);
  check(sens.s1, ones, r.holds_1, r.tight_1);
  r.subcube_1 = is_subcube(f);
  r.subcube_0 = is_subcube(~f);
  return r;
}

/// 1-based indices i such that f(x) != f(x XOR e_i) for some x.
inline std::vector<unsigned> relevant_variables(const TruthTable& f) {
  std::vector<unsigned> out;
  const auto words = f.words();
  for (unsigned i = 0; i < f.n(); ++i) {
    for (std::size_t j = 0; j < words.size(); ++j) {
      if (detail::flip_diff_word(words, j, i) & f.tail_mask()) {
        out.push_back(i + 1);
        break;
      }
    }
  }
  return out;
}

/// delta(f, g) = Pr_x[f(x) != g(x)].
inline Rational distance_fraction(const TruthTable& f, const TruthTable& g) {
  require_same_dimension(f.n(), g.n(), "distance_fraction");
  return dyadic((f ^ g).count_ones(), f.n());
}

struct ComplexityProfile {
  unsigned s = 0;
  unsigned s0 = 0;
  unsigned s1 = 0;
  unsigned deg = 0;
  unsigned deg2 = 0;
  Rational mu0;
  Rational mu1;
  std::vector<unsigned> relevant;
};

inline ComplexityProfile complexity_profile(const TruthTable& f) {
  const auto sens = sensitivity(f);
  const auto b = bias(f);
  return {sens.s, sens.s0, sens.s1, degree(f), degree_f2(f), b.mu0, b.mu1, relevant_variables(f)};
}

}  // namespace senslab
