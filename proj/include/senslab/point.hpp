#pragma once

#include <algorithm>
#include <bit>
#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "senslab/binomial.hpp"
#include "senslab/errors.hpp"

namespace senslab {

/// A vertex of {0,1}^n. Coordinate x_i (1-based) is bit i-1 of index(), so integer
/// order on indices is colex order on strings.
class Point {
 public:
  Point(unsigned n, std::uint32_t index) : n_(n), index_(index) {
    if (n < 1 || n > kMaxVars) throw ParameterError("Point: n must be in [1, " + std::to_string(kMaxVars) + "]");
    if ((std::uint64_t{index} >> n) != 0) throw ParameterError("Point: index out of range for n=" + std::to_string(n));
  }

  static Point zeros(unsigned n) { return Point(n, 0); }
  static Point ones(unsigned n) { return Point(n, static_cast<std::uint32_t>((std::uint64_t{1} << n) - 1)); }

  /// "x_1 x_2 ... x_n" with x_1 leftmost.
  static Point from_bits(std::string_view bits) {
    if (bits.empty() || bits.size() > kMaxVars) throw FormatError("bitstring length must be in [1, 24]");
    std::uint32_t index = 0;
    for (std::size_t i = 0; i < bits.size(); ++i) {
      if (bits[i] == '1') {
        index |= std::uint32_t{1} << i;
      } else if (bits[i] != '0') {
        throw FormatError("bitstring may contain only '0' and '1': '" + std::string(bits) + "'");
      }
    }
    return Point(static_cast<unsigned>(bits.size()), index);
  }

  unsigned n() const { return n_; }
  std::uint32_t index() const { return index_; }

  bool coord(unsigned i) const { return (index_ >> (i - 1)) & 1u; }
  Point flipped(unsigned i) const { return Point(n_, index_ ^ (std::uint32_t{1} << (i - 1))); }

  std::string to_bits() const {
    std::string s(n_, '0');
    for (unsigned i = 0; i < n_; ++i)
      if ((index_ >> i) & 1u) s[i] = '1';
    return s;
  }

  friend bool operator==(const Point&, const Point&) = default;
  friend auto operator<=>(const Point&, const Point&) = default;

 private:
  unsigned n_;
  std::uint32_t index_;
};

inline unsigned weight(Point x) { return static_cast<unsigned>(std::popcount(x.index())); }

inline unsigned distance(Point x, Point y) {
  require_same_dimension(x.n(), y.n(), "distance");
  return static_cast<unsigned>(std::popcount(x.index() ^ y.index()));
}

/// z(x) = sum_i x_i 2^i = 2 * index: the colex key.
inline std::uint64_t colex_key(Point x) { return std::uint64_t{x.index()} << 1; }

enum class NeighborhoodKind { AllNeighbors, AtWeight, Ball, Sphere, LowerShadow };

struct Neighborhood {
  NeighborhoodKind kind;
  unsigned param = 0;

  static Neighborhood all_neighbors() { return {NeighborhoodKind::AllNeighbors, 1}; }
  /// N_r(x): neighbors of Hamming weight r.
  static Neighborhood at_weight(unsigned r) { return {NeighborhoodKind::AtWeight, r}; }
  static Neighborhood ball(unsigned r) { return {NeighborhoodKind::Ball, r}; }
  static Neighborhood sphere(unsigned r) { return {NeighborhoodKind::Sphere, r}; }
  /// D(x, t): clear exactly t one-coordinates.
  static Neighborhood lower_shadow(unsigned t) { return {NeighborhoodKind::LowerShadow, t}; }
};

/// Exact enumeration, sorted by index.
inline std::vector<Point> neighborhood(Point x, Neighborhood kind) {
  const unsigned n = x.n();
  std::vector<Point> out;
  auto around = [&](unsigned k) {
    for_each_k_subset(n, k, [&](std::uint32_t u) { out.emplace_back(n, x.index() ^ u); });
  };
  switch (kind.kind) {
    case NeighborhoodKind::AllNeighbors:
      around(1);
      break;
    case NeighborhoodKind::AtWeight:
      if (kind.param > n) throw ParameterError("neighborhood: weight exceeds n");
      for (unsigned i = 0; i < n; ++i) {
        Point y(n, x.index() ^ (std::uint32_t{1} << i));
        if (weight(y) == kind.param) out.push_back(y);
      }
      break;
    case NeighborhoodKind::Ball:
      if (kind.param > n) throw ParameterError("neighborhood: ball radius exceeds n");
      for (unsigned k = 0; k <= kind.param; ++k) around(k);
      break;
    case NeighborhoodKind::Sphere:
      if (kind.param > n) throw ParameterError("neighborhood: sphere radius exceeds n");
      around(kind.param);
      break;
    case NeighborhoodKind::LowerShadow: {
      const unsigned w = weight(x);
      if (kind.param > w) throw ParameterError("neighborhood: lower-shadow depth exceeds wt(x)");
      for_each_k_subset(w, kind.param, [&](std::uint32_t packed) {
        out.emplace_back(n, x.index() ^ deposit_bits(packed, x.index()));
      });
      break;
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace senslab
