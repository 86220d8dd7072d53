#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "senslab/binomial.hpp"
#include "senslab/errors.hpp"
#include "senslab/point.hpp"
#include "senslab/truth_table.hpp"

namespace senslab {

/// Partial function on B(center, radius): one value for each point within distance
/// radius of the center, and nothing else. Values are stored by offset rank
/// (offset = point XOR center), so lookups cost O(radius).
class BallAdvice {
 public:
  /// Entries must cover the ball exactly (any order, no duplicates).
  BallAdvice(Point center, unsigned radius, const std::vector<std::pair<std::uint32_t, bool>>& entries)
      : center_(center), indexer_(center.n(), check_radius(center.n(), radius)) {
    if (entries.size() != indexer_.size()) {
      throw ParameterError("BallAdvice: expected " + std::to_string(indexer_.size()) + " entries, got " +
                           std::to_string(entries.size()));
    }
    values_.assign(indexer_.size(), kUnset);
    for (const auto& [index, bit] : entries) {
      if ((std::uint64_t{index} >> center_.n()) != 0) throw ParameterError("BallAdvice: point out of range");
      const std::uint32_t offset = index ^ center_.index();
      if (!indexer_.contains(offset)) {
        throw ParameterError("BallAdvice: point " + Point(center_.n(), index).to_bits() + " lies outside the ball");
      }
      auto& slot = values_[indexer_.rank(offset)];
      if (slot != kUnset) throw ParameterError("BallAdvice: duplicate point " + Point(center_.n(), index).to_bits());
      slot = bit ? 1 : 0;
    }
  }

  unsigned n() const { return center_.n(); }
  Point center() const { return center_; }
  unsigned radius() const { return indexer_.radius(); }
  std::uint64_t size() const { return indexer_.size(); }
  const BallIndexer& indexer() const { return indexer_; }

  bool contains(std::uint32_t index) const { return indexer_.contains(index ^ center_.index()); }

  std::optional<bool> find(std::uint32_t index) const {
    if (!contains(index)) return std::nullopt;
    return values_[indexer_.rank(index ^ center_.index())] != 0;
  }

  bool value(std::uint32_t index) const {
    if (!contains(index)) {
      throw AdviceError("advice has no value at " + Point(n(), index).to_bits());
    }
    return values_[indexer_.rank(index ^ center_.index())] != 0;
  }

  /// Value by offset rank; no bounds check.
  bool value_at_rank(std::uint64_t rank) const { return values_[rank] != 0; }

  /// (index, value) pairs in increasing index order.
  std::vector<std::pair<std::uint32_t, bool>> entries() const {
    std::vector<std::pair<std::uint32_t, bool>> out;
    out.reserve(size());
    indexer_.for_each([&](std::uint32_t offset) {
      out.emplace_back(offset ^ center_.index(), values_[indexer_.rank(offset)] != 0);
    });
    std::sort(out.begin(), out.end());
    return out;
  }

  friend bool operator==(const BallAdvice& a, const BallAdvice& b) {
    return a.center_ == b.center_ && a.radius() == b.radius() && a.values_ == b.values_;
  }

 private:
  static constexpr std::uint8_t kUnset = 2;

  static unsigned check_radius(unsigned n, unsigned radius) {
    if (radius > n) throw ParameterError("BallAdvice: radius exceeds n");
    return radius;
  }

  Point center_;
  BallIndexer indexer_;
  std::vector<std::uint8_t> values_;
};

inline BallAdvice restrict_to_ball(const TruthTable& f, Point x0, unsigned r) {
  require_same_dimension(f.n(), x0.n(), "restrict_to_ball");
  if (r > f.n()) throw ParameterError("restrict_to_ball: radius exceeds n");
  std::vector<std::pair<std::uint32_t, bool>> entries;
  entries.reserve(ball_volume(f.n(), r));
  for (unsigned k = 0; k <= r; ++k) {
    for_each_k_subset(f.n(), k, [&](std::uint32_t u) {
      const std::uint32_t y = x0.index() ^ u;
      entries.emplace_back(y, f[y]);
    });
  }
  return BallAdvice(x0, r, entries);
}

/// Partial function on the sphere S(center, radius).
class SphereAdvice {
 public:
  SphereAdvice(Point center, unsigned radius, std::vector<std::pair<std::uint32_t, bool>> entries)
      : center_(center), radius_(radius), entries_(std::move(entries)) {
    if (radius > center.n()) throw ParameterError("SphereAdvice: radius exceeds n");
    std::sort(entries_.begin(), entries_.end());
    if (entries_.size() != binomial(center.n(), radius)) {
      throw ParameterError("SphereAdvice: expected " + std::to_string(binomial(center.n(), radius)) + " entries");
    }
    for (std::size_t i = 0; i < entries_.size(); ++i) {
      const auto index = entries_[i].first;
      if ((std::uint64_t{index} >> center.n()) != 0 || std::popcount(index ^ center.index()) != static_cast<int>(radius)) {
        throw ParameterError("SphereAdvice: point off the sphere");
      }
      if (i > 0 && entries_[i - 1].first == index) throw ParameterError("SphereAdvice: duplicate point");
    }
  }

  unsigned n() const { return center_.n(); }
  Point center() const { return center_; }
  unsigned radius() const { return radius_; }
  const std::vector<std::pair<std::uint32_t, bool>>& entries() const { return entries_; }

 private:
  Point center_;
  unsigned radius_;
  std::vector<std::pair<std::uint32_t, bool>> entries_;
};

inline SphereAdvice restrict_to_sphere(const TruthTable& f, Point x0, unsigned r) {
  require_same_dimension(f.n(), x0.n(), "restrict_to_sphere");
  if (r > f.n()) throw ParameterError("restrict_to_sphere: radius exceeds n");
  std::vector<std::pair<std::uint32_t, bool>> entries;
  for_each_k_subset(f.n(), r, [&](std::uint32_t u) {
    const std::uint32_t y = x0.index() ^ u;
    entries.emplace_back(y, f[y]);
  });
  return SphereAdvice(x0, r, std::move(entries));
}

}  // namespace senslab
