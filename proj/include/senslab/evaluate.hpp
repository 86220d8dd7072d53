#pragma once

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <map>
#include <optional>
#include <unordered_map>
#include <vector>

#include "senslab/ball_advice.hpp"
#include "senslab/binomial.hpp"
#include "senslab/errors.hpp"
#include "senslab/noise.hpp"
#include "senslab/point.hpp"
#include "senslab/rational.hpp"
#include "senslab/rng.hpp"

namespace senslab {

struct EvalStats {
  std::uint64_t points_computed = 0;
  std::map<unsigned, std::uint64_t> points_by_weight;
  std::uint64_t ball_shifts = 0;
  std::uint64_t ball_size = 0;  ///< live ball entries (Bottom-Up)
  std::uint64_t majority_votes = 0;
  std::uint64_t rng_draws = 0;
  unsigned max_depth = 0;  ///< recursion depth (Parallel)
  std::uint64_t trials = 0;

  void merge(const EvalStats& o) {
    points_computed += o.points_computed;
    for (const auto& [w, c] : o.points_by_weight) points_by_weight[w] += c;
    ball_shifts += o.ball_shifts;
    ball_size = std::max(ball_size, o.ball_size);
    majority_votes += o.majority_votes;
    rng_draws += o.rng_draws;
    max_depth = std::max(max_depth, o.max_depth);
    trials += o.trials;
  }
};

struct EvalResult {
  bool value = false;
  EvalStats stats;
};

/// Pr[Bin(c, mu) > c/2], exact.
inline Rational majority_error(unsigned c, const Rational& mu) {
  Rational tail = 0;
  const Rational miss = Rational(1) - mu;
  for (unsigned j = c / 2 + 1; j <= c; ++j) {
    Rational term = Rational(BigInt(binomial(c, j)));
    for (unsigned a = 0; a < j; ++a) term *= mu;
    for (unsigned b = 0; b < c - j; ++b) term *= miss;
    tail += term;
  }
  return tail;
}

/// Smallest odd c with Pr[Bin(c, mu) > c/2] <= delta_target (odd, so the majority never ties).
inline unsigned majority_threshold_c(const Rational& mu, const Rational& delta_target) {
  if (mu < 0 || mu >= Rational(1, 2)) throw ParameterError("majority_threshold_c: need 0 <= mu < 1/2");
  if (delta_target <= 0 || delta_target >= 1) throw ParameterError("majority_threshold_c: need 0 < delta < 1");
  unsigned c = 1;
  while (majority_error(c, mu) > delta_target) c += 2;
  return c;
}

namespace detail {

inline void require_origin_advice(const BallAdvice& advice, unsigned needed_radius, const char* who) {
  if (advice.center().index() != 0) throw ParameterError(std::string(who) + ": advice must be centered at 0^n");
  if (advice.radius() < std::min(needed_radius, advice.n())) {
    throw ParameterError(std::string(who) + ": advice radius " + std::to_string(advice.radius()) + " is below the required " +
                         std::to_string(needed_radius));
  }
}

}  // namespace detail

/// Bottom-Up: keeps f on a radius-2s ball and moves its center from 0^n toward x one unit
/// step at a time (coordinates in increasing order). After a shift, points already in the
/// old ball are copied and each new point takes the majority of its 2s+1 neighbors in the
/// old ball. Shift tables are built lazily per coordinate and reused across inputs.
class BottomUpEvaluator {
 public:
  BottomUpEvaluator(const BallAdvice& advice, unsigned s)
      : n_(advice.n()), radius_(std::min(2 * s, advice.n())), indexer_(n_, radius_), plans_(n_) {
    detail::require_origin_advice(advice, 2 * s, "bottom_up_eval");
    base_.resize(indexer_.size());
    indexer_.for_each([&](std::uint32_t u) { base_[indexer_.rank(u)] = advice.value(u); });
  }

  unsigned radius() const { return radius_; }
  std::uint64_t ball_size() const { return indexer_.size(); }

  EvalResult operator()(Point x) {
    require_same_dimension(x.n(), n_, "bottom_up_eval");
    EvalResult res;
    res.stats.ball_size = indexer_.size();
    if (weight(x) <= radius_) {
      res.value = base_[indexer_.rank(x.index())];
      res.stats.points_computed = 1;
      return res;
    }
    current_ = base_;
    std::uint32_t center = 0;
    for (std::uint32_t rest = x.index(); rest != 0; rest &= rest - 1) {
      const auto i = static_cast<unsigned>(std::countr_zero(rest));
      shift(i, res.stats);
      center |= std::uint32_t{1} << i;
      if (static_cast<unsigned>(std::popcount(center ^ x.index())) <= radius_) break;
    }
    res.value = current_[indexer_.rank(center ^ x.index())];
    return res;
  }

 private:
  struct ShiftPlan {
    std::vector<std::int64_t> source;  ///< old rank for copied entries, -1 for new points
    std::vector<std::uint64_t> new_ranks;
    std::vector<std::uint64_t> voters;  ///< radius+1 old ranks per new point
  };

  const ShiftPlan& plan(unsigned i) {
    auto& p = plans_[i];
    if (p) return *p;
    p.emplace();
    p->source.assign(indexer_.size(), -1);
    const std::uint32_t bit = std::uint32_t{1} << i;
    indexer_.for_each([&](std::uint32_t u) {
      const auto rank = indexer_.rank(u);
      const std::uint32_t old_offset = u ^ bit;
      if (indexer_.contains(old_offset)) {
        p->source[rank] = static_cast<std::int64_t>(indexer_.rank(old_offset));
        return;
      }
      // |old_offset| = radius + 1; its neighbors one step closer all lie in the old ball.
      p->new_ranks.push_back(rank);
      for (std::uint32_t m = old_offset; m != 0; m &= m - 1) p->voters.push_back(indexer_.rank(old_offset ^ (m & (0u - m))));
    });
    return *p;
  }

  void shift(unsigned i, EvalStats& stats) {
    const ShiftPlan& p = plan(i);
    next_.resize(current_.size());
    for (std::size_t r = 0; r < p.source.size(); ++r)
      if (p.source[r] >= 0) next_[r] = current_[static_cast<std::size_t>(p.source[r])];
    const unsigned voters = radius_ + 1;
    for (std::size_t k = 0; k < p.new_ranks.size(); ++k) {
      unsigned ones = 0;
      for (unsigned v = 0; v < voters; ++v) ones += current_[p.voters[k * voters + v]];
      next_[p.new_ranks[k]] = 2 * ones > voters;
    }
    current_.swap(next_);
    ++stats.ball_shifts;
    stats.majority_votes += p.new_ranks.size();
    stats.points_computed += p.source.size();
  }

  unsigned n_;
  unsigned radius_;
  BallIndexer indexer_;
  std::vector<std::uint8_t> base_;
  std::vector<std::uint8_t> current_;
  std::vector<std::uint8_t> next_;
  std::vector<std::optional<ShiftPlan>> plans_;
};

inline EvalResult bottom_up_eval(const BallAdvice& advice, unsigned s, Point x) { return BottomUpEvaluator(advice, s)(x); }

/// The k lower neighbors of x that come first in colex order, ascending. Clearing a
/// higher one-bit gives a smaller index, so these clear the k highest one-bits of x.
inline std::vector<Point> colex_smallest_lower_neighbors(Point x, unsigned k) {
  if (k > weight(x)) throw ParameterError("colex_smallest_lower_neighbors: k exceeds wt(x)");
  std::vector<Point> out;
  out.reserve(k);
  std::uint32_t rest = x.index();
  for (unsigned j = 0; j < k; ++j) {
    const std::uint32_t top = std::uint32_t{1} << (31 - std::countl_zero(rest));
    out.emplace_back(x.n(), x.index() ^ top);
    rest ^= top;
  }
  return out;
}

/// Top-Down: memoized recursion on the 2s+1 colex-smallest lower neighbors, reading the
/// advice once the weight is at most 2s.
class TopDownEvaluator {
 public:
  TopDownEvaluator(const BallAdvice& advice, unsigned s) : advice_(advice), s_(s) {
    detail::require_origin_advice(advice, 2 * s, "top_down_eval");
  }

  EvalResult operator()(Point x) {
    require_same_dimension(x.n(), advice_.n(), "top_down_eval");
    memo_.clear();
    EvalResult res;
    res.value = visit(x.index(), res.stats);
    return res;
  }

 private:
  bool visit(std::uint32_t y, EvalStats& stats) {
    if (auto it = memo_.find(y); it != memo_.end()) return it->second;
    const auto w = static_cast<unsigned>(std::popcount(y));
    bool v;
    if (w <= 2 * s_) {
      v = advice_.value(y);
    } else {
      unsigned ones = 0;
      std::uint32_t rest = y;
      for (unsigned j = 0; j <= 2 * s_; ++j) {
        const std::uint32_t top = std::uint32_t{1} << (31 - std::countl_zero(rest));
        ones += visit(y ^ top, stats);
        rest ^= top;
      }
      v = ones > s_;
      ++stats.majority_votes;
    }
    memo_.emplace(y, v);
    ++stats.points_computed;
    ++stats.points_by_weight[w];
    return v;
  }

  BallAdvice advice_;
  unsigned s_;
  std::unordered_map<std::uint32_t, bool> memo_;
};

inline EvalResult top_down_eval(const BallAdvice& advice, unsigned s, Point x) { return TopDownEvaluator(advice, s)(x); }

/// Randomized recursive majority over downward samples. Below weight 10s+1 the advice is
/// read; otherwise c = c(1/5, 1/20) points are drawn from D(x, floor(d/(10s+1))) and
/// evaluated recursively with independent seeds. Each child's seed is derived from its
/// parent's, so results do not depend on evaluation order. Nothing is memoized.
class ParallelEvaluator {
 public:
  ParallelEvaluator(const BallAdvice& advice, unsigned s) : advice_(advice), s_(s) {
    if (s == 0) throw ParameterError("parallel_eval: s must be at least 1");
    detail::require_origin_advice(advice, 10 * s, "parallel_eval");
    fanout_ = majority_threshold_c(Rational(1, 5), Rational(1, 20));
  }

  unsigned fanout() const { return fanout_; }

  EvalResult operator()(Point x, std::uint64_t seed) const {
    require_same_dimension(x.n(), advice_.n(), "parallel_eval");
    EvalResult res;
    res.value = visit(x, seed, 0, res.stats);
    res.stats.trials = 1;
    return res;
  }

 private:
  bool visit(Point x, std::uint64_t seed, unsigned depth, EvalStats& stats) const {
    ++stats.points_computed;
    stats.max_depth = std::max(stats.max_depth, depth);
    const unsigned d = weight(x);
    if (d <= 10 * s_) return advice_.value(x.index());
    const unsigned t = d / (10 * s_ + 1);
    SplitMix64 rng(seed);
    unsigned ones = 0;
    for (unsigned i = 0; i < fanout_; ++i) {
      const Point y = downward_sample(x, t, rng);
      stats.rng_draws += t;
      ones += visit(y, derive_seed(seed, i), depth + 1, stats);
    }
    ++stats.majority_votes;
    return 2 * ones > fanout_;
  }

  BallAdvice advice_;
  unsigned s_;
  unsigned fanout_;
};

inline EvalResult parallel_eval(const BallAdvice& advice, unsigned s, Point x, std::uint64_t seed) {
  return ParallelEvaluator(advice, s)(x, seed);
}

/// Upper bound on Parallel recursion depth: ceil(25 s ln d) + 1.
inline unsigned parallel_depth_bound(unsigned s, unsigned d) {
  if (d <= 1) return 1;
  return static_cast<unsigned>(std::ceil(25.0 * s * std::log(static_cast<double>(d)))) + 1;
}

/// Majority of c(1/20, target_error) independent parallel_eval runs.
inline EvalResult amplified_eval(const BallAdvice& advice, unsigned s, Point x, const Rational& target_error,
                                 std::uint64_t seed) {
  if (target_error <= 0 || target_error > Rational(1, 20)) throw ParameterError("amplified_eval: target error must lie in (0, 1/20]");
  const ParallelEvaluator eval(advice, s);
  const unsigned reps = majority_threshold_c(Rational(1, 20), target_error);
  EvalResult res;
  unsigned ones = 0;
  for (unsigned r = 0; r < reps; ++r) {
    const auto one = eval(x, derive_seed(seed, r));
    ones += one.value;
    res.stats.merge(one.stats);
  }
  res.value = 2 * ones > reps;
  return res;
}

}  // namespace senslab
