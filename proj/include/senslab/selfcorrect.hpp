#pragma once

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "senslab/errors.hpp"
#include "senslab/evaluate.hpp"
#include "senslab/noise.hpp"
#include "senslab/point.hpp"
#include "senslab/rational.hpp"
#include "senslab/rng.hpp"
#include "senslab/truth_table.hpp"

namespace senslab {

/// Oracle for r = f XOR [x in corrupted] that counts its queries.
class CorruptedOracle {
 public:
  CorruptedOracle(TruthTable truth, TruthTable corrupted) : truth_(std::move(truth)), corrupted_(std::move(corrupted)) {
    require_same_dimension(truth_.n(), corrupted_.n(), "CorruptedOracle");
  }
  CorruptedOracle(const CorruptedOracle& o) : truth_(o.truth_), corrupted_(o.corrupted_), queries_(o.query_count()) {}
  CorruptedOracle& operator=(const CorruptedOracle& o) {
    truth_ = o.truth_;
    corrupted_ = o.corrupted_;
    queries_.store(o.query_count(), std::memory_order_relaxed);
    return *this;
  }

  unsigned n() const { return truth_.n(); }
  const TruthTable& truth() const { return truth_; }
  const TruthTable& corrupted() const { return corrupted_; }
  /// The explicit table r.
  TruthTable table() const { return truth_ ^ corrupted_; }

  bool operator()(Point x) const {
    queries_.fetch_add(1, std::memory_order_relaxed);
    return truth_[x.index()] != corrupted_[x.index()];
  }

  std::uint64_t query_count() const { return queries_.load(std::memory_order_relaxed); }
  void reset_count() { queries_.store(0, std::memory_order_relaxed); }

 private:
  TruthTable truth_;
  TruthTable corrupted_;
  mutable std::atomic<std::uint64_t> queries_{0};
};

struct Corruption {
  CorruptedOracle oracle;
  TruthTable r;
};

inline Corruption corrupt_points(const TruthTable& f, std::span<const std::uint32_t> points) {
  TruthTable mask = indicator(f.n(), points);
  return {CorruptedOracle(f, mask), f ^ mask};
}

/// Flips a uniform subset of round(rate * 2^n) points (Floyd's sampling).
inline Corruption corrupt(const TruthTable& f, const Rational& rate, std::uint64_t seed) {
  if (rate < 0 || rate > 1) throw ParameterError("corrupt: rate must lie in [0, 1]");
  const Rational scaled = rate * Rational(BigInt(f.size())) + Rational(1, 2);
  const auto m = static_cast<std::uint64_t>(BigInt(numerator(scaled) / denominator(scaled)));
  SplitMix64 rng(derive_seed(seed, "corrupt"));
  TruthTable mask(f.n());
  for (std::uint64_t j = f.size() - m; j < f.size(); ++j) {
    const auto t = static_cast<std::uint32_t>(uniform_below(rng, j + 1));
    mask.set(mask[t] ? static_cast<std::uint32_t>(j) : t, true);
  }
  return {CorruptedOracle(f, mask), f ^ mask};
}

/// Adversarial placement: x itself, then the points closest to x (ties by index).
inline Corruption corrupt_near(const TruthTable& f, Point x, std::uint64_t count) {
  require_same_dimension(f.n(), x.n(), "corrupt_near");
  if (count > f.size()) throw ParameterError("corrupt_near: count exceeds 2^n");
  std::vector<std::uint32_t> pts(f.size());
  for (std::uint64_t y = 0; y < f.size(); ++y) pts[y] = static_cast<std::uint32_t>(y);
  std::stable_sort(pts.begin(), pts.end(), [&](std::uint32_t a, std::uint32_t b) {
    return std::popcount(a ^ x.index()) < std::popcount(b ^ x.index());
  });
  pts.resize(count);
  return corrupt_points(f, pts);
}

inline std::vector<std::uint32_t> error_set(const TruthTable& g, const TruthTable& f) {
  require_same_dimension(g.n(), f.n(), "error_set");
  return (g ^ f).ones();
}

struct CorrectorParams {
  unsigned s = 1;
  std::optional<Rational> delta;  ///< default 1/(20s)
  std::optional<unsigned> k;      ///< default ceil(c2 s log2(n/s)) or ceil(d2 s log2(n/s))
  Rational epsilon{1, 100};
  double c1 = 6;
  double c2 = 4;
  double d1 = 6;
  double d2 = 4;
  unsigned repetitions = 1;  ///< odd; local mode takes the majority of this many runs

  NoiseRate noise() const {
    if (s == 0 && !delta) throw ParameterError("CorrectorParams: s must be at least 1");
    const Rational d = delta ? *delta : Rational(1, 20 * s);
    if (d <= 0 || d >= Rational(1, 2)) throw ParameterError("CorrectorParams: delta must lie in (0, 1/2)");
    return NoiseRate(d);
  }

  static unsigned depth_for(double c, unsigned s, unsigned n) {
    if (s == 0 || s >= n) return 1;
    return std::max(1u, static_cast<unsigned>(std::ceil(c * s * std::log2(static_cast<double>(n) / s))));
  }
  unsigned global_k(unsigned n) const { return k ? *k : depth_for(c2, s, n); }
  unsigned local_k(unsigned n) const { return k ? *k : depth_for(d2, s, n); }
};

struct MajorityStep {
  TruthTable table;
  std::vector<std::uint32_t> ties;
};

/// One smoothing step: 1 where T_{1-2delta} g > 1/2, 0 where < 1/2, g kept on exact ties.
inline MajorityStep majority_step(const TruthTable& g, const NoiseRate& delta) {
  const auto t = noise_operator(g, delta);
  MajorityStep out{TruthTable(g.n()), {}};
  const Rational half(1, 2);
  for (std::uint64_t x = 0; x < g.size(); ++x) {
    const auto xi = static_cast<std::uint32_t>(x);
    const double v = t.values[x];
    int side;
    if (v > 0.5 + kBoundaryTolerance) {
      side = 1;
    } else if (v < 0.5 - kBoundaryTolerance) {
      side = -1;
    } else {
      side = compare_noise_value(g, Point(g.n(), xi), delta, half);
    }
    bool bit = side > 0;
    if (side == 0) {
      bit = g[xi];
      out.ties.push_back(xi);
    }
    if (bit) out.table.set(xi, true);
  }
  return out;
}

struct GlobalStep {
  unsigned t = 0;
  std::uint64_t errors = 0;  ///< |S_t|, needs ground truth
  bool contained = true;     ///< S_t within Lambda_{delta,2/5}(S_{t-1})
  std::uint64_t ties = 0;
};

struct GlobalResult {
  TruthTable table;
  std::vector<std::uint64_t> trace;  ///< |S_0|, |S_1|, ... (ground truth only)
  unsigned iterations = 0;           ///< majority steps that changed the table
  bool fixpoint = false;             ///< stopped because a step changed nothing
  bool recovered = false;            ///< equals the ground truth (false without one)
  bool containment_holds = true;
  std::uint64_t ties = 0;
};

/// Iterates majority_step up to k times, stopping at a fixpoint. With ground truth the
/// error sets are tracked and every S_t is checked against Lambda_{delta,2/5}(S_{t-1}).
inline GlobalResult global_correct(const TruthTable& r, const CorrectorParams& params, const TruthTable* truth = nullptr,
                                   const std::function<void(const GlobalStep&)>& observer = {}) {
  if (truth) require_same_dimension(r.n(), truth->n(), "global_correct");
  const NoiseRate delta = params.noise();
  const unsigned k = params.global_k(r.n());
  GlobalResult res{r, {}, 0, false, false, true, 0};
  std::optional<TruthTable> prev_errors;
  if (truth) {
    prev_errors = r ^ *truth;
    res.trace.push_back(prev_errors->count_ones());
  }
  for (unsigned t = 1; t <= k; ++t) {
    auto step = majority_step(res.table, delta);
    res.ties += step.ties.size();
    if (step.table == res.table) {
      res.fixpoint = true;
      break;
    }
    res.table = std::move(step.table);
    ++res.iterations;
    GlobalStep info{t, 0, true, step.ties.size()};
    if (truth) {
      TruthTable errors = res.table ^ *truth;
      info.errors = errors.count_ones();
      info.contained = errors.is_subset_of(lambda_set(*prev_errors, delta, Rational(2, 5)));
      res.containment_holds = res.containment_holds && info.contained;
      res.trace.push_back(info.errors);
      prev_errors = std::move(errors);
    }
    if (observer) observer(info);
  }
  res.recovered = truth != nullptr && res.table == *truth;
  return res;
}

struct LocalResult {
  bool value = false;
  std::uint64_t queries = 0;
  unsigned c = 1;
  unsigned k = 0;
};

/// Refuses trees with more than this many leaves per run.
inline constexpr std::uint64_t kMaxLocalQueries = std::uint64_t{1} << 32;

inline std::uint64_t local_query_count(unsigned c, unsigned k) {
  std::uint64_t q = 1;
  for (unsigned i = 0; i < k; ++i) {
    if (q > kMaxLocalQueries / c) return kMaxLocalQueries + 1;
    q *= c;
  }
  return q;
}

namespace detail {

inline bool local_tree(const CorruptedOracle& oracle, Point x, unsigned level, unsigned c, const NoiseRate& delta,
                       std::uint64_t seed) {
  if (level == 0) return oracle(x);
  SplitMix64 rng(seed);
  unsigned ones = 0;
  for (unsigned i = 0; i < c; ++i) {
    const Point y = sample_noisy(x, delta, rng);
    ones += local_tree(oracle, y, level - 1, c, delta, derive_seed(seed, i));
  }
  return 2 * ones > c;
}

}  // namespace detail

/// Samples the c-ary depth-k tree whose children are drawn from N_{1-2delta}(parent),
/// queries r at its c^k leaves and folds majorities upward; c = c(1/4, epsilon).
/// With params.repetitions > 1 the majority of that many independent trees is returned.
inline LocalResult local_correct(const CorruptedOracle& oracle, Point x, const CorrectorParams& params, std::uint64_t seed) {
  require_same_dimension(oracle.n(), x.n(), "local_correct");
  if (params.repetitions % 2 == 0) throw ParameterError("local_correct: repetitions must be odd");
  const NoiseRate delta = params.noise();
  LocalResult res;
  res.k = params.local_k(x.n());
  res.c = majority_threshold_c(Rational(1, 4), params.epsilon);
  const std::uint64_t per_tree = local_query_count(res.c, res.k);
  if (per_tree > kMaxLocalQueries) throw GuardExceeded("local_correct: c^k query count is too large; lower k");
  unsigned ones = 0;
  const std::uint64_t before = oracle.query_count();
  for (unsigned rep = 0; rep < params.repetitions; ++rep) {
    const std::uint64_t tree_seed = params.repetitions == 1 ? seed : derive_seed(seed, rep);
    ones += detail::local_tree(oracle, x, res.k, res.c, delta, tree_seed);
  }
  res.value = 2 * ones > params.repetitions;
  res.queries = oracle.query_count() - before;
  return res;
}

}  // namespace senslab
