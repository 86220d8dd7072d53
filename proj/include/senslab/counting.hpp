#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <functional>
#include <thread>
#include <vector>

#include "senslab/binomial.hpp"
#include "senslab/errors.hpp"
#include "senslab/measures.hpp"
#include "senslab/rational.hpp"
#include "senslab/rng.hpp"
#include "senslab/truth_table.hpp"

namespace senslab {

/// Largest n enumerated without the long-run flag; n = 5 means 2^32 candidates.
inline constexpr unsigned kEnumerationCap = 4;
inline constexpr unsigned kLongEnumerationCap = 5;

/// s(f) for a table packed in the low 2^n bits of one word, n <= 6.
inline unsigned max_sensitivity_packed(std::uint64_t bits, unsigned n) {
  detail::Planes planes{};
  for (unsigned i = 0; i < n; ++i) {
    const unsigned sh = 1u << i;
    const std::uint64_t m = detail::kLowVarMask[i];
    detail::add_bit(planes, bits ^ (((bits & m) << sh) | ((bits >> sh) & m)));
  }
  const std::uint64_t live = n == 6 ? ~std::uint64_t{0} : (std::uint64_t{1} << (1u << n)) - 1;
  return detail::masked_max(planes, live);
}

namespace detail {

inline void check_enumeration(unsigned n, bool allow_long) {
  if (n == 0) throw ParameterError("enumeration needs n >= 1");
  const unsigned cap = allow_long ? kLongEnumerationCap : kEnumerationCap;
  if (n > cap) {
    throw GuardExceeded("enumeration at n = " + std::to_string(n) + " exceeds the cap " + std::to_string(cap) +
                        (n == kLongEnumerationCap ? " (pass the long-run flag)" : ""));
  }
}

/// hist[s] = number of tables with s(f) = s, split across hardware threads.
inline std::vector<std::uint64_t> sensitivity_histogram(unsigned n) {
  const std::uint64_t total = std::uint64_t{1} << (1u << n);
  const unsigned workers = total < (1u << 20) ? 1u : std::max(1u, std::thread::hardware_concurrency());
  std::vector<std::vector<std::uint64_t>> partial(workers, std::vector<std::uint64_t>(n + 1, 0));
  auto run = [&](unsigned w) {
    const std::uint64_t lo = total / workers * w;
    const std::uint64_t hi = w + 1 == workers ? total : total / workers * (w + 1);
    auto& h = partial[w];
    for (std::uint64_t bits = lo; bits < hi; ++bits) ++h[max_sensitivity_packed(bits, n)];
  };
  if (workers == 1) {
    run(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(run, w);
    for (auto& t : pool) t.join();
  }
  std::vector<std::uint64_t> hist(n + 1, 0);
  for (const auto& h : partial)
    for (unsigned s = 0; s <= n; ++s) hist[s] += h[s];
  return hist;
}

}  // namespace detail

/// Calls fn(bits) for every table of F(s, n) in increasing packed order.
inline void for_each_member(unsigned n, unsigned s, const std::function<void(std::uint64_t)>& fn, bool allow_long = false) {
  detail::check_enumeration(n, allow_long);
  const std::uint64_t total = std::uint64_t{1} << (1u << n);
  for (std::uint64_t bits = 0; bits < total; ++bits)
    if (max_sensitivity_packed(bits, n) <= s) fn(bits);
}

inline std::vector<std::uint64_t> members(unsigned n, unsigned s) {
  std::vector<std::uint64_t> out;
  for_each_member(n, s, [&](std::uint64_t bits) { out.push_back(bits); });
  return out;
}

/// |F(s, n)| by scanning all 2^{2^n} tables.
inline std::uint64_t enumerate_class(unsigned n, unsigned s, bool allow_long = false) {
  detail::check_enumeration(n, allow_long);
  const auto hist = detail::sensitivity_histogram(n);
  std::uint64_t count = 0;
  for (unsigned t = 0; t <= std::min(s, n); ++t) count += hist[t];
  return count;
}

struct CountBounds {
  BigInt lower;
  BigInt upper;
  BigInt lower_junta;       ///< C(n,s) 2^{2^s - 1}
  BigInt lower_addressing;  ///< (n-s+1)^{2^{s-1}}, only for s >= 1
};

/// lower = max(C(n,s) 2^{2^s-1}, (n-s+1)^{2^{s-1}}), upper = 2^{C(n, <= 2s)}.
/// The addressing term needs at least one address bit, so it is dropped at s = 0.
inline CountBounds count_bounds(unsigned n, unsigned s) {
  if (n == 0 || n > kMaxVars) throw ParameterError("count_bounds: n must lie in [1, 24]");
  if (s > n) throw ParameterError("count_bounds: s exceeds n");
  CountBounds b;
  b.upper = BigInt(1) << ball_volume(n, std::min(2 * s, n));
  b.lower_junta = BigInt(binomial(n, s)) << ((std::uint64_t{1} << s) - 1);
  b.lower_addressing = s >= 1 ? pow_big(BigInt(n - s + 1), 1u << (s - 1)) : BigInt(0);
  b.lower = std::max(b.lower_junta, b.lower_addressing);
  return b;
}

struct ClassCensus {
  unsigned n = 0;
  std::vector<std::uint64_t> counts;  ///< |F(s, n)| for s = 0..n
  std::vector<CountBounds> bounds;

  bool bounds_hold() const {
    for (std::size_t s = 0; s < counts.size(); ++s)
      if (bounds[s].lower > counts[s] || BigInt(counts[s]) > bounds[s].upper) return false;
    return true;
  }
};

inline ClassCensus census(unsigned n, bool allow_long = false) {
  detail::check_enumeration(n, allow_long);
  const auto hist = detail::sensitivity_histogram(n);
  ClassCensus c;
  c.n = n;
  std::uint64_t running = 0;
  for (unsigned s = 0; s <= n; ++s) {
    running += hist[s];
    c.counts.push_back(running);
    c.bounds.push_back(count_bounds(n, s));
  }
  return c;
}

struct XorSensitivityReport {
  unsigned s1 = 0;
  unsigned s2 = 0;
  unsigned s_xor = 0;
  bool holds = false;
};

/// s(f1 XOR f2) <= s(f1) + s(f2).
inline XorSensitivityReport xor_sensitivity_check(const TruthTable& f1, const TruthTable& f2) {
  require_same_dimension(f1.n(), f2.n(), "xor_sensitivity_check");
  XorSensitivityReport r;
  r.s1 = sensitivity(f1).s;
  r.s2 = sensitivity(f2).s;
  r.s_xor = sensitivity(f1 ^ f2).s;
  r.holds = r.s_xor <= r.s1 + r.s2;
  return r;
}

/// Default constant C in k = C 2^{2s} C(n, <= 4s).
inline constexpr std::uint64_t kInterpolationConstant = 3;

inline std::uint64_t interpolation_sample_size(unsigned n, unsigned s, std::uint64_t C = kInterpolationConstant) {
  return C * (std::uint64_t{1} << (2 * s)) * ball_volume(n, std::min(4 * s, n));
}

/// Sample sets are masks over the 2^n points; tables are packed words (n <= 4).
class InterpolationOracle {
 public:
  InterpolationOracle(unsigned n, unsigned s) : n_(n), s_(s) {
    detail::check_enumeration(n, false);
    class_ = members(n, s);
    hit_targets_ = members(n, std::min(2 * s, n));
    hit_targets_.erase(std::remove(hit_targets_.begin(), hit_targets_.end(), 0), hit_targets_.end());
    // Nonzero differences f1 XOR f2 within F(s, n); |F|^2 stays below 2^32 for n <= 4.
    const std::uint64_t space = std::uint64_t{1} << (1u << n);
    std::vector<std::uint8_t> in_class(space, 0);
    for (auto f : class_) in_class[f] = 1;
    std::vector<std::uint8_t> is_diff(space, 0);
    for (std::uint64_t g = 1; g < space; ++g) {
      for (auto f : class_) {
        if (in_class[f ^ g]) {
          is_diff[g] = 1;
          break;
        }
      }
    }
    for (std::uint64_t g = 1; g < space; ++g)
      if (is_diff[g]) differences_.push_back(g);
  }

  std::size_t class_size() const { return class_.size(); }

  /// Every pair f1 != f2 in F(s, n) differs somewhere on the sample.
  bool interpolates(std::uint64_t sample) const {
    std::vector<std::uint64_t> restricted;
    restricted.reserve(class_.size());
    for (auto f : class_) restricted.push_back(f & sample);
    std::sort(restricted.begin(), restricted.end());
    return std::adjacent_find(restricted.begin(), restricted.end()) == restricted.end();
  }

  /// Every nonzero member of F(2s, n) is 1 somewhere on the sample.
  bool hits_double_class(std::uint64_t sample) const {
    return std::all_of(hit_targets_.begin(), hit_targets_.end(), [&](std::uint64_t g) { return (g & sample) != 0; });
  }

  /// Every nonzero f1 XOR f2 with f1, f2 in F(s, n) is 1 somewhere on the sample.
  bool hits_differences(std::uint64_t sample) const {
    return std::all_of(differences_.begin(), differences_.end(), [&](std::uint64_t g) { return (g & sample) != 0; });
  }

  unsigned n() const { return n_; }
  unsigned s() const { return s_; }

 private:
  unsigned n_;
  unsigned s_;
  std::vector<std::uint64_t> class_;
  std::vector<std::uint64_t> hit_targets_;
  std::vector<std::uint64_t> differences_;
};

struct InterpolationReport {
  std::uint64_t trials = 0;
  std::uint64_t interpolating = 0;
  std::uint64_t hitting = 0;  ///< samples hitting every nonzero member of F(2s, n)
  bool implication_holds = true;   ///< hitting implied interpolating on every trial
  bool equivalence_holds = true;   ///< interpolating iff every difference was hit, on every trial
  double success_fraction() const { return trials == 0 ? 0.0 : static_cast<double>(interpolating) / static_cast<double>(trials); }
  double hit_fraction() const { return trials == 0 ? 0.0 : static_cast<double>(hitting) / static_cast<double>(trials); }
};

/// Per trial, draws k uniform points with replacement and tests interpolation of F(s, n).
/// With all_points the whole cube is used instead of a sample.
inline InterpolationReport interpolation_experiment(unsigned n, unsigned s, std::uint64_t k, std::uint64_t trials,
                                                    std::uint64_t seed, bool all_points = false) {
  const InterpolationOracle oracle(n, s);
  InterpolationReport r;
  const std::uint64_t cube = std::uint64_t{1} << n;
  for (std::uint64_t t = 0; t < trials; ++t) {
    std::uint64_t sample = 0;
    if (all_points) {
      sample = n == 6 ? ~std::uint64_t{0} : (std::uint64_t{1} << cube) - 1;
    } else {
      SplitMix64 rng(derive_seed(seed, t));
      for (std::uint64_t i = 0; i < k; ++i) sample |= std::uint64_t{1} << uniform_below(rng, cube);
    }
    const bool interp = oracle.interpolates(sample);
    const bool hit = oracle.hits_double_class(sample);
    r.interpolating += interp;
    r.hitting += hit;
    if (hit && !interp) r.implication_holds = false;
    if (interp != oracle.hits_differences(sample)) r.equivalence_holds = false;
    ++r.trials;
  }
  return r;
}

}  // namespace senslab
