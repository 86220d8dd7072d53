#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "senslab/ball_advice.hpp"
#include "senslab/errors.hpp"
#include "senslab/measures.hpp"
#include "senslab/point.hpp"
#include "senslab/truth_table.hpp"

namespace senslab {

enum class FailureReason { Tie, OutOfRange };

inline const char* to_string(FailureReason r) { return r == FailureReason::Tie ? "tie" : "out-of-range"; }

/// First offending point in (distance from center, index) order.
struct ExtensionFailure {
  Point point;
  FailureReason reason;
};

using ExtensionOutcome = std::variant<TruthTable, ExtensionFailure>;

inline bool extended(const ExtensionOutcome& o) { return std::holds_alternative<TruthTable>(o); }

/// True iff the outcome is Extended and equals f.
inline bool extends_to(const ExtensionOutcome& o, const TruthTable& f) {
  const auto* t = std::get_if<TruthTable>(&o);
  return t != nullptr && *t == f;
}

/// Failed{first non-Boolean point, OutOfRange} or the Boolean table.
inline ExtensionOutcome as_boolean(const IntegerFunction& g) {
  const auto bad = g.first_non_boolean();
  if (bad != g.size()) return ExtensionFailure{Point(g.n, static_cast<std::uint32_t>(bad)), FailureReason::OutOfRange};
  return g.to_truth_table();
}

namespace detail {

inline std::vector<std::uint8_t> dense_values(const TruthTable& f) {
  std::vector<std::uint8_t> v(f.size());
  for (std::uint64_t x = 0; x < f.size(); ++x) v[x] = f[static_cast<std::uint32_t>(x)];
  return v;
}

inline TruthTable table_from_dense(unsigned n, const std::vector<std::uint8_t>& v) {
  TruthTable t(n);
  for (std::uint64_t x = 0; x < v.size(); ++x)
    if (v[x]) t.set(static_cast<std::uint32_t>(x), true);
  return t;
}

/// Majority rule: vals must hold correct values at distance <= r from center; fills
/// distances r+1..n, each point from its neighbors one step closer to the center.
/// If `reference` is given, stops at the first value that differs from it.
/// Returns the first tied (or, with a reference, mismatching) point.
inline std::optional<std::uint32_t> majority_fill(std::vector<std::uint8_t>& vals, unsigned n, std::uint32_t center,
                                                  unsigned r, const TruthTable* reference = nullptr) {
  const std::uint64_t size = std::uint64_t{1} << n;
  for (unsigned level = r + 1; level <= n; ++level) {
    for (std::uint64_t yy = 0; yy < size; ++yy) {
      const auto y = static_cast<std::uint32_t>(yy);
      const std::uint32_t offset = y ^ center;
      if (static_cast<unsigned>(std::popcount(offset)) != level) continue;
      unsigned ones = 0;
      for (std::uint32_t m = offset; m != 0; m &= m - 1) ones += vals[y ^ (m & (0u - m))];
      if (2 * ones == level) return y;
      vals[y] = 2 * ones > level;
      if (reference != nullptr && (vals[y] != 0) != (*reference)[y]) return y;
    }
  }
  return std::nullopt;
}

}  // namespace detail

/// Applies the Majority rule outward from the advice ball. A point at distance k+1 gets
/// the majority of its k+1 neighbors at distance k; an exact tie yields Failed{Tie}.
inline ExtensionOutcome majority_extend(const BallAdvice& advice) {
  const unsigned n = advice.n();
  std::vector<std::uint8_t> vals(std::size_t{1} << n, 0);
  for (const auto& [index, bit] : advice.entries()) vals[index] = bit;
  if (auto tie = detail::majority_fill(vals, n, advice.center().index(), advice.radius())) {
    return ExtensionFailure{Point(n, *tie), FailureReason::Tie};
  }
  return detail::table_from_dense(n, vals);
}

/// Sphere S(x0, 2s) -> total function, for s <= n/4: Majority rule outward to distance n,
/// then the inner ball from the antipodal ball B(x0 XOR 1^n, 2s).
inline ExtensionOutcome sphere_extend(const SphereAdvice& sphere, unsigned s) {
  const unsigned n = sphere.n();
  if (4 * s > n) throw ParameterError("sphere_extend: need s <= n/4");
  if (sphere.radius() != 2 * s) throw ParameterError("sphere_extend: sphere radius must be 2s");
  const std::uint32_t center = sphere.center().index();
  const std::uint32_t all = static_cast<std::uint32_t>((std::uint64_t{1} << n) - 1);

  std::vector<std::uint8_t> outer(std::size_t{1} << n, 0);
  for (const auto& [index, bit] : sphere.entries()) outer[index] = bit;
  if (auto tie = detail::majority_fill(outer, n, center, 2 * s)) return ExtensionFailure{Point(n, *tie), FailureReason::Tie};

  // Everything at distance >= 2s from the center is now fixed, which includes B(antipode, 2s).
  std::vector<std::uint8_t> inner = outer;
  if (auto tie = detail::majority_fill(inner, n, center ^ all, 2 * s)) return ExtensionFailure{Point(n, *tie), FailureReason::Tie};

  for (std::uint64_t y = 0; y < outer.size(); ++y)
    if (static_cast<unsigned>(std::popcount(static_cast<std::uint32_t>(y) ^ center)) < 2 * s) outer[y] = inner[y];
  return detail::table_from_dense(n, outer);
}

namespace detail {

/// Advice moved to the origin: g(u) = advice(center XOR u) on the ball, 0 elsewhere.
inline IntegerFunction translated_advice(const BallAdvice& advice) {
  IntegerFunction g(advice.n());
  for (const auto& [index, bit] : advice.entries()) g.values[index ^ advice.center().index()] = bit;
  return g;
}

inline IntegerFunction translate(const IntegerFunction& g, std::uint32_t shift) {
  IntegerFunction out(g.n);
  for (std::uint64_t u = 0; u < g.size(); ++u) out.values[u ^ shift] = g.values[u];
  return out;
}

}  // namespace detail

/// Parity rule: the unique real multilinear function of degree <= radius that agrees with
/// the advice. Integer-valued, not necessarily Boolean. General centers are handled by
/// translating y -> y XOR center, which preserves degree.
inline IntegerFunction parity_extend(const BallAdvice& advice) {
  const IntegerFunction g = detail::translated_advice(advice);
  // Coefficients c_S with |S| <= radius only read values inside the ball, so they are the
  // true ones; the rule is exactly c_S = 0 above the radius.
  IntegerFunction c = g;
  for (unsigned i = 0; i < c.n; ++i) {
    const std::uint32_t bit = std::uint32_t{1} << i;
    for (std::uint64_t x = 0; x < c.size(); ++x)
      if (x & bit) c.values[x] -= c.values[x ^ bit];
  }
  for (std::uint64_t S = 0; S < c.size(); ++S)
    if (static_cast<unsigned>(std::popcount(S)) > advice.radius()) c.values[S] = 0;
  return detail::translate(evaluate_multilinear(c), advice.center().index());
}

/// F2 rule: the unique Boolean function with deg2 <= radius that agrees with the advice.
inline TruthTable f2_extend(const BallAdvice& advice) {
  const unsigned n = advice.n();
  TruthTable g(n);
  for (const auto& [index, bit] : advice.entries())
    if (bit) g.set(index ^ advice.center().index(), true);
  TruthTable c = mobius_f2(g);
  for (std::uint64_t S = 0; S < c.size(); ++S)
    if (static_cast<unsigned>(std::popcount(S)) > advice.radius()) c.set(static_cast<std::uint32_t>(S), false);
  const TruthTable back = mobius_f2(c);
  TruthTable out(n);
  for (std::uint64_t u = 0; u < out.size(); ++u)
    if (back[static_cast<std::uint32_t>(u)]) out.set(static_cast<std::uint32_t>(u) ^ advice.center().index(), true);
  return out;
}

/// Largest n accepted by the brute-force radius searches.
inline constexpr unsigned kBruteForceRadiusCap = 10;

/// r^Maj(f) = min(2 s(f), n).
inline unsigned r_maj(const TruthTable& f) { return std::min(2 * sensitivity(f).s, f.n()); }

/// Smallest r such that the Majority rule from B(x0, r) reproduces f for every center x0.
inline unsigned r_maj_bruteforce(const TruthTable& f) {
  if (f.n() > kBruteForceRadiusCap) throw GuardExceeded("r_maj_bruteforce is capped at n = 10");
  const auto truth = detail::dense_values(f);
  unsigned worst = 0;
  std::vector<std::uint8_t> vals;
  for (std::uint64_t c = 0; c < f.size(); ++c) {
    // Success is monotone in r for a fixed center, so the per-center minimum suffices.
    unsigned r = worst;
    for (; r < f.n(); ++r) {
      vals = truth;
      if (!detail::majority_fill(vals, f.n(), static_cast<std::uint32_t>(c), r, &f)) break;
    }
    worst = std::max(worst, r);
  }
  return worst;
}

/// r^Par(f) = deg(f).
inline unsigned r_par(const TruthTable& f) { return degree(f); }

enum class CenterScope { All, OriginOnly };

/// Smallest r such that the Parity rule from B(x0, r) reproduces f for every center in scope.
inline unsigned r_par_bruteforce(const TruthTable& f, CenterScope scope = CenterScope::All) {
  if (f.n() > kBruteForceRadiusCap) throw GuardExceeded("r_par_bruteforce is capped at n = 10");
  const std::uint64_t centers = scope == CenterScope::All ? f.size() : 1;
  unsigned worst = 0;
  for (std::uint64_t c = 0; c < centers; ++c) {
    const Point x0(f.n(), static_cast<std::uint32_t>(c));
    unsigned r = worst;
    while (r < f.n() && !parity_extend(restrict_to_ball(f, x0, r)).equals(f)) ++r;
    worst = std::max(worst, r);
  }
  return worst;
}

}  // namespace senslab
