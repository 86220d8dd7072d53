#pragma once

#include <boost/multiprecision/cpp_dec_float.hpp>

#include <bit>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include "senslab/binomial.hpp"
#include "senslab/errors.hpp"
#include "senslab/point.hpp"
#include "senslab/rational.hpp"
#include "senslab/rng.hpp"
#include "senslab/truth_table.hpp"

namespace senslab {

/// Largest n for routines that touch all (x, y) pairs.
inline constexpr unsigned kPairwiseCap = 13;

/// Per-bit flip probability delta = p/q, 0 < delta <= 1/2. y ~ N_{1-2delta}(x) keeps each
/// bit with probability 1-2delta and rerandomizes it otherwise.
class NoiseRate {
 public:
  explicit NoiseRate(const Rational& delta) : value_(delta) {
    if (delta <= 0 || delta > Rational(1, 2)) throw ParameterError("noise rate must lie in (0, 1/2]: " + to_string(delta));
    if (numerator(delta) > BigInt(std::uint64_t(1) << 62) || denominator(delta) > BigInt(std::uint64_t(1) << 62)) {
      throw ParameterError("noise rate numerator/denominator too large");
    }
    p_ = numerator(delta).convert_to<std::uint64_t>();
    q_ = denominator(delta).convert_to<std::uint64_t>();
  }
  NoiseRate(std::uint64_t p, std::uint64_t q) : NoiseRate(Rational(BigInt(p), BigInt(q))) {}

  const Rational& value() const { return value_; }
  double as_double() const { return static_cast<double>(p_) / static_cast<double>(q_); }
  /// Correlation rho = 1 - 2 delta.
  double rho() const { return 1.0 - 2.0 * as_double(); }
  std::uint64_t numerator_u64() const { return p_; }
  std::uint64_t denominator_u64() const { return q_; }

 private:
  Rational value_;
  std::uint64_t p_ = 1;
  std::uint64_t q_ = 2;
};

/// Flips each coordinate of x independently with probability exactly delta.
template <class Rng>
Point sample_noisy(Point x, const NoiseRate& delta, Rng& rng) {
  std::uint32_t flips = 0;
  for (unsigned i = 0; i < x.n(); ++i)
    if (uniform_below(rng, delta.denominator_u64()) < delta.numerator_u64()) flips |= std::uint32_t{1} << i;
  return Point(x.n(), x.index() ^ flips);
}

struct RealFunction {
  unsigned n = 1;
  std::vector<double> values;
};

/// In-place unnormalized Walsh-Hadamard transform; applying it twice multiplies by 2^n.
inline void walsh_hadamard(std::span<double> v) {
  for (std::size_t h = 1; h < v.size(); h <<= 1) {
    for (std::size_t i = 0; i < v.size(); i += h << 1) {
      for (std::size_t j = i; j < i + h; ++j) {
        const double a = v[j];
        const double b = v[j + h];
        v[j] = a + b;
        v[j + h] = a - b;
      }
    }
  }
}

/// T_rho g: the character coefficient at S is scaled by rho^{|S|}.
inline RealFunction apply_noise(RealFunction g, double rho) {
  walsh_hadamard(g.values);
  std::vector<double> powers(g.n + 1, 1.0);
  for (unsigned k = 1; k <= g.n; ++k) powers[k] = powers[k - 1] * rho;
  const double scale = 1.0 / static_cast<double>(g.values.size());
  for (std::size_t S = 0; S < g.values.size(); ++S) g.values[S] *= powers[std::popcount(S)] * scale;
  walsh_hadamard(g.values);
  return g;
}

inline RealFunction to_real(const TruthTable& f) {
  RealFunction g{f.n(), std::vector<double>(f.size())};
  for (std::uint64_t x = 0; x < f.size(); ++x) g.values[x] = f[static_cast<std::uint32_t>(x)] ? 1.0 : 0.0;
  return g;
}

/// T_{1-2delta} f(x) = E_{y ~ N_{1-2delta}(x)} f(y), floating point, O(n 2^n).
inline RealFunction noise_operator(const TruthTable& f, const NoiseRate& delta) {
  return apply_noise(to_real(f), delta.rho());
}

namespace detail {

/// Pr[y] for d(x,y) = d is w[d] / denom with w[d] = p^d (q-p)^{n-d}, denom = q^n.
struct NoiseWeights {
  std::vector<BigInt> w;
  BigInt denom;

  NoiseWeights(unsigned n, const NoiseRate& delta) : w(n + 1) {
    const BigInt p = delta.numerator_u64();
    const BigInt keep = delta.denominator_u64() - delta.numerator_u64();
    for (unsigned d = 0; d <= n; ++d) w[d] = pow_big(p, d) * pow_big(keep, n - d);
    denom = pow_big(BigInt(delta.denominator_u64()), n);
  }

  BigInt weigh(std::span<const std::uint64_t> hist) const {
    BigInt total = 0;
    for (std::size_t d = 0; d < hist.size(); ++d)
      if (hist[d] != 0) total += w[d] * hist[d];
    return total;
  }
};

inline std::vector<std::uint64_t> distance_histogram(std::span<const std::uint32_t> members, std::uint32_t x, unsigned n) {
  std::vector<std::uint64_t> hist(n + 1, 0);
  for (auto y : members) ++hist[std::popcount(x ^ y)];
  return hist;
}

}  // namespace detail

/// Exact T_{1-2delta} f(x) by direct summation over f^{-1}(1).
inline Rational noise_operator_exact_at(const TruthTable& f, Point x, const NoiseRate& delta) {
  require_same_dimension(f.n(), x.n(), "noise_operator_exact_at");
  const detail::NoiseWeights weights(f.n(), delta);
  const auto ones = f.ones();
  return Rational(weights.weigh(detail::distance_histogram(ones, x.index(), f.n())), weights.denom);
}

/// Exact T_{1-2delta} f at every point; O(4^n), n <= kPairwiseCap.
inline std::vector<Rational> noise_operator_exact(const TruthTable& f, const NoiseRate& delta) {
  if (f.n() > kPairwiseCap) throw GuardExceeded("exact noise operator is capped at n = " + std::to_string(kPairwiseCap));
  const detail::NoiseWeights weights(f.n(), delta);
  const auto ones = f.ones();
  std::vector<Rational> out;
  out.reserve(f.size());
  for (std::uint64_t x = 0; x < f.size(); ++x) {
    out.emplace_back(weights.weigh(detail::distance_histogram(ones, static_cast<std::uint32_t>(x), f.n())), weights.denom);
  }
  return out;
}

/// Sign of (T_{1-2delta} f(x) - threshold), exactly.
inline int compare_noise_value(const TruthTable& f, Point x, const NoiseRate& delta, const Rational& threshold) {
  const Rational v = noise_operator_exact_at(f, x, delta);
  return v < threshold ? -1 : (v > threshold ? 1 : 0);
}

/// NS_delta[f](x) = Pr_{y ~ N_{1-2delta}(x)}[f(y) != f(x)].
inline Rational noise_sensitivity_at(const TruthTable& f, Point x, const NoiseRate& delta) {
  const Rational t = noise_operator_exact_at(f, x, delta);
  return f.at(x) ? Rational(1) - t : t;
}

/// NS_delta[f] = E_x NS_delta[f](x), exact; n <= kPairwiseCap.
inline Rational noise_sensitivity(const TruthTable& f, const NoiseRate& delta) {
  const auto t = noise_operator_exact(f, delta);
  Rational total = 0;
  for (std::uint64_t x = 0; x < f.size(); ++x) total += f[static_cast<std::uint32_t>(x)] ? Rational(1) - t[x] : t[x];
  return total / Rational(BigInt(f.size()));
}

/// Uniform element of D(x, t): clears a uniform t-subset of the one-coordinates of x.
template <class Rng>
Point downward_sample(Point x, unsigned t, Rng& rng) {
  std::uint32_t positions[32];
  unsigned w = 0;
  for (std::uint32_t m = x.index(); m != 0; m &= m - 1) positions[w++] = static_cast<std::uint32_t>(std::countr_zero(m));
  if (t > w) throw ParameterError("downward_sample: t exceeds wt(x)");
  std::uint32_t cleared = 0;
  for (unsigned i = 0; i < t; ++i) {
    const auto j = i + static_cast<unsigned>(uniform_below(rng, w - i));
    std::swap(positions[i], positions[j]);
    cleared |= std::uint32_t{1} << positions[i];
  }
  return Point(x.n(), x.index() ^ cleared);
}

struct DownwardOptions {
  std::uint64_t max_enumeration = std::uint64_t{1} << 22;
  bool monte_carlo = false;  ///< fall back to sampling above the enumeration guard
  std::uint64_t samples = 10000;
  std::uint64_t seed = 0;
};

struct DownwardEstimate {
  Rational value;
  bool exact = true;
  double std_error = 0.0;  ///< binomial standard error (0 when exact)
};

/// Pr_{y uniform in D(x,t)}[f(y) != f(x)].
inline DownwardEstimate downward_mismatch(const TruthTable& f, Point x, unsigned t, const DownwardOptions& opts = {}) {
  require_same_dimension(f.n(), x.n(), "downward_mismatch");
  const unsigned w = weight(x);
  if (t > w) throw ParameterError("downward_mismatch: t exceeds wt(x)");
  const bool fx = f[x.index()];
  const std::uint64_t total = binomial(w, t);
  if (total <= opts.max_enumeration) {
    std::uint64_t mismatches = 0;
    for_each_k_subset(w, t, [&](std::uint32_t packed) {
      mismatches += f[x.index() ^ deposit_bits(packed, x.index())] != fx;
    });
    return {Rational(BigInt(mismatches), BigInt(total)), true, 0.0};
  }
  if (!opts.monte_carlo) {
    throw GuardExceeded("downward_mismatch: |D(x,t)| = " + std::to_string(total) + " exceeds the enumeration guard");
  }
  SplitMix64 rng(derive_seed(opts.seed, "downward"));
  std::uint64_t hits = 0;
  for (std::uint64_t i = 0; i < opts.samples; ++i) hits += f[downward_sample(x, t, rng).index()] != fx;
  const double p = static_cast<double>(hits) / static_cast<double>(opts.samples);
  return {Rational(BigInt(hits), BigInt(opts.samples)), false, std::sqrt(p * (1 - p) / static_cast<double>(opts.samples))};
}

/// Float values closer than this to a threshold are re-decided on the exact path.
inline constexpr double kBoundaryTolerance = 1e-9;

/// Lambda_{delta,theta}(S) = {x : Pr_{y ~ N_{1-2delta}(x)}[y in S] >= theta}.
inline TruthTable lambda_set(const TruthTable& S, const NoiseRate& delta, const Rational& theta) {
  if (theta <= 0 || theta > 1) throw ParameterError("lambda_set: theta must lie in (0, 1]");
  const auto t = noise_operator(S, delta);
  const double th = to_double(theta);
  TruthTable out(S.n());
  for (std::uint64_t x = 0; x < S.size(); ++x) {
    const double v = t.values[x];
    bool member;
    if (v > th + kBoundaryTolerance) {
      member = true;
    } else if (v < th - kBoundaryTolerance) {
      member = false;
    } else {
      member = compare_noise_value(S, Point(S.n(), static_cast<std::uint32_t>(x)), delta, theta) >= 0;
    }
    if (member) out.set(static_cast<std::uint32_t>(x), true);
  }
  return out;
}

struct HypercontractivityReport {
  Rational mu_S;
  Rational mu_Lambda;
  double rhs = 0.0;  ///< (mu(S) / theta^2)^{1 + 2 delta}
  bool holds = false;
  bool sse_applies = false;  ///< mu(S) <= theta^{4 + 2/delta}
  bool sse_holds = true;     ///< mu(Lambda) <= mu(S)^{1 + delta}, when it applies
  bool high_precision_used = false;
};

/// Checks mu(Lambda_{delta,theta}(S)) <= (mu(S)/theta^2)^{1+2delta}, plus the small-set
/// bound mu(Lambda) <= mu(S)^{1+delta} whenever mu(S) <= theta^{4+2/delta}.
inline HypercontractivityReport hypercontractivity_check(const TruthTable& S, const NoiseRate& delta, const Rational& theta) {
  using HP = boost::multiprecision::cpp_dec_float_50;
  HypercontractivityReport r;
  r.mu_S = dyadic(S.count_ones(), S.n());
  r.mu_Lambda = dyadic(lambda_set(S, delta, theta).count_ones(), S.n());

  const HP mu_s = HP(numerator(r.mu_S).str()) / HP(denominator(r.mu_S).str());
  const HP mu_l = HP(numerator(r.mu_Lambda).str()) / HP(denominator(r.mu_Lambda).str());
  const HP th = HP(numerator(theta).str()) / HP(denominator(theta).str());
  const HP d = HP(numerator(delta.value()).str()) / HP(denominator(delta.value()).str());

  // a <= b with a float pass first and a 50-digit confirmation near the boundary.
  auto at_most = [&](const HP& a, const HP& b) {
    const double diff = b.convert_to<double>() - a.convert_to<double>();
    if (diff > kBoundaryTolerance) return true;
    if (diff < -kBoundaryTolerance) return false;
    r.high_precision_used = true;
    return a <= b;
  };

  const HP rhs = r.mu_S == 0 ? HP(0) : boost::multiprecision::pow(mu_s / (th * th), 1 + 2 * d);
  r.rhs = rhs.convert_to<double>();
  r.holds = at_most(mu_l, rhs);

  const HP small = boost::multiprecision::pow(th, 4 + 2 / d);
  r.sse_applies = r.mu_S == 0 || at_most(mu_s, small);
  if (r.sse_applies) {
    const HP cor = r.mu_S == 0 ? HP(0) : boost::multiprecision::pow(mu_s, 1 + d);
    r.sse_holds = at_most(mu_l, cor);
  }
  return r;
}

}  // namespace senslab
