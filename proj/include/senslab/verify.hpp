#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <sstream>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "senslab/ball_advice.hpp"
#include "senslab/binomial.hpp"
#include "senslab/corpus.hpp"
#include "senslab/counting.hpp"
#include "senslab/evaluate.hpp"
#include "senslab/families.hpp"
#include "senslab/measures.hpp"
#include "senslab/noise.hpp"
#include "senslab/reconstruct.hpp"
#include "senslab/selfcorrect.hpp"

namespace senslab::verify {

struct CheckResult {
  std::string name;
  bool passed = true;
  std::string failure;  ///< first offending instance
  std::vector<std::pair<std::string, double>> metrics;

  void fail(const std::string& what) {
    if (passed) failure = what;
    passed = false;
  }
  void metric(const std::string& key, double value) { metrics.emplace_back(key, value); }
};

namespace detail {

inline std::string describe(const TruthTable& f) {
  std::ostringstream out;
  out << "n=" << f.n() << " f=" << (f.n() <= 6 ? f.to_string() : std::string("<") + std::to_string(f.size()) + " bits, " + std::to_string(f.count_ones()) + " ones>");
  return out.str();
}

inline std::string describe(const TruthTable& f, Point x) { return describe(f) + " x=" + x.to_bits(); }

/// Runs body(i) for i in [0, count) on up to hardware_concurrency threads.
inline void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body) {
  const std::size_t workers = std::min<std::size_t>(count, std::max(1u, std::thread::hardware_concurrency()));
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::vector<std::thread> pool;
  for (std::size_t w = 0; w < workers; ++w)
    pool.emplace_back([&, w] {
      for (std::size_t i = w; i < count; i += workers) body(i);
    });
  for (auto& t : pool) t.join();
}

/// All tables when n <= 4, otherwise `samples` seeded tables mixing random and low-sensitivity ones.
inline std::vector<TruthTable> test_tables(unsigned n, std::size_t samples, std::uint64_t seed) {
  std::vector<TruthTable> out;
  if (n <= 4) {
    const std::uint64_t total = std::uint64_t{1} << (1u << n);
    for (std::uint64_t bits = 0; bits < total; ++bits) out.emplace_back(n, bits);
    return out;
  }
  for (std::size_t i = 0; i < samples; ++i) {
    const auto sd = derive_seed(seed, i);
    switch (i % 4) {
      case 0: out.push_back(families::random_table(n, sd)); break;
      case 1: out.push_back(families::random_dt(1 + static_cast<unsigned>(i / 4 % 3), n, sd)); break;
      case 2: out.push_back(families::junta_lift(families::random_table(std::min(n, 3u), sd), n)); break;
      default: out.push_back(families::random_dt(std::min(n, 2u + static_cast<unsigned>(i / 4 % 3)), n, sd)); break;
    }
  }
  return out;
}

}  // namespace detail

/// Majority rule from radius min(2 s(f), n) around every center reproduces f.
inline CheckResult check_ball_recovery(unsigned n, std::size_t samples, std::uint64_t seed) {
  CheckResult res{"ball-recovery", true, {}, {}};
  const auto tables = detail::test_tables(n, samples, seed);
  std::uint64_t cases = 0;
  for (const auto& f : tables) {
    const unsigned r = r_maj(f);
    // Every center up to n = 6, then 32 seeded centers per function.
    const std::uint64_t centers = n <= 6 ? f.size() : 32;
    SplitMix64 rng(derive_seed(seed, "ball-centers"));
    for (std::uint64_t c = 0; c < centers; ++c) {
      const Point x0(n, static_cast<std::uint32_t>(n <= 6 ? c : uniform_below(rng, f.size())));
      ++cases;
      if (!extends_to(majority_extend(restrict_to_ball(f, x0, r)), f)) {
        res.fail(detail::describe(f) + " center=" + x0.to_bits() + " radius=" + std::to_string(r));
        return res;
      }
    }
  }
  res.metric("functions", static_cast<double>(tables.size()));
  res.metric("cases", static_cast<double>(cases));
  return res;
}

/// Brute-force r^Maj equals min(2 s(f), n).
inline CheckResult check_r_maj(unsigned n, std::size_t samples, std::uint64_t seed) {
  CheckResult res{"r-maj", true, {}, {}};
  const auto tables = detail::test_tables(n, samples, seed);
  for (const auto& f : tables) {
    const unsigned brute = r_maj_bruteforce(f);
    if (brute != r_maj(f)) {
      res.fail(detail::describe(f) + " brute=" + std::to_string(brute) + " formula=" + std::to_string(r_maj(f)));
      return res;
    }
  }
  res.metric("functions", static_cast<double>(tables.size()));
  return res;
}

/// Brute-force r^Par equals deg(f), from every center and from the origin alone.
inline CheckResult check_r_par(unsigned n, std::size_t samples, std::uint64_t seed) {
  CheckResult res{"r-par", true, {}, {}};
  const auto tables = detail::test_tables(n, samples, seed);
  for (const auto& f : tables) {
    const unsigned all = r_par_bruteforce(f, CenterScope::All);
    const unsigned origin = r_par_bruteforce(f, CenterScope::OriginOnly);
    const unsigned deg = degree(f);
    if (all != deg || origin != deg) {
      res.fail(detail::describe(f) + " all-centers=" + std::to_string(all) + " origin=" + std::to_string(origin) +
               " deg=" + std::to_string(deg));
      return res;
    }
  }
  res.metric("functions", static_cast<double>(tables.size()));
  return res;
}

struct EvaluatorCheck {
  CheckResult agreement;
  CheckResult revlex;
};

/// Bottom-Up and Top-Down against the table on every input of `count` random depth-s trees,
/// plus the per-weight visit bound C(d-k+2s, d-k) for every Top-Down run.
inline EvaluatorCheck check_evaluators(unsigned n, unsigned s, std::size_t count, std::uint64_t seed) {
  EvaluatorCheck out{{"evaluator-agreement", true, {}, {}}, {"top-down-visit-bound", true, {}, {}}};
  std::uint64_t inputs = 0;
  std::uint64_t max_visits = 0;
  for (std::size_t i = 0; i < count && out.agreement.passed && out.revlex.passed; ++i) {
    const auto f = families::random_dt(s, n, derive_seed(seed, i));
    const auto advice = restrict_to_ball(f, Point(n, 0), std::min(2 * s, n));
    BottomUpEvaluator bottom_up(advice, s);
    TopDownEvaluator top_down(advice, s);
    for (std::uint64_t xi = 0; xi < f.size(); ++xi) {
      const Point x(n, static_cast<std::uint32_t>(xi));
      const bool truth = f[x.index()];
      const auto bu = bottom_up(x);
      const auto td = top_down(x);
      ++inputs;
      if (bu.value != truth || td.value != truth) {
        out.agreement.fail(detail::describe(f, x) + " s=" + std::to_string(s) + " bottom-up=" + std::to_string(bu.value) +
                           " top-down=" + std::to_string(td.value) + " truth=" + std::to_string(truth));
        break;
      }
      const unsigned d = weight(x);
      for (const auto& [k, visits] : td.stats.points_by_weight) {
        max_visits = std::max<std::uint64_t>(max_visits, visits);
        const bool in_range = k <= d && (k >= 2 * s || k == d);
        const std::uint64_t bound = in_range ? binomial(d - k + 2 * s, d - k) : 0;
        if (visits > bound) {
          out.revlex.fail(detail::describe(f, x) + " s=" + std::to_string(s) + " weight=" + std::to_string(k) +
                          " visits=" + std::to_string(visits) + " bound=" + std::to_string(bound));
          break;
        }
      }
    }
  }
  out.agreement.metric("inputs", static_cast<double>(inputs));
  out.revlex.metric("max_visits_per_weight", static_cast<double>(max_visits));
  return out;
}

struct ParallelPointStats {
  std::uint32_t x = 0;
  std::uint64_t errors = 0;
  unsigned max_depth = 0;
};

/// Empirical per-point error of parallel_eval over `trials` seeded runs.
inline ParallelPointStats parallel_point_error(const ParallelEvaluator& eval, const TruthTable& f, Point x, std::size_t trials,
                                               std::uint64_t seed) {
  std::vector<std::uint8_t> wrong(trials, 0);
  std::vector<unsigned> depth(trials, 0);
  detail::parallel_for(trials, [&](std::size_t t) {
    const auto r = eval(x, derive_seed(seed, t));
    wrong[t] = r.value != f[x.index()];
    depth[t] = r.stats.max_depth;
  });
  ParallelPointStats st{x.index(), 0, 0};
  for (std::size_t t = 0; t < trials; ++t) {
    st.errors += wrong[t];
    st.max_depth = std::max(st.max_depth, depth[t]);
  }
  return st;
}

/// Points used for the parallel error check: 1^n plus `per_weight` seeded points at each weight above 10s.
inline std::vector<Point> parallel_test_points(unsigned n, unsigned s, unsigned per_weight, std::uint64_t seed) {
  std::vector<Point> pts{Point::ones(n)};
  SplitMix64 rng(derive_seed(seed, "parallel-points"));
  for (unsigned w = 10 * s + 1; w < n; ++w) {
    for (unsigned j = 0; j < per_weight; ++j) pts.push_back(downward_sample(Point::ones(n), n - w, rng));
  }
  if (10 * s >= n) {
    // Every point lies in the advice ball; sample a few anyway.
    for (unsigned j = 0; j < per_weight; ++j) pts.emplace_back(n, static_cast<std::uint32_t>(uniform_below(rng, std::uint64_t{1} << n)));
  }
  return pts;
}

/// Per-point error of parallel_eval is at most 1/20 + 3 sigma, and the recursion depth stays
/// within ceil(25 s ln d) + 1.
inline CheckResult check_parallel(unsigned n, unsigned max_s, std::size_t functions, std::size_t trials, unsigned per_weight,
                                  std::uint64_t seed) {
  CheckResult res{"parallel-error", true, {}, {}};
  const auto corpus = low_sensitivity_corpus(n, max_s, functions, seed);
  const double sigma = std::sqrt(0.05 * 0.95 / static_cast<double>(trials));
  const double limit = 0.05 + 3 * sigma;
  double worst = 0;
  std::uint64_t points = 0;
  for (const auto& [name, f] : corpus) {
    const unsigned s = std::max(1u, sensitivity(f).s);
    const auto advice = restrict_to_ball(f, Point(n, 0), std::min(10 * s, n));
    const ParallelEvaluator eval(advice, s);
    for (const Point& x : parallel_test_points(n, s, per_weight, derive_seed(seed, name))) {
      const auto st = parallel_point_error(eval, f, x, trials, derive_seed(seed, name + "/" + x.to_bits()));
      const double rate = static_cast<double>(st.errors) / static_cast<double>(trials);
      worst = std::max(worst, rate);
      ++points;
      if (rate > limit) res.fail(name + " x=" + x.to_bits() + " error=" + std::to_string(rate));
      if (st.max_depth > parallel_depth_bound(s, weight(x))) {
        res.fail(name + " x=" + x.to_bits() + " depth=" + std::to_string(st.max_depth));
      }
    }
  }
  res.metric("functions", static_cast<double>(corpus.size()));
  res.metric("points", static_cast<double>(points));
  res.metric("worst_error", worst);
  res.metric("limit", limit);
  return res;
}

/// Exact NS_delta[f](x) < 2 delta s at every x for delta in {1/(20s), 1/(4s)}.
inline CheckResult check_noise_stability(unsigned n, std::uint64_t seed) {
  CheckResult res{"noise-stability", true, {}, {}};
  std::uint64_t cases = 0;
  for (const auto& [name, f] : standard_corpus(n, seed)) {
    const unsigned s = sensitivity(f).s;
    if (s == 0) {
      if (noise_sensitivity(f, NoiseRate(1, 20)) != 0) res.fail(name + " constant with nonzero noise sensitivity");
      continue;
    }
    for (const Rational& delta : {Rational(1, 20 * s), Rational(1, 4 * s)}) {
      const NoiseRate rate(delta);
      const auto t = noise_operator_exact(f, rate);
      const Rational bound = 2 * delta * s;
      for (std::uint64_t x = 0; x < f.size(); ++x) {
        const Rational ns = f[static_cast<std::uint32_t>(x)] ? Rational(1) - t[x] : t[x];
        ++cases;
        if (!(ns < bound)) {
          res.fail(name + " " + detail::describe(f, Point(n, static_cast<std::uint32_t>(x))) + " delta=" + to_string(delta) +
                   " ns=" + to_string(ns));
          return res;
        }
      }
    }
  }
  res.metric("cases", static_cast<double>(cases));
  return res;
}

/// Exact downward mismatch at most st/(d-t) for every x with d = wt(x) >= s and 1 <= t < d.
inline CheckResult check_downward(unsigned n, std::uint64_t seed) {
  CheckResult res{"downward-mismatch", true, {}, {}};
  std::uint64_t cases = 0;
  for (const auto& [name, f] : standard_corpus(n, seed)) {
    const unsigned s = sensitivity(f).s;
    for (std::uint64_t xi = 0; xi < f.size(); ++xi) {
      const Point x(n, static_cast<std::uint32_t>(xi));
      const unsigned d = weight(x);
      if (d < s) continue;
      for (unsigned t = 1; t < d; ++t) {
        const Rational p = downward_mismatch(f, x, t).value;
        ++cases;
        if (p > Rational(s * t, d - t)) {
          res.fail(name + " " + detail::describe(f, x) + " t=" + std::to_string(t) + " mismatch=" + to_string(p));
          return res;
        }
      }
    }
  }
  res.metric("cases", static_cast<double>(cases));
  return res;
}

/// mu(Lambda_{delta,theta}(S)) <= (mu(S)/theta^2)^{1+2delta} and the small-set bound
/// on random sets of log-uniform size.
inline CheckResult check_small_set_expansion(unsigned n, std::size_t sets, const Rational& delta,
                                             const std::vector<Rational>& thetas, std::uint64_t seed) {
  CheckResult res{"small-set-expansion", true, {}, {}};
  const NoiseRate rate(delta);
  std::uint64_t high_precision = 0;
  std::uint64_t sse_cases = 0;
  for (std::size_t i = 0; i < sets; ++i) {
    SplitMix64 rng(derive_seed(seed, i));
    const auto log_size = static_cast<unsigned>(uniform_below(rng, n));
    const std::uint64_t size = (std::uint64_t{1} << log_size) + uniform_below(rng, std::uint64_t{1} << log_size);
    const auto S = corrupt(TruthTable(n), dyadic(std::min<std::uint64_t>(size, std::uint64_t{1} << n), n), rng()).r;
    for (const auto& theta : thetas) {
      const auto rep = hypercontractivity_check(S, rate, theta);
      high_precision += rep.high_precision_used;
      sse_cases += rep.sse_applies;
      if (!rep.holds || !rep.sse_holds) {
        res.fail("n=" + std::to_string(n) + " |S|=" + std::to_string(S.count_ones()) + " theta=" + to_string(theta) +
                 " mu(Lambda)=" + to_string(rep.mu_Lambda) + " rhs=" + std::to_string(rep.rhs));
        return res;
      }
    }
  }
  res.metric("sets", static_cast<double>(sets));
  res.metric("sse_cases", static_cast<double>(sse_cases));
  res.metric("high_precision_comparisons", static_cast<double>(high_precision));
  return res;
}

struct GlobalCheck {
  CheckResult recovery;
  CheckResult containment;
};

/// Random depth-s trees with floor(2^{-6s} 2^n) uniformly corrupted points, corrected with
/// k = ceil(4 s log2(n/s)) at delta = 1/(20s).
inline GlobalCheck check_global_correction(unsigned n, const std::vector<unsigned>& depths, std::size_t per_depth,
                                           std::uint64_t seed, std::optional<Rational> delta_override = std::nullopt) {
  GlobalCheck out{{"global-recovery", true, {}, {}}, {"global-containment", true, {}, {}}};
  std::uint64_t runs = 0;
  std::uint64_t recovered = 0;
  std::uint64_t steps = 0;
  for (unsigned s : depths) {
    for (std::size_t i = 0; i < per_depth; ++i) {
      const auto sd = derive_seed(seed, "global-" + std::to_string(s) + "-" + std::to_string(i));
      const auto f = families::random_dt(s, n, sd);
      const auto c = corrupt(f, Rational(1) / Rational(BigInt(1) << (6 * s)), derive_seed(sd, "corrupt"));
      CorrectorParams params;
      params.s = s;
      params.delta = delta_override;
      const auto g = global_correct(c.r, params, &f);
      ++runs;
      steps += g.iterations;
      if (g.recovered) {
        ++recovered;
      } else {
        std::ostringstream trace;
        for (auto e : g.trace) trace << ' ' << e;
        out.recovery.fail(detail::describe(f) + " s=" + std::to_string(s) + " corrupted=" +
                          std::to_string(c.oracle.corrupted().count_ones()) + " trace:" + trace.str() +
                          (g.fixpoint ? " (fixpoint)" : ""));
      }
      if (!g.containment_holds) out.containment.fail(detail::describe(f) + " s=" + std::to_string(s));
    }
  }
  out.recovery.metric("runs", static_cast<double>(runs));
  out.recovery.metric("recovered", static_cast<double>(recovered));
  out.containment.metric("changing_steps", static_cast<double>(steps));
  return out;
}

struct LocalCheck {
  CheckResult clean;
  CheckResult adversarial;
  CheckResult queries;
};

/// Clean-oracle failure rate, adversarial single-point recovery on a dictator, and exact
/// c^k query accounting.
inline LocalCheck check_local_correction(unsigned n, unsigned k, const Rational& epsilon, std::size_t trials, std::uint64_t seed) {
  LocalCheck out{{"local-clean", true, {}, {}}, {"local-adversarial", true, {}, {}}, {"local-query-count", true, {}, {}}};
  CorrectorParams params;
  params.s = 1;
  params.k = k;
  params.epsilon = epsilon;
  const unsigned c = majority_threshold_c(Rational(1, 4), epsilon);
  const std::uint64_t expected_queries = local_query_count(c, k);
  const double eps = to_double(epsilon);
  const double limit = eps + 3 * std::sqrt(eps * (1 - eps) / static_cast<double>(trials));

  const auto f = families::dictator(n, 1);
  const Point x = Point::ones(n);
  const auto clean = corrupt_points(f, std::vector<std::uint32_t>{});
  const auto adversarial = corrupt_points(f, std::vector<std::uint32_t>{x.index()});

  auto run = [&](const Corruption& oracle_src, const char* tag, std::uint64_t& wrong, bool& counts_ok) {
    std::vector<std::uint8_t> bad(trials, 0);
    std::vector<std::uint8_t> count_ok(trials, 1);
    detail::parallel_for(trials, [&](std::size_t t) {
      const CorruptedOracle oracle = oracle_src.oracle;
      const auto r = local_correct(oracle, x, params, derive_seed(seed, std::string(tag) + std::to_string(t)));
      bad[t] = r.value != f[x.index()];
      count_ok[t] = r.queries == expected_queries && oracle.query_count() == expected_queries;
    });
    for (std::size_t t = 0; t < trials; ++t) {
      wrong += bad[t];
      counts_ok = counts_ok && count_ok[t];
    }
  };

  std::uint64_t clean_wrong = 0;
  std::uint64_t adv_wrong = 0;
  bool counts_ok = true;
  run(clean, "clean-", clean_wrong, counts_ok);
  run(adversarial, "adv-", adv_wrong, counts_ok);

  const double clean_rate = static_cast<double>(clean_wrong) / static_cast<double>(trials);
  const double recovery = 1.0 - static_cast<double>(adv_wrong) / static_cast<double>(trials);
  out.clean.metric("failure_rate", clean_rate);
  out.clean.metric("limit", limit);
  if (clean_rate > limit) out.clean.fail("clean failure rate " + std::to_string(clean_rate));
  out.adversarial.metric("recovery_rate", recovery);
  if (recovery < 0.99) out.adversarial.fail("recovery rate " + std::to_string(recovery));
  out.queries.metric("c", c);
  out.queries.metric("k", k);
  out.queries.metric("queries_per_trial", static_cast<double>(expected_queries));
  if (!counts_ok) out.queries.fail("query count differs from c^k");
  return out;
}

/// Census bounds at every n up to max_n.
inline CheckResult check_counting(unsigned max_n) {
  CheckResult res{"counting-bounds", true, {}, {}};
  for (unsigned n = 1; n <= max_n; ++n) {
    const auto c = census(n);
    for (unsigned s = 0; s <= n; ++s) {
      const auto& b = c.bounds[s];
      if (b.lower > c.counts[s] || BigInt(c.counts[s]) > b.upper) {
        res.fail("n=" + std::to_string(n) + " s=" + std::to_string(s) + " count=" + std::to_string(c.counts[s]) +
                 " lower=" + b.lower.str() + " upper=" + b.upper.str());
        return res;
      }
    }
    res.metric("count_n" + std::to_string(n) + "_s1", static_cast<double>(c.counts[std::min(1u, n)]));
  }
  return res;
}

/// s(f) <= 4 deg(f)^2 and |relevant(f)| <= s 4^s.
inline CheckResult check_cross_measures(const std::vector<TruthTable>& tables) {
  CheckResult res{"cross-measures", true, {}, {}};
  for (const auto& f : tables) {
    const unsigned s = sensitivity(f).s;
    const unsigned deg = degree(f);
    const auto relevant = relevant_variables(f).size();
    if (s > 4 * deg * deg || relevant > s * (std::uint64_t{1} << (2 * s))) {
      res.fail(detail::describe(f) + " s=" + std::to_string(s) + " deg=" + std::to_string(deg) +
               " relevant=" + std::to_string(relevant));
      return res;
    }
  }
  res.metric("functions", static_cast<double>(tables.size()));
  return res;
}

/// Interpolation sampling: hitting F(2s, n) implies interpolating F(s, n), and interpolation
/// agrees with hitting every nonzero difference.
inline CheckResult check_interpolation(unsigned n, unsigned s, std::size_t trials, std::uint64_t seed) {
  CheckResult res{"interpolation", true, {}, {}};
  const auto k = interpolation_sample_size(n, s);
  const auto rep = interpolation_experiment(n, s, k, trials, seed);
  res.metric("k", static_cast<double>(k));
  res.metric("success_fraction", rep.success_fraction());
  res.metric("hit_fraction", rep.hit_fraction());
  if (!rep.implication_holds) res.fail("a sample hit F(2s,n) without interpolating F(s,n)");
  if (!rep.equivalence_holds) res.fail("interpolation disagreed with hitting the difference set");
  return res;
}

inline std::vector<std::string> suite_names() { return {"ball", "rules", "evaluators", "noise", "selfcorrect", "counting", "all"}; }

/// Runs one named suite at dimension n.
inline std::vector<CheckResult> run_suite(const std::string& suite, unsigned n, std::uint64_t seed) {
  std::vector<CheckResult> out;
  const bool all = suite == "all";
  const std::size_t samples = 200;
  if (all || suite == "ball") out.push_back(check_ball_recovery(n, samples, seed));
  if (all || suite == "rules") {
    if (n > kBruteForceRadiusCap) throw GuardExceeded("rules suite is capped at n = 10");
    out.push_back(check_r_maj(n, samples, seed));
    out.push_back(check_r_par(n, samples, seed));
  }
  if (all || suite == "evaluators") {
    for (unsigned s = 1; s <= std::min(3u, n); ++s) {
      auto ev = check_evaluators(n, s, 10, derive_seed(seed, s));
      ev.agreement.name += "-s" + std::to_string(s);
      ev.revlex.name += "-s" + std::to_string(s);
      out.push_back(std::move(ev.agreement));
      out.push_back(std::move(ev.revlex));
    }
  }
  if (all || suite == "noise") {
    if (n > kPairwiseCap) throw GuardExceeded("noise suite is capped at n = 13");
    out.push_back(check_noise_stability(n, seed));
    out.push_back(check_downward(n, seed));
    out.push_back(check_small_set_expansion(n, 50, Rational(1, 20), {Rational(2, 5), Rational(1, 10)}, seed));
  }
  if (all || suite == "selfcorrect") {
    if (n > kPairwiseCap) throw GuardExceeded("selfcorrect suite is capped at n = 13");
    // Property checks that hold at any scale: fixpoints and containment.
    CheckResult fix{"majority-step-fixpoint", true, {}, {}};
    for (const auto& [name, f] : standard_corpus(n, seed)) {
      const unsigned s = sensitivity(f).s;
      if (s == 0) continue;
      const auto step = majority_step(f, NoiseRate(Rational(1, 20 * s)));
      if (!(step.table == f)) fix.fail(name + " " + detail::describe(f));
    }
    out.push_back(std::move(fix));
    auto g = check_global_correction(n, {1, 2}, 3, seed);
    out.push_back(std::move(g.containment));
  }
  if (all || suite == "counting") {
    out.push_back(check_counting(std::min(n, kEnumerationCap)));
    if (n <= kEnumerationCap) out.push_back(check_interpolation(n, 1, 20, seed));
  }
  if (out.empty()) throw ParameterError("unknown suite '" + suite + "'");
  return out;
}

}  // namespace senslab::verify
