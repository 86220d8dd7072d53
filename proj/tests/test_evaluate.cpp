#include <gtest/gtest.h>

#include "senslab/senslab.hpp"

using namespace senslab;
namespace fam = senslab::families;

namespace {

std::vector<std::uint32_t> indices(const std::vector<Point>& pts) {
  std::vector<std::uint32_t> out;
  for (const auto& p : pts) out.push_back(p.index());
  return out;
}

}  // namespace

TEST(MajorityThreshold, OracleValues) {
  // Frozen from tests/oracle/brute_force.py.
  EXPECT_EQ(majority_threshold_c(Rational(0), Rational(1, 20)), 1u);
  EXPECT_EQ(majority_threshold_c(Rational(1, 5), Rational(1, 20)), 7u);
  EXPECT_EQ(majority_threshold_c(Rational(1, 4), Rational(1, 100)), 19u);
  EXPECT_EQ(majority_threshold_c(Rational(1, 4), Rational(1, 20)), 9u);
  EXPECT_EQ(majority_threshold_c(Rational(1, 4), Rational(1, 10)), 7u);
  EXPECT_EQ(majority_threshold_c(Rational(1, 20), Rational(1, 20)), 1u);
  EXPECT_EQ(majority_threshold_c(Rational(1, 20), Rational(499, 10000)), 3u);
  EXPECT_THROW(majority_threshold_c(Rational(1, 2), Rational(1, 20)), ParameterError);
}

TEST(BottomUp, Examples) {
  const auto d = fam::dictator(8, 1);
  const auto advice = restrict_to_ball(d, Point::zeros(8), 2);
  BottomUpEvaluator eval(advice, 1);
  EXPECT_TRUE(eval(Point::ones(8)).value);
  const auto inside = eval(Point::from_bits("10000001"));
  EXPECT_TRUE(inside.value);
  EXPECT_EQ(inside.stats.ball_shifts, 0u);
  EXPECT_EQ(inside.stats.points_computed, 1u);
  const auto far = eval(Point::from_bits("01111111"));
  EXPECT_FALSE(far.value);
  EXPECT_EQ(far.stats.ball_shifts, 5u);
  EXPECT_EQ(far.stats.ball_size, ball_volume(8, 2));
}

TEST(BottomUp, ExhaustiveOnRandomTrees) {
  for (unsigned s = 1; s <= 3; ++s) {
    const auto f = fam::random_dt(s, 12, 40 + s);
    BottomUpEvaluator eval(restrict_to_ball(f, Point::zeros(12), 2 * s), s);
    for (std::uint32_t x = 0; x < f.size(); ++x) ASSERT_EQ(eval(Point(12, x)).value, f[x]) << "s=" << s << " x=" << x;
  }
}

TEST(BottomUp, RejectsBadAdvice) {
  const auto f = fam::dictator(6, 2);
  EXPECT_THROW(BottomUpEvaluator(restrict_to_ball(f, Point::zeros(6), 1), 1), ParameterError);
  EXPECT_THROW(BottomUpEvaluator(restrict_to_ball(f, Point::ones(6), 2), 1), ParameterError);
}

TEST(ColexNeighbors, ClearsHighestOnes) {
  EXPECT_EQ(indices(colex_smallest_lower_neighbors(Point(3, 0b111), 2)), (std::vector<std::uint32_t>{0b011, 0b101}));
  EXPECT_EQ(indices(colex_smallest_lower_neighbors(Point(4, 0b1010), 1)), (std::vector<std::uint32_t>{0b0010}));
  const Point x(6, 0b101101);
  EXPECT_EQ(colex_smallest_lower_neighbors(x, weight(x)), neighborhood(x, Neighborhood::at_weight(weight(x) - 1)));
  EXPECT_THROW(colex_smallest_lower_neighbors(x, 5), ParameterError);
}

TEST(TopDown, MatchesTableAndVisitBound) {
  auto ev = verify::check_evaluators(12, 2, 3, 9);
  EXPECT_TRUE(ev.agreement.passed) << ev.agreement.failure;
  EXPECT_TRUE(ev.revlex.passed) << ev.revlex.failure;
}

TEST(TopDown, VisitBoundAtFourteen) {
  const unsigned n = 14;
  const unsigned s = 2;
  const auto f = fam::random_dt(s, n, 3);
  TopDownEvaluator eval(restrict_to_ball(f, Point::zeros(n), 2 * s), s);
  const auto res = eval(Point::ones(n));
  EXPECT_EQ(res.value, f[Point::ones(n).index()]);
  for (const auto& [k, visits] : res.stats.points_by_weight) {
    EXPECT_GE(k, 2 * s);
    EXPECT_LE(visits, binomial(n - k + 2 * s, n - k)) << "k=" << k;
  }
  const auto leaf = eval(Point::from_bits("11000000000001"));
  EXPECT_EQ(leaf.stats.points_computed, 1u);
}

TEST(Parallel, LeavesAreExact) {
  const auto f = fam::random_dt(1, 12, 2);
  const ParallelEvaluator eval(restrict_to_ball(f, Point::zeros(12), 10), 1);
  EXPECT_EQ(eval.fanout(), 7u);
  for (std::uint32_t x = 0; x < f.size(); ++x) {
    if (std::popcount(x) > 10) continue;
    const auto r = eval(Point(12, x), x);
    ASSERT_EQ(r.value, f[x]);
    ASSERT_EQ(r.stats.max_depth, 0u);
  }
}

TEST(Parallel, ErrorAndDepthOnDictatorAtSixteen) {
  const unsigned n = 16;
  const auto f = fam::dictator(n, 3);
  const ParallelEvaluator eval(restrict_to_ball(f, Point::zeros(n), 10), 1);
  const std::size_t trials = 300;
  const auto st = verify::parallel_point_error(eval, f, Point::from_bits("1111111111110000"), trials, 4);
  EXPECT_LE(st.errors / double(trials), 0.05 + 3 * std::sqrt(0.05 * 0.95 / trials));
  EXPECT_LE(st.max_depth, parallel_depth_bound(1, 12));
}

TEST(Parallel, DeterministicReplay) {
  const auto f = fam::random_dt(1, 14, 6);
  const ParallelEvaluator eval(restrict_to_ball(f, Point::zeros(14), 10), 1);
  const Point x = Point::ones(14);
  const auto a = eval(x, 99);
  const auto b = eval(x, 99);
  EXPECT_EQ(a.value, b.value);
  EXPECT_EQ(a.stats.points_computed, b.stats.points_computed);
  EXPECT_EQ(a.stats.rng_draws, b.stats.rng_draws);
  EXPECT_THROW(ParallelEvaluator(restrict_to_ball(f, Point::zeros(14), 9), 1), ParameterError);
}

TEST(Amplified, TrialCountsAndAgreement) {
  const auto f = fam::random_dt(2, 12, 8);
  const auto advice = restrict_to_ball(f, Point::zeros(12), 12);
  EXPECT_EQ(amplified_eval(advice, 2, Point::ones(12), Rational(1, 20), 1).stats.trials, 1u);
  EXPECT_EQ(amplified_eval(advice, 2, Point::ones(12), Rational(499, 10000), 1).stats.trials, 3u);
  EXPECT_THROW(amplified_eval(advice, 2, Point::ones(12), Rational(1, 10), 1), ParameterError);

  const auto g = fam::random_dt(1, 12, 8);
  const auto adv1 = restrict_to_ball(g, Point::zeros(12), 10);
  const Rational target = Rational(1) / Rational(BigInt(4096));
  for (std::uint32_t x = 0; x < g.size(); ++x) {
    if (std::popcount(x) <= 10) continue;
    EXPECT_EQ(amplified_eval(adv1, 1, Point(12, x), target, 2024).value, g[x]) << x;
  }
}
