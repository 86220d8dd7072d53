#include <gtest/gtest.h>

#include <cmath>

#include "senslab/senslab.hpp"

using namespace senslab;
namespace fam = senslab::families;

TEST(NoiseRate, Validation) {
  EXPECT_THROW(NoiseRate(Rational(0)), ParameterError);
  EXPECT_THROW(NoiseRate(Rational(3, 5)), ParameterError);
  const NoiseRate d(1, 20);
  EXPECT_DOUBLE_EQ(d.rho(), 0.9);
  EXPECT_EQ(d.numerator_u64(), 1u);
  EXPECT_EQ(d.denominator_u64(), 20u);
}

TEST(SampleNoisy, FlipRates) {
  SplitMix64 rng(1);
  const NoiseRate half(1, 2);
  const int draws = 100000;
  int ones = 0;
  for (int i = 0; i < draws; ++i) ones += sample_noisy(Point(1, 0), half, rng).index();
  const double sigma = std::sqrt(0.25 / draws);
  EXPECT_NEAR(ones / double(draws), 0.5, 3 * sigma);

  const NoiseRate d(1, 10);
  std::uint64_t total = 0;
  for (int i = 0; i < 20000; ++i) total += weight(sample_noisy(Point::zeros(12), d, rng));
  EXPECT_NEAR(total / 20000.0, 1.2, 0.05);
}

TEST(NoiseOperator, WalshHadamardInvolution) {
  const auto f = to_real(fam::random_table(8, 4));
  auto v = f.values;
  walsh_hadamard(v);
  walsh_hadamard(v);
  for (std::size_t i = 0; i < v.size(); ++i) EXPECT_NEAR(v[i] / v.size(), f.values[i], 1e-10);
}

TEST(NoiseOperator, HalfNoiseGivesMean) {
  const auto f = fam::random_table(6, 9);
  const auto t = noise_operator(f, NoiseRate(1, 2));
  const double mean = static_cast<double>(f.count_ones()) / f.size();
  for (double v : t.values) EXPECT_NEAR(v, mean, 1e-12);
}

TEST(NoiseOperator, ParityClosedForm) {
  const unsigned n = 7;
  const auto f = fam::parity(n);
  const NoiseRate d(1, 8);
  const auto t = noise_operator(f, d);
  const double scale = std::pow(1 - 2.0 / 8, n);
  for (std::uint32_t x = 0; x < f.size(); ++x) EXPECT_NEAR(t.values[x], 0.5 + scale * (f[x] - 0.5), 1e-10);
}

TEST(NoiseOperator, FloatAndExactPathsAgree) {
  const auto f = fam::random_table(8, 12);
  const NoiseRate d(3, 40);
  const auto fl = noise_operator(f, d);
  const auto ex = noise_operator_exact(f, d);
  for (std::size_t x = 0; x < f.size(); ++x) EXPECT_NEAR(fl.values[x], to_double(ex[x]), 1e-10);
}

TEST(NoiseOperator, Composition) {
  const auto f = to_real(fam::random_table(9, 2));
  const auto twice = apply_noise(apply_noise(f, 0.8), 0.5);
  const auto once = apply_noise(f, 0.4);
  for (std::size_t x = 0; x < f.values.size(); ++x) EXPECT_NEAR(twice.values[x], once.values[x], 1e-10);
}

TEST(NoiseOperator, ExactValuesFromOracle) {
  // Frozen from tests/oracle/brute_force.py.
  const auto maj = fam::majority(3);
  EXPECT_EQ(noise_operator_exact_at(maj, Point::from_bits("000"), NoiseRate(1, 4)), Rational(5, 32));
  EXPECT_EQ(noise_operator_exact_at(maj, Point::from_bits("100"), NoiseRate(1, 4)), Rational(11, 32));
  EXPECT_EQ(noise_sensitivity_at(fam::tribes(2, 4), Point::ones(4), NoiseRate(1, 10)), Rational(361, 10000));
  EXPECT_THROW(noise_operator_exact(fam::parity(kPairwiseCap + 1), NoiseRate(1, 4)), GuardExceeded);
}

TEST(NoiseSensitivity, Examples) {
  const NoiseRate d(1, 20);
  EXPECT_EQ(noise_sensitivity(fam::constant(6, true), d), Rational(0));
  const auto dict = fam::dictator(6, 1);
  for (std::uint32_t x = 0; x < dict.size(); ++x) EXPECT_EQ(noise_sensitivity_at(dict, Point(6, x), d), Rational(1, 20));
  const auto maj = fam::majority(3);
  for (std::uint32_t x = 0; x < 8; ++x) EXPECT_LT(noise_sensitivity_at(maj, Point(3, x), d), Rational(1, 5));
}

TEST(Downward, Examples) {
  const auto f = fam::random_table(8, 3);
  EXPECT_EQ(downward_mismatch(f, Point::from_bits("11010110"), 0).value, Rational(0));
  const auto orf = fam::or_fn(9);
  for (unsigned t = 0; t < 9; ++t) EXPECT_EQ(downward_mismatch(orf, Point::ones(9), t).value, Rational(0));
  EXPECT_EQ(downward_mismatch(orf, Point::ones(9), 9).value, Rational(1));
  // Frozen from tests/oracle/brute_force.py.
  EXPECT_EQ(downward_mismatch(fam::addressing(2, 4), Point::ones(4), 2).value, Rational(1, 2));
  EXPECT_EQ(downward_mismatch(fam::majority(5), Point::ones(5), 2).value, Rational(0));
  EXPECT_THROW(downward_mismatch(f, Point::from_bits("11000000"), 3), ParameterError);
}

TEST(Downward, GuardAndMonteCarlo) {
  const auto f = fam::dictator(24, 1);
  const Point x = Point::ones(24);
  DownwardOptions opts;
  opts.max_enumeration = 1000;
  EXPECT_THROW(downward_mismatch(f, x, 12, opts), GuardExceeded);
  opts.monte_carlo = true;
  opts.seed = 5;
  const auto est = downward_mismatch(f, x, 12, opts);
  EXPECT_FALSE(est.exact);
  EXPECT_NEAR(to_double(est.value), 0.5, 4 * est.std_error + 1e-3);
}

TEST(Downward, SampleIsUniform) {
  SplitMix64 rng(8);
  const Point x = Point::from_bits("110");
  const int draws = 100000;
  int first = 0;
  for (int i = 0; i < draws; ++i) first += downward_sample(x, 1, rng) == Point::from_bits("010");
  EXPECT_NEAR(first / double(draws), 0.5, 3 * std::sqrt(0.25 / draws));
  EXPECT_EQ(downward_sample(x, 2, rng), Point::zeros(3));
  EXPECT_EQ(downward_sample(x, 0, rng), x);
}

TEST(Downward, BoundOnRandomTrees) {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const auto f = fam::random_dt(2, 9, seed);
    const unsigned s = sensitivity(f).s;
    for (std::uint32_t xi = 0; xi < f.size(); ++xi) {
      const Point x(9, xi);
      const unsigned d = weight(x);
      if (d < s) continue;
      for (unsigned t = 1; t < d; ++t) EXPECT_LE(downward_mismatch(f, x, t).value, Rational(s * t, d - t));
    }
  }
}

TEST(Lambda, Examples) {
  const NoiseRate d(1, 20);
  const unsigned n = 10;
  EXPECT_EQ(lambda_set(TruthTable(n), d, Rational(2, 5)).count_ones(), 0u);
  EXPECT_EQ(lambda_set(TruthTable::constant(n, true), d, Rational(1)).count_ones(), std::uint64_t{1} << n);
  // (19/20)^10 ~ 0.599 >= 2/5 at the point itself; one flip away is far below.
  const auto single = indicator(n, std::vector<std::uint32_t>{37});
  const auto lam = lambda_set(single, d, Rational(2, 5));
  EXPECT_EQ(lam, single);
  const auto rep = hypercontractivity_check(single, d, Rational(2, 5));
  EXPECT_TRUE(rep.holds);
  EXPECT_EQ(rep.mu_Lambda, Rational(1, 1024));
  EXPECT_THROW(lambda_set(single, d, Rational(0)), ParameterError);
}

TEST(Lambda, ExactBoundaryDecision) {
  // T 1_S(0) = 1/2 exactly when S is the upper half-cube and delta = 1/2; the float path
  // lands within tolerance and the exact path includes the boundary point.
  const auto S = fam::dictator(4, 1);
  const auto lam = lambda_set(S, NoiseRate(1, 2), Rational(1, 2));
  EXPECT_EQ(lam.count_ones(), 16u);
}

TEST(Lambda, EmptySetHolds) {
  const auto rep = hypercontractivity_check(TruthTable(8), NoiseRate(1, 20), Rational(2, 5));
  EXPECT_EQ(rep.mu_S, Rational(0));
  EXPECT_EQ(rep.mu_Lambda, Rational(0));
  EXPECT_TRUE(rep.holds);
  EXPECT_TRUE(rep.sse_applies);
  EXPECT_TRUE(rep.sse_holds);
}

TEST(Lambda, RandomSetsAtTwelve) {
  const auto res = verify::check_small_set_expansion(12, 100, Rational(1, 20), {Rational(2, 5)}, 77);
  EXPECT_TRUE(res.passed) << res.failure;
}

TEST(NoiseStability, PointwiseBoundOnCorpus) {
  for (unsigned n : {4u, 7u}) {
    const auto res = verify::check_noise_stability(n, 3);
    EXPECT_TRUE(res.passed) << res.failure;
  }
}
