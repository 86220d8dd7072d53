#include <gtest/gtest.h>

#include "senslab/senslab.hpp"

using namespace senslab;
namespace fam = senslab::families;

TEST(Census, MatchesBruteForceOracle) {
  // Frozen from tests/oracle/brute_force.py; entry s is |F(s, n)|.
  const std::vector<std::vector<std::uint64_t>> expected = {
      {2, 4}, {2, 6, 16}, {2, 8, 118, 256}, {2, 10, 702, 29030, 65536}};
  for (unsigned n = 1; n <= 4; ++n) {
    const auto c = census(n);
    EXPECT_EQ(c.counts, expected[n - 1]) << "n=" << n;
    EXPECT_TRUE(c.bounds_hold()) << "n=" << n;
    for (unsigned s = 0; s <= n; ++s) EXPECT_EQ(enumerate_class(n, s), expected[n - 1][s]);
  }
  EXPECT_EQ(enumerate_class(2, 1), 6u);
}

TEST(Census, EnumerationGuard) {
  EXPECT_THROW(enumerate_class(5, 1), GuardExceeded);
  EXPECT_THROW(census(6, true), GuardExceeded);
}

TEST(Census, PackedSensitivityMatchesTables) {
  for (std::uint64_t bits = 0; bits < 65536; bits += 97) {
    EXPECT_EQ(max_sensitivity_packed(bits, 4), sensitivity(TruthTable(4, bits)).s);
  }
}

TEST(Census, MembersAreInClass) {
  const auto m = members(3, 1);
  EXPECT_EQ(m.size(), 8u);
  for (auto bits : m) EXPECT_LE(sensitivity(TruthTable(3, bits)).s, 1u);
}

TEST(CountBounds, Examples) {
  const auto full = count_bounds(4, 4);
  EXPECT_EQ(full.upper, BigInt(1) << 16);
  EXPECT_EQ(full.lower_junta, BigInt(1) << 15);
  for (unsigned n : {1u, 5u, 20u}) EXPECT_EQ(count_bounds(n, 0).upper, BigInt(2));
  const auto b = count_bounds(4, 1);
  EXPECT_EQ(b.lower, BigInt(8));
  EXPECT_EQ(b.upper, BigInt(1) << 11);
  EXPECT_EQ(count_bounds(10, 3).lower_addressing, BigInt(8 * 8 * 8 * 8));
  EXPECT_THROW(count_bounds(4, 5), ParameterError);
}

TEST(CountBounds, AddressingTermIsDroppedAtZero) {
  // Taken literally at s = 0 the term is (n+1)^{1/2}, which exceeds |F(0, n)| = 2 for n >= 4.
  const auto b = count_bounds(8, 0);
  EXPECT_EQ(b.lower_addressing, BigInt(0));
  EXPECT_EQ(b.lower, BigInt(1));
  EXPECT_LE(b.lower, BigInt(enumerate_class(4, 0)));
}

TEST(XorSensitivity, Examples) {
  const auto r = xor_sensitivity_check(fam::dictator(6, 1), fam::dictator(6, 2));
  EXPECT_EQ(r.s_xor, 2u);
  EXPECT_TRUE(r.holds);
  const auto same = xor_sensitivity_check(fam::majority(5), fam::majority(5));
  EXPECT_EQ(same.s_xor, 0u);
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    EXPECT_TRUE(xor_sensitivity_check(fam::random_table(7, seed), fam::random_dt(2, 7, seed)).holds);
  }
  EXPECT_THROW(xor_sensitivity_check(fam::parity(3), fam::parity(4)), DimensionMismatch);
}

TEST(Interpolation, SampleSize) {
  EXPECT_EQ(interpolation_sample_size(4, 1), 3u * 4u * 16u);
  EXPECT_EQ(interpolation_sample_size(4, 0), 3u);
}

TEST(Interpolation, Experiments) {
  const auto empty = interpolation_experiment(3, 1, 0, 50, 1);
  EXPECT_EQ(empty.interpolating, 0u);
  const auto all = interpolation_experiment(4, 1, 0, 3, 1, true);
  EXPECT_EQ(all.interpolating, 3u);
  EXPECT_EQ(all.hitting, 3u);
  const auto r = interpolation_experiment(4, 1, interpolation_sample_size(4, 1), 500, 9);
  EXPECT_GE(r.success_fraction(), 0.99);
  EXPECT_TRUE(r.implication_holds);
  EXPECT_TRUE(r.equivalence_holds);
  const auto small = interpolation_experiment(4, 1, 10, 300, 3);
  EXPECT_TRUE(small.implication_holds);
  EXPECT_TRUE(small.equivalence_holds);
  EXPECT_LT(small.success_fraction(), 1.0);
  EXPECT_THROW(interpolation_experiment(5, 1, 10, 1, 1), GuardExceeded);
}

TEST(Interpolation, HittingIsStrongerThanNeeded) {
  // Sample {00, 01, 10} separates the six functions of F(1, 2), but the s = 2 member
  // AND_2 is zero on all three points.
  const InterpolationOracle oracle(2, 1);
  EXPECT_EQ(oracle.class_size(), 6u);
  EXPECT_TRUE(oracle.interpolates(0b0111));
  EXPECT_TRUE(oracle.hits_differences(0b0111));
  EXPECT_FALSE(oracle.hits_double_class(0b0111));
  // Exhaustively at n = 2 and n = 3, hitting implies interpolation and never the converse failure.
  for (unsigned n : {2u, 3u}) {
    const InterpolationOracle o(n, 1);
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << (1u << n)); ++m) {
      if (o.hits_double_class(m)) {
        EXPECT_TRUE(o.interpolates(m));
      }
      EXPECT_EQ(o.interpolates(m), o.hits_differences(m));
    }
  }
}

TEST(Checks, CountingAndCrossMeasures) {
  EXPECT_TRUE(verify::check_counting(3).passed);
  std::vector<TruthTable> tables;
  for (std::uint64_t bits = 0; bits < 256; ++bits) tables.emplace_back(3, bits);
  const auto res = verify::check_cross_measures(tables);
  EXPECT_TRUE(res.passed) << res.failure;
}
