#include <gtest/gtest.h>

#include "senslab/senslab.hpp"

using namespace senslab;
namespace fam = senslab::families;

TEST(MajorityExtend, TribesFromOrigin) {
  const auto f = fam::tribes(2, 6);
  const auto out = majority_extend(restrict_to_ball(f, Point::zeros(6), 4));
  EXPECT_TRUE(extends_to(out, f));
}

TEST(MajorityExtend, AnyCenterAtTwiceSensitivity) {
  for (std::uint64_t seed = 0; seed < 6; ++seed) {
    const auto f = seed % 2 ? fam::random_dt(2, 8, seed) : fam::random_table(7, seed);
    const unsigned r = r_maj(f);
    for (std::uint32_t c : {0u, 5u, 77u}) {
      const Point x0(f.n(), c & static_cast<std::uint32_t>(f.size() - 1));
      EXPECT_TRUE(extends_to(majority_extend(restrict_to_ball(f, x0, r)), f)) << "seed=" << seed << " center=" << x0.to_bits();
    }
  }
}

TEST(MajorityExtend, OrFromTopFails) {
  const unsigned n = 5;
  const auto f = fam::or_fn(n);
  for (unsigned r = 0; r < n; ++r) {
    EXPECT_FALSE(extends_to(majority_extend(restrict_to_ball(f, Point::ones(n), r)), f)) << "r=" << r;
  }
}

TEST(MajorityExtend, ReportsFirstTie) {
  // From B(11, 1) the two voters of 00 are 01 and 10, which disagree under x_1.
  const auto f = TruthTable(2, 0b1010);  // f = x_1
  const auto out = majority_extend(restrict_to_ball(f, Point::ones(2), 1));
  ASSERT_FALSE(extended(out));
  const auto& fail = std::get<ExtensionFailure>(out);
  EXPECT_EQ(fail.reason, FailureReason::Tie);
  EXPECT_EQ(fail.point, Point::zeros(2));
}

TEST(SphereExtend, Examples) {
  const auto d = fam::dictator(8, 1);
  EXPECT_TRUE(extends_to(sphere_extend(restrict_to_sphere(d, Point::zeros(8), 2), 1), d));
  const auto z = fam::constant(8, false);
  EXPECT_TRUE(extends_to(sphere_extend(restrict_to_sphere(z, Point::zeros(8), 2), 1), z));
  for (std::uint64_t seed = 0; seed < 4; ++seed) {
    const auto f = fam::random_dt(2, 10, seed);
    const unsigned s = std::max(1u, sensitivity(f).s);
    if (4 * s > 10) continue;
    EXPECT_TRUE(extends_to(sphere_extend(restrict_to_sphere(f, Point::from_bits("0110001010"), 2 * s), s), f));
  }
  EXPECT_THROW(sphere_extend(restrict_to_sphere(d, Point::zeros(8), 2), 3), ParameterError);
}

TEST(ParityExtend, Examples) {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const auto f = fam::random_table(6, seed);
    EXPECT_TRUE(parity_extend(restrict_to_ball(f, Point(6, 9), degree(f))).equals(f));
  }
  const auto and2 = fam::and_fn(2);
  const auto g = parity_extend(restrict_to_ball(and2, Point::zeros(2), 1));
  EXPECT_EQ(g.values, (std::vector<std::int64_t>{0, 0, 0, 0}));
  const auto one = fam::constant(5, true);
  EXPECT_TRUE(parity_extend(restrict_to_ball(one, Point(5, 3), 0)).equals(one));
}

TEST(ParityExtend, OutOfRangeIsReported) {
  // The degree-1 extension of OR_2 from B(00, 1) is x_1 + x_2, which is 2 at 11.
  const auto g = parity_extend(restrict_to_ball(fam::or_fn(2), Point::zeros(2), 1));
  EXPECT_EQ(g.values[3], 2);
  const auto out = as_boolean(g);
  ASSERT_FALSE(extended(out));
  EXPECT_EQ(std::get<ExtensionFailure>(out).reason, FailureReason::OutOfRange);
  EXPECT_EQ(std::get<ExtensionFailure>(out).point, Point::ones(2));
}

TEST(F2Extend, Examples) {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const auto f = fam::random_table(4, seed);
    EXPECT_EQ(f2_extend(restrict_to_ball(f, Point::zeros(4), degree_f2(f))), f);
    EXPECT_EQ(f2_extend(restrict_to_ball(f, Point(4, 6), 4)), f);
  }
  const auto p = fam::parity(7);
  EXPECT_EQ(f2_extend(restrict_to_ball(p, Point::zeros(7), 1)), p);
}

TEST(Radii, Examples) {
  for (unsigned n : {3u, 5u}) {
    EXPECT_EQ(r_maj(fam::or_fn(n)), n);
    EXPECT_EQ(r_maj_bruteforce(fam::or_fn(n)), n);
    EXPECT_EQ(r_par_bruteforce(fam::parity(n)), n);
  }
  EXPECT_EQ(r_maj_bruteforce(fam::constant(4, true)), 0u);
  EXPECT_EQ(r_maj(fam::majority(3)), 3u);
  EXPECT_EQ(r_maj_bruteforce(fam::majority(3)), 3u);
  EXPECT_EQ(r_par_bruteforce(fam::and_fn(2)), 2u);
  EXPECT_EQ(r_par_bruteforce(fam::constant(4, false)), 0u);
  EXPECT_THROW(r_maj_bruteforce(fam::parity(11)), GuardExceeded);
}

TEST(Radii, ExhaustiveAtThree) {
  for (std::uint64_t bits = 0; bits < 256; ++bits) {
    const TruthTable f(3, bits);
    EXPECT_EQ(r_maj_bruteforce(f), r_maj(f)) << f.to_string();
    EXPECT_EQ(r_par_bruteforce(f), degree(f)) << f.to_string();
    EXPECT_EQ(r_par_bruteforce(f, CenterScope::OriginOnly), degree(f)) << f.to_string();
  }
}

TEST(Radii, SampledAtSix) {
  EXPECT_TRUE(verify::check_r_maj(6, 40, 1).passed);
  EXPECT_TRUE(verify::check_r_par(6, 40, 1).passed);
}
