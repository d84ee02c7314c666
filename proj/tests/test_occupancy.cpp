#include <gtest/gtest.h>

#include <cmath>

#include "collide/error.hpp"
#include "collide/occupancy.hpp"
#include "collide/pmf.hpp"
#include "oracles.hpp"

using namespace collide;

TEST(CollisionPmf, MatchesEnumerationForSmallGrids) {
  for (std::uint64_t n = 1; n <= 4; ++n) {
    for (std::uint64_t b = 0; b <= 8; ++b) {
      const Pmf pmf = collision_pmf(n, b);
      const auto ref = oracle::enumerate_collisions(n, b);
      for (std::uint64_t k = 0; k <= b; ++k) {
        EXPECT_NEAR(pmf.mass(static_cast<std::int64_t>(k)), ref[k], 1e-12) << "n=" << n << " b=" << b << " k=" << k;
      }
    }
  }
}

TEST(CollisionPmf, Examples) {
  const Pmf a = collision_pmf(2, 2);
  EXPECT_DOUBLE_EQ(a.mass(0), 0.5);
  EXPECT_DOUBLE_EQ(a.mass(1), 0.5);
  const Pmf b = collision_pmf(2, 3);
  EXPECT_DOUBLE_EQ(b.mass(1), 0.75);
  EXPECT_DOUBLE_EQ(b.mass(2), 0.25);
  const Pmf c = collision_pmf(1, 5);
  EXPECT_EQ(c.support_min(), 4);
  EXPECT_EQ(c.size(), 1u);
  EXPECT_DOUBLE_EQ(c.mass(4), 1.0);
}

TEST(CollisionPmf, NoCollisionIsFallingFactorial) {
  for (std::uint64_t n = 1; n <= 30; ++n) {
    for (std::uint64_t b = 0; b <= n; ++b) {
      EXPECT_NEAR(collision_pmf(n, b).mass(0), oracle::no_collision_probability(n, b), 1e-12);
    }
  }
}

TEST(CollisionPmf, SupportBounds) {
  for (std::uint64_t n = 1; n <= 50; n += 7) {
    for (std::uint64_t b = 1; b <= 100; b += 9) {
      const Pmf pmf = collision_pmf(n, b);
      EXPECT_GE(pmf.support_min(), static_cast<std::int64_t>(b > n ? b - n : 0));
      EXPECT_LE(pmf.support_max(), static_cast<std::int64_t>(b - 1));
    }
  }
}

TEST(CollisionPmf, ReflectsOccupiedPmf) {
  for (std::uint64_t n = 1; n <= 50; n += 3) {
    for (std::uint64_t b = 0; b <= 100; b += 7) {
      const Pmf c = collision_pmf(n, b);
      const Pmf i = occupied_pmf(n, b);
      for (std::int64_t k = 0; k <= static_cast<std::int64_t>(b); ++k) {
        EXPECT_NEAR(c.mass(k), i.mass(static_cast<std::int64_t>(b) - k), 1e-12) << n << ' ' << b << ' ' << k;
      }
    }
  }
}

TEST(CollisionPmf, RejectsZeroBinsAndHonoursStateCap) {
  EXPECT_THROW(collision_pmf(0, 3), Error);
  try {
    collision_pmf(1000, 100000, DpLimits{1000});
    FAIL() << "expected resource limit";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::resource_limit);
  }
  try {
    balls_needed_pmf(1000, 500, DpLimits{1000});
    FAIL() << "expected resource limit";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::resource_limit);
  }
}

TEST(OccupiedPmf, Examples) {
  const Pmf a = occupied_pmf(2, 2);
  EXPECT_DOUBLE_EQ(a.mass(1), 0.5);
  EXPECT_DOUBLE_EQ(a.mass(2), 0.5);
  EXPECT_DOUBLE_EQ(occupied_pmf(3, 1).mass(1), 1.0);
  EXPECT_NEAR(pmf_mean(occupied_pmf(365, 23)), oracle::occupied_mean(365, 23), 1e-10);
}

TEST(EmptyPmf, ComplementsOccupied) {
  const Pmf i = occupied_pmf(20, 15);
  const Pmf e = empty_pmf(20, 15);
  for (std::int64_t k = 0; k <= 20; ++k) EXPECT_NEAR(e.mass(k), i.mass(20 - k), 1e-15);
  EXPECT_NEAR(pmf_mean(e), expected_empty(20, 15), 1e-12);
}

TEST(BallsNeededPmf, Examples) {
  const Pmf a = balls_needed_pmf(1, 3);
  EXPECT_EQ(a.support_min(), 4);
  EXPECT_DOUBLE_EQ(a.mass(4), 1.0);
  const Pmf b = balls_needed_pmf(2, 1);
  EXPECT_DOUBLE_EQ(b.mass(2), 0.5);
  EXPECT_DOUBLE_EQ(b.mass(3), 0.5);
  EXPECT_EQ(pmf_quantile(balls_needed_pmf(365, 1), 0.5), 23);
}

TEST(BallsNeededPmf, DualityWithCollisionPmf) {
  for (std::uint64_t n = 1; n <= 30; ++n) {
    for (std::uint64_t c = 1; c <= 10; ++c) {
      const Pmf bn = balls_needed_pmf(n, c);
      for (std::uint64_t b = 0; b <= c + n + 2; ++b) {
        const Pmf col = collision_pmf(n, b);
        const double tail = 1.0 - col.cdf(static_cast<std::int64_t>(c) - 1);
        EXPECT_NEAR(bn.cdf(static_cast<std::int64_t>(b)), tail, 1e-12) << n << ' ' << c << ' ' << b;
      }
    }
  }
}

TEST(BallsNeededPmf, SupportBounds) {
  for (std::uint64_t n = 1; n <= 40; n += 3) {
    for (std::uint64_t c = 1; c <= 12; ++c) {
      const Pmf bn = balls_needed_pmf(n, c);
      EXPECT_GE(bn.support_min(), static_cast<std::int64_t>(c + 1));
      EXPECT_LE(bn.support_max(), static_cast<std::int64_t>(c + n));
    }
  }
}

TEST(ExpectedCollisions, Examples) {
  EXPECT_DOUBLE_EQ(expected_collisions(2, 2), 0.5);
  EXPECT_EQ(expected_collisions(17, 0), 0.0);
  EXPECT_NEAR(expected_collisions(365, 23), 23.0 - 365.0 + 365.0 * std::pow(364.0 / 365.0, 23), 1e-12);
  EXPECT_NEAR(expected_collisions(365, 23), pmf_mean(collision_pmf(365, 23)), 1e-10);
  EXPECT_DOUBLE_EQ(expected_collisions(1, 9), 8.0);
}

TEST(ExpectedCollisions, AgreesWithDpAcrossGrid) {
  for (std::uint64_t n : {2u, 5u, 17u, 100u, 1000u}) {
    for (std::uint64_t b : {1u, 2u, 10u, 50u, 300u}) {
      const double dp = pmf_mean(collision_pmf(n, b));
      EXPECT_NEAR(expected_collisions(n, b), dp, 1e-9 * std::max(1.0, dp)) << n << ' ' << b;
    }
  }
}

TEST(ExpectedCollisions, StableForHugeN) {
  // b(b-1)/(2n) dominates when b << n.
  const double n = 1e15;
  const double mu = expected_collisions(1'000'000'000'000'000ULL, 1000);
  EXPECT_NEAR(mu, 1000.0 * 999.0 / (2.0 * n), 1e-18);
  EXPECT_GT(mu, 0.0);
}

TEST(Pmf, MomentsAndQuantiles) {
  EXPECT_DOUBLE_EQ(pmf_moment(Pmf::point_mass(4), 1), 4.0);
  const Pmf uniform01(0, {0.5, 0.5});
  EXPECT_DOUBLE_EQ(pmf_moment(uniform01, 2, 0.5), 0.25);
  EXPECT_DOUBLE_EQ(pmf_moment(collision_pmf(2, 2), 1), 0.5);
  EXPECT_EQ(pmf_quantile(Pmf::point_mass(7), 0.5), 7);
  EXPECT_EQ(pmf_quantile(Pmf(1, {0.5, 0.5}), 0.5), 1);
  EXPECT_THROW(pmf_quantile(uniform01, 0.0), Error);
  EXPECT_THROW(pmf_quantile(uniform01, 1.5), Error);
}

TEST(Pmf, ValidationAndJsonRoundTrip) {
  EXPECT_THROW(Pmf(0, {0.5, 0.4}), Error);
  EXPECT_THROW(Pmf(0, {1.5, -0.5}), Error);
  const Pmf p = balls_needed_pmf(10, 2);
  const Pmf q = Pmf::from_json(p.to_json());
  ASSERT_EQ(q.support_min(), p.support_min());
  ASSERT_EQ(q.size(), p.size());
  for (std::size_t k = 0; k < p.size(); ++k) EXPECT_EQ(q.masses()[k], p.masses()[k]);
  EXPECT_THROW(Pmf::from_json("{\"masses\": [1]}"), Error);
}

TEST(Pmf, EmpiricalDistribution) {
  const std::int64_t threes[] = {3, 3, 3};
  const Pmf a = empirical_distribution(threes);
  EXPECT_EQ(a.support_min(), 3);
  EXPECT_DOUBLE_EQ(a.mass(3), 1.0);
  const std::int64_t zo[] = {0, 1};
  const Pmf b = empirical_distribution(zo);
  EXPECT_DOUBLE_EQ(b.mass(0), 0.5);
  EXPECT_DOUBLE_EQ(b.mass(1), 0.5);
  EXPECT_NEAR(total_variation(a, b), 1.0, 1e-15);
  EXPECT_NEAR(total_variation(b, b), 0.0, 1e-15);
}

TEST(Pmf, RowNormalisationDriftIsTiny) {
  const Pmf p = collision_pmf(5000, 20000);
  double s = 0.0;
  for (double m : p.masses()) s += m;
  EXPECT_NEAR(s, 1.0, 1e-10);
}
