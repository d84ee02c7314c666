#include <gtest/gtest.h>

#include <cmath>
#include <set>

#include "collide/embedding.hpp"
#include "collide/error.hpp"
#include "collide/occupancy.hpp"
#include "collide/pmf.hpp"
#include "collide/random.hpp"
#include "collide/simulate.hpp"
#include "collide/stats.hpp"
#include "oracles.hpp"

using namespace collide;

TEST(Rng, DeterministicPerSeedAndStream) {
  Rng a(Seed{5, 0}), b(Seed{5, 0}), c(Seed{5, 1}), d(Seed{6, 0});
  bool differs_stream = false, differs_seed = false;
  for (int k = 0; k < 100; ++k) {
    const auto x = a.next();
    EXPECT_EQ(x, b.next());
    differs_stream |= x != c.next();
    differs_seed |= x != d.next();
  }
  EXPECT_TRUE(differs_stream);
  EXPECT_TRUE(differs_seed);
}

TEST(Rng, UniformIsOpenAndBelowIsInRange) {
  Rng rng(Seed{1, 2});
  for (int k = 0; k < 100000; ++k) {
    const double u = rng.uniform();
    ASSERT_GT(u, 0.0);
    ASSERT_LT(u, 1.0);
    ASSERT_LT(rng.below(7), 7u);
  }
  EXPECT_EQ(rng.below(1), 0u);
}

TEST(Rng, BelowIsUniform) {
  Rng rng(Seed{9, 9});
  std::vector<std::int64_t> draws(60000);
  for (auto& d : draws) d = static_cast<std::int64_t>(rng.below(6));
  const ChiSquaredResult r = chi_squared_gof(draws, Pmf(0, std::vector<double>(6, 1.0 / 6.0)));
  EXPECT_GT(r.p_value, 1e-3);
}

TEST(Arrivals, SameSeedSameSequence) {
  const ArrivalSequence a = sample_arrivals(Seed{42, 3}, 50);
  const ArrivalSequence b = sample_arrivals(Seed{42, 3}, 50);
  ASSERT_EQ(a.size(), 50u);
  for (std::size_t k = 0; k < a.size(); ++k) EXPECT_EQ(a[k], b[k]);
}

TEST(Arrivals, GammaMeans) {
  Rng rng(Seed{3, 0});
  double s1 = 0.0, s5 = 0.0;
  const int m = 1'000'000;
  for (int k = 0; k < m; ++k) {
    const ArrivalSequence a = sample_arrivals(rng, 5);
    s1 += a[0];
    s5 += a[4] / 5.0;
  }
  EXPECT_NEAR(s1 / m, 1.0, 0.01);
  EXPECT_NEAR(s5 / m, 1.0, 0.01);
}

TEST(Throws, Examples) {
  const Trajectory t = simulate_throws(Seed{1, 0}, 1, StopRule::at_collisions(4));
  EXPECT_EQ(t.balls, 5u);
  ASSERT_EQ(t.first_passages.size(), 4u);
  for (std::uint64_t c = 1; c <= 4; ++c) EXPECT_EQ(t.first_passages[c - 1], c + 1);

  const Trajectory e = simulate_throws(Seed{1, 0}, 5, StopRule::after_balls(0));
  EXPECT_EQ(e.occupied, 0u);
  EXPECT_EQ(e.collisions, 0u);
  EXPECT_EQ(e.empty(), 5u);
  EXPECT_THROW(simulate_throws(Seed{1, 0}, 0, StopRule::after_balls(1)), Error);
}

TEST(Throws, BookkeepingIdentities) {
  Rng rng(Seed{8, 8});
  ThrowSimulator sim(37);
  for (int rep = 0; rep < 2000; ++rep) {
    const bool by_c = rep % 2 == 0;
    const Trajectory t = sim.run(rng, by_c ? StopRule::at_collisions(1 + rng.below(30))
                                          : StopRule::after_balls(rng.below(150)));
    std::uint64_t bins = 0, balls = 0;
    for (std::size_t k = 0; k < t.occupancy.size(); ++k) {
      bins += t.occupancy[k];
      balls += k * t.occupancy[k];
    }
    ASSERT_EQ(bins, 37u);
    ASSERT_EQ(balls, t.balls);
    ASSERT_EQ(t.collisions, t.balls - t.occupied);
    ASSERT_EQ(t.occupied, 37u - t.empty());
    for (std::size_t c = 1; c <= t.first_passages.size(); ++c) {
      ASSERT_GE(t.first_passages[c - 1], c + 1);
      ASSERT_LE(t.first_passages[c - 1], c + 37);
    }
  }
}

TEST(Throws, SparseBinsBehaveLikeDense) {
  Rng rng(Seed{4, 4});
  ThrowSimulator sim(100'000'000ULL);
  for (int rep = 0; rep < 20; ++rep) {
    const Trajectory t = sim.run(rng, StopRule::at_collisions(2));
    EXPECT_EQ(t.collisions, 2u);
    EXPECT_EQ(t.first_passages.back(), t.balls);
  }
}

TEST(Throws, BirthdayMeanMatchesDp) {
  Rng rng(Seed{365, 0});
  ThrowSimulator sim(365);
  double sum = 0.0;
  const int m = 1'000'000;
  for (int k = 0; k < m; ++k) sum += static_cast<double>(sim.balls_needed(rng, 1));
  EXPECT_NEAR(sum / m / pmf_mean(balls_needed_pmf(365, 1)), 1.0, 0.01);
}

TEST(Throws, DirectEmbeddedAndExactLawsAgree) {
  const std::pair<std::uint64_t, std::uint64_t> cases[] = {{10, 1}, {10, 3}, {100, 2}};
  for (const auto& [n, c] : cases) {
    const Pmf exact = balls_needed_pmf(n, c);
    Rng rng(Seed{n, c});
    ThrowSimulator sim(n);
    std::vector<std::int64_t> direct(100000), embedded(100000);
    for (auto& s : direct) s = static_cast<std::int64_t>(sim.balls_needed(rng, c));
    for (auto& s : embedded) {
      s = static_cast<std::int64_t>(embed_path(sample_arrivals(rng, c), n, c).records[c].balls);
    }
    EXPECT_GT(chi_squared_gof(direct, exact).p_value, 1e-3) << n << ' ' << c;
    EXPECT_GT(chi_squared_gof(embedded, exact).p_value, 1e-3) << n << ' ' << c;
    // Direct against embedded: two-sample check through their pooled law.
    std::vector<std::int64_t> pooled(direct);
    pooled.insert(pooled.end(), embedded.begin(), embedded.end());
    const Pmf pooled_law = empirical_distribution(pooled);
    EXPECT_LT(total_variation(empirical_distribution(direct), pooled_law), 0.01) << n << ' ' << c;
  }
}

TEST(Throws, CollisionsAfterMatchesDp) {
  Rng rng(Seed{17, 5});
  ThrowSimulator sim(20);
  std::vector<std::int64_t> c(100000), e(100000);
  for (std::size_t k = 0; k < c.size(); ++k) {
    const auto [coll, empty] = sim.collisions_after(rng, 25);
    c[k] = static_cast<std::int64_t>(coll);
    e[k] = static_cast<std::int64_t>(empty);
  }
  EXPECT_GT(chi_squared_gof(c, collision_pmf(20, 25)).p_value, 1e-3);
  EXPECT_GT(chi_squared_gof(e, empty_pmf(20, 25)).p_value, 1e-3);
}

TEST(InverseCdf, DrawsMatchExactLaw) {
  const Pmf exact = balls_needed_pmf(10, 1);
  Rng rng(Seed{10, 1});
  std::vector<std::int64_t> draws(1'000'000);
  for (auto& d : draws) d = pmf_quantile(exact, rng.uniform());
  EXPECT_LT(total_variation(empirical_distribution(draws), exact), 0.005);
}

TEST(SizeBias, SingleBinIsConstant) {
  Rng rng(Seed{1, 1});
  SizeBiasedSampler s(1, 2);
  for (int k = 0; k < 1000; ++k) {
    const auto [c, cb] = s.sample(rng);
    EXPECT_EQ(c, 1u);
    EXPECT_EQ(cb, 1u);
  }
  EXPECT_THROW(SizeBiasedSampler(5, 1), Error);
}

TEST(SizeBias, IncrementIsZeroOrOneAndLawIsSizeBiased) {
  for (const auto& [n, b] : {std::pair<std::uint64_t, std::uint64_t>{3, 3}, {5, 6}, {50, 20}}) {
    const Pmf law = collision_pmf(n, b);
    const double mean = pmf_mean(law);
    std::vector<double> biased(law.size());
    for (std::size_t k = 0; k < law.size(); ++k) {
      biased[k] = static_cast<double>(law.support_min() + static_cast<std::int64_t>(k)) * law.masses()[k] / mean;
    }
    const Pmf target(law.support_min(), biased);
    Rng rng(Seed{n, b});
    SizeBiasedSampler sampler(n, b);
    std::vector<std::int64_t> cb(200000), c(200000);
    for (std::size_t k = 0; k < cb.size(); ++k) {
      const auto [x, y] = sampler.sample(rng);
      ASSERT_TRUE(y == x || y == x + 1) << x << ' ' << y;
      c[k] = static_cast<std::int64_t>(x);
      cb[k] = static_cast<std::int64_t>(y);
    }
    EXPECT_GT(chi_squared_gof(c, law).p_value, 1e-3) << n << ' ' << b;
    EXPECT_GT(chi_squared_gof(cb, target).p_value, 1e-3) << n << ' ' << b;
  }
}

TEST(SizeBias, SharedUniformCouplingOfConditionedBinomial) {
  // S = F^{-1}(U) and S' = smallest k >= 1 with F(k) >= F(0) + U (1 - F(0))
  // differ by at most one for binomial laws.
  for (std::uint64_t m : {1u, 2u, 5u, 19u}) {
    for (double p : {0.5, 0.2, 0.02}) {
      std::vector<double> cdf(m + 1);
      double acc = 0.0;
      for (std::uint64_t k = 0; k <= m; ++k) cdf[k] = acc += oracle::binomial_pmf(m, p, k);
      for (int step = 1; step < 1000; ++step) {
        const double u = step / 1000.0;
        std::uint64_t s = 0;
        while (s < m && cdf[s] < u) ++s;
        const double v = cdf[0] + u * (1.0 - cdf[0]);
        std::uint64_t sb = 1;
        while (sb < m && cdf[sb] < v) ++sb;
        EXPECT_TRUE(sb == s || sb == s + 1) << m << ' ' << p << ' ' << u;
      }
    }
  }
}
