#pragma once

#include <cstdint>
#include <unordered_map>
#include <utility>
#include <vector>

#include "collide/embedding.hpp"
#include "collide/random.hpp"

namespace collide {

/// Partial sums of `count` independent Exponential(1) spacings.
ArrivalSequence sample_arrivals(Rng& rng, std::size_t count);
ArrivalSequence sample_arrivals(Seed seed, std::size_t count);

struct StopRule {
  enum class Kind { balls, collisions };
  Kind kind = Kind::balls;
  std::uint64_t target = 0;

  static StopRule after_balls(std::uint64_t b) { return {Kind::balls, b}; }
  static StopRule at_collisions(std::uint64_t c) { return {Kind::collisions, c}; }
};

/// One direct balls-into-bins run.
struct Trajectory {
  std::uint64_t n = 0;
  std::uint64_t balls = 0;       // b_thrown
  std::vector<std::uint64_t> occupancy;  // occupancy[k] = N_k, bins holding k balls
  std::uint64_t occupied = 0;    // I
  std::uint64_t collisions = 0;  // C = balls - occupied
  std::vector<std::uint64_t> first_passages;  // first_passages[c-1] = B(c, n)

  std::uint64_t empty() const noexcept { return occupancy.empty() ? 0 : occupancy[0]; }
};

/// Throws balls uniformly into n bins. Keeps the bin-count storage between
/// runs and clears only touched bins, so batches over large n stay
/// proportional to the number of balls thrown. Bin counts live in a dense
/// array for n <= kDenseLimit and in a hash map above.
class ThrowSimulator {
 public:
  static constexpr std::uint64_t kDenseLimit = 10'000'000;

  explicit ThrowSimulator(std::uint64_t n);

  std::uint64_t bins() const noexcept { return n_; }
  Trajectory run(Rng& rng, StopRule stop);

  /// B(c, n) for a single run, without building a Trajectory.
  std::uint64_t balls_needed(Rng& rng, std::uint64_t c);
  /// (C(b, n), N0(b, n)) for a single run.
  std::pair<std::uint64_t, std::uint64_t> collisions_after(Rng& rng, std::uint64_t b);

 private:
  std::uint32_t add_ball(std::uint64_t bin);  // returns the bin's previous count
  void reset();

  std::uint64_t n_;
  std::vector<std::uint32_t> dense_;
  std::unordered_map<std::uint64_t, std::uint32_t> sparse_;
  std::vector<std::uint64_t> touched_;
};

Trajectory simulate_throws(Rng& rng, std::uint64_t n, StopRule stop);
Trajectory simulate_throws(Seed seed, std::uint64_t n, StopRule stop);

/// Draws (C, C') where C ~ C(b, n) and C' has the size-biased law
/// k P(C = k) / E C, coupled so that C' - C is 0 or 1 on every outcome.
///
/// Picks ball j in {2..b} with probability proportional to
/// E W_j = 1 - (1 - 1/n)^(j-1), throws all balls, then couples
/// S = #{i < j : X_i = X_j} ~ Binomial(j-1, 1/n) with S' ~ (S | S > 0)
/// through a shared uniform. When S' = S + 1 one earlier ball, chosen
/// uniformly among those outside bin X_j, is moved into X_j.
class SizeBiasedSampler {
 public:
  SizeBiasedSampler(std::uint64_t n, std::uint64_t b);

  std::pair<std::uint64_t, std::uint64_t> sample(Rng& rng);

 private:
  std::uint64_t pick_ball(Rng& rng) const;

  std::uint64_t n_;
  std::uint64_t b_;
  std::vector<double> cumulative_;  // cumulative E W_j for j = 2..b
  std::vector<std::uint64_t> throws_;
  std::vector<std::uint64_t> scratch_;
};

std::pair<std::uint64_t, std::uint64_t> size_biased_collision_pair(Seed seed, std::uint64_t n,
                                                                   std::uint64_t b);

}  // namespace collide
