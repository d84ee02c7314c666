#include "collide/simulate.hpp"

#include <algorithm>
#include <cmath>

#include "collide/error.hpp"

namespace collide {

ArrivalSequence sample_arrivals(Rng& rng, std::size_t count) {
  require(count >= 1, "need at least one arrival");
  std::vector<double> times(count);
  double t = 0.0;
  for (double& slot : times) {
    const double next = t + rng.exponential();
    // A spacing below half an ulp of t would not advance the sum.
    t = next > t ? next : std::nextafter(t, INFINITY);
    slot = t;
  }
  return ArrivalSequence(std::move(times));
}

ArrivalSequence sample_arrivals(Seed seed, std::size_t count) {
  Rng rng(seed);
  return sample_arrivals(rng, count);
}

ThrowSimulator::ThrowSimulator(std::uint64_t n) : n_(n) {
  require(n >= 1, "bin count n must be positive");
  if (n <= kDenseLimit) dense_.assign(n, 0);
}

std::uint32_t ThrowSimulator::add_ball(std::uint64_t bin) {
  std::uint32_t* slot;
  if (!dense_.empty()) {
    slot = &dense_[bin];
  } else {
    slot = &sparse_[bin];
  }
  if (*slot == 0) touched_.push_back(bin);
  return (*slot)++;
}

void ThrowSimulator::reset() {
  if (!dense_.empty()) {
    for (std::uint64_t bin : touched_) dense_[bin] = 0;
  } else {
    sparse_.clear();
  }
  touched_.clear();
}

Trajectory ThrowSimulator::run(Rng& rng, StopRule stop) {
  reset();
  Trajectory tr;
  tr.n = n_;
  tr.occupancy.assign(2, 0);
  tr.occupancy[0] = n_;
  if (stop.kind == StopRule::Kind::collisions) tr.first_passages.reserve(stop.target);

  auto done = [&] {
    return stop.kind == StopRule::Kind::balls ? tr.balls >= stop.target : tr.collisions >= stop.target;
  };
  while (!done()) {
    const std::uint32_t before = add_ball(rng.below(n_));
    ++tr.balls;
    if (before + 2u > tr.occupancy.size()) tr.occupancy.resize(before + 2u, 0);
    --tr.occupancy[before];
    ++tr.occupancy[before + 1];
    if (before == 0) {
      ++tr.occupied;
    } else {
      ++tr.collisions;
      if (stop.kind == StopRule::Kind::collisions) tr.first_passages.push_back(tr.balls);
    }
  }
  while (tr.occupancy.size() > 1 && tr.occupancy.back() == 0) tr.occupancy.pop_back();
  return tr;
}

std::uint64_t ThrowSimulator::balls_needed(Rng& rng, std::uint64_t c) {
  reset();
  std::uint64_t balls = 0;
  std::uint64_t collisions = 0;
  while (collisions < c) {
    ++balls;
    if (add_ball(rng.below(n_)) != 0) ++collisions;
  }
  return balls;
}

std::pair<std::uint64_t, std::uint64_t> ThrowSimulator::collisions_after(Rng& rng, std::uint64_t b) {
  reset();
  std::uint64_t collisions = 0;
  for (std::uint64_t k = 0; k < b; ++k) {
    if (add_ball(rng.below(n_)) != 0) ++collisions;
  }
  const std::uint64_t occupied = b - collisions;
  return {collisions, n_ - occupied};
}

Trajectory simulate_throws(Rng& rng, std::uint64_t n, StopRule stop) {
  ThrowSimulator sim(n);
  return sim.run(rng, stop);
}

Trajectory simulate_throws(Seed seed, std::uint64_t n, StopRule stop) {
  Rng rng(seed);
  return simulate_throws(rng, n, stop);
}

SizeBiasedSampler::SizeBiasedSampler(std::uint64_t n, std::uint64_t b) : n_(n), b_(b) {
  require(n >= 1, "bin count n must be positive");
  require(b >= 2, "size-biasing C(b, n) needs b >= 2");
  const double log_miss = n == 1 ? 0.0 : std::log1p(-1.0 / static_cast<double>(n));
  cumulative_.reserve(b - 1);
  double acc = 0.0;
  for (std::uint64_t j = 2; j <= b; ++j) {
    // E W_j = P(ball j lands on an earlier ball)
    acc += n == 1 ? 1.0 : -std::expm1(static_cast<double>(j - 1) * log_miss);
    cumulative_.push_back(acc);
  }
  throws_.resize(b);
}

std::uint64_t SizeBiasedSampler::pick_ball(Rng& rng) const {
  const double u = rng.uniform() * cumulative_.back();
  const auto it = std::lower_bound(cumulative_.begin(), cumulative_.end(), u);
  const auto index = static_cast<std::uint64_t>(std::min<std::ptrdiff_t>(
      it - cumulative_.begin(), static_cast<std::ptrdiff_t>(cumulative_.size()) - 1));
  return index + 2;
}

std::pair<std::uint64_t, std::uint64_t> SizeBiasedSampler::sample(Rng& rng) {
  const std::uint64_t j = pick_ball(rng);
  for (auto& x : throws_) x = rng.below(n_);

  auto collisions = [&](const std::vector<std::uint64_t>& xs) {
    scratch_ = xs;
    std::sort(scratch_.begin(), scratch_.end());
    const auto distinct = static_cast<std::uint64_t>(std::unique(scratch_.begin(), scratch_.end()) - scratch_.begin());
    return b_ - distinct;
  };
  const std::uint64_t c = collisions(throws_);

  // S ~ Binomial(m, q) from the throws; draw U uniformly on the CDF step of S,
  // then S' = smallest k >= 1 with F(k) >= F(0) + U (1 - F(0)).
  const std::uint64_t m = j - 1;
  const std::uint64_t target = throws_[j - 1];
  std::uint64_t s = 0;
  for (std::uint64_t i = 0; i < m; ++i) s += throws_[i] == target;

  const double q = 1.0 / static_cast<double>(n_);
  std::vector<double> cdf;  // F(0..m), built only as far as needed
  cdf.reserve(s + 3);
  double pk = n_ == 1 ? (m == 0 ? 1.0 : 0.0) : std::exp(static_cast<double>(m) * std::log1p(-q));
  double acc = pk;
  cdf.push_back(acc);
  auto extend = [&] {
    const auto k = static_cast<double>(cdf.size());  // next k
    if (n_ == 1) {
      pk = cdf.size() == m ? 1.0 : 0.0;
    } else {
      pk *= (static_cast<double>(m) - k + 1.0) / k * (q / (1.0 - q));
    }
    acc += pk;
    cdf.push_back(cdf.size() == m ? 1.0 : std::min(acc, 1.0));
  };
  while (cdf.size() <= s) extend();
  const double lower = s == 0 ? 0.0 : cdf[s - 1];
  const double u = lower + rng.uniform() * (cdf[s] - lower);
  const double level = cdf[0] + u * (1.0 - cdf[0]);

  std::uint64_t s_prime = 1;
  for (;; ++s_prime) {
    while (cdf.size() <= s_prime) extend();
    if (cdf[s_prime] >= level || s_prime == m) break;
  }

  if (s_prime <= s) return {c, c};

  // Move s' - s uniformly chosen balls i < j with X_i != X_j into bin X_j
  // (a single ball whenever the coupling behaves).
  for (std::uint64_t remaining = m - s, moves = s_prime - s; moves > 0; --moves, --remaining) {
    std::uint64_t pick = rng.below(remaining);
    for (std::uint64_t i = 0; i < m; ++i) {
      if (throws_[i] == target) continue;
      if (pick-- == 0) {
        throws_[i] = target;
        break;
      }
    }
  }
  return {c, collisions(throws_)};
}

std::pair<std::uint64_t, std::uint64_t> size_biased_collision_pair(Seed seed, std::uint64_t n, std::uint64_t b) {
  Rng rng(seed);
  SizeBiasedSampler sampler(n, b);
  return sampler.sample(rng);
}

}  // namespace collide
