#pragma once

#include <cstdint>

#include "collide/pmf.hpp"

namespace collide {

/// Size cap for the forward dynamic programs, counted in (row, state) cells
/// visited. Queries above the cap fail with Errc::resource_limit.
struct DpLimits {
  std::uint64_t max_states = 200'000'000;
};

/// Exact law of C(b, n), the number of collisions after b balls into n bins.
Pmf collision_pmf(std::uint64_t n, std::uint64_t b, const DpLimits& limits = {});

/// Exact law of I(b, n), the number of occupied bins after b balls. Runs the
/// occupied-bins birth chain directly rather than reflecting collision_pmf.
Pmf occupied_pmf(std::uint64_t n, std::uint64_t b, const DpLimits& limits = {});

/// Law of N0(b, n) = n - I(b, n).
Pmf empty_pmf(std::uint64_t n, std::uint64_t b, const DpLimits& limits = {});

/// Exact law of B(c, n) = inf{b : C(b, n) >= c} for c >= 1. B(0, n) = 0 is a
/// constant and is not represented here.
Pmf balls_needed_pmf(std::uint64_t n, std::uint64_t c, const DpLimits& limits = {});

/// E C(b, n) = b - n + n (1 - 1/n)^b.
double expected_collisions(std::uint64_t n, std::uint64_t b);

/// E N0(b, n) = n (1 - 1/n)^b.
double expected_empty(std::uint64_t n, std::uint64_t b);

}  // namespace collide
