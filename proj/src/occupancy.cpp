#include "collide/occupancy.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "collide/error.hpp"

namespace collide {
namespace {

using u64 = std::uint64_t;
__extension__ using u128 = unsigned __int128;

void check_states(u128 states, const DpLimits& limits) {
  if (states > limits.max_states) {
    fail(Errc::resource_limit, "dynamic program needs " + std::to_string(static_cast<double>(states)) +
                                   " states, above the configured cap of " +
                                   std::to_string(limits.max_states));
  }
}

// Cells visited by a chain whose row t has min(t, n) live states, t = 1..b.
u128 triangle_states(u64 n, u64 b) {
  const u128 head = std::min(b, n);
  u128 total = head * (head + 1) / 2;
  if (b > n) total += static_cast<u128>(b - n) * n;
  return total;
}

}  // namespace

Pmf collision_pmf(u64 n, u64 b, const DpLimits& limits) {
  require(n >= 1, "bin count n must be positive");
  if (b == 0) return Pmf::point_mass(0);
  check_states(triangle_states(n, b), limits);

  const double inv_n = 1.0 / static_cast<double>(n);
  // p[c] = P(C(t, n) = c); live range [max(0, t - n), t - 1].
  std::vector<double> p(b, 0.0);
  p[0] = 1.0;  // t = 1
  for (u64 t = 1; t < b; ++t) {
    const u64 lo = t > n ? t - n : 0;
    // Descending so p[c - 1] is still the previous row when p[c] is written.
    for (u64 c = t + 1; c-- > lo;) {
      const double stay = c < t ? p[c] * (static_cast<double>(n - (t - c)) * inv_n) : 0.0;
      const double from_below = c > lo ? p[c - 1] * (static_cast<double>(t - (c - 1)) * inv_n) : 0.0;
      p[c] = stay + from_below;
    }
  }
  const u64 lo = b > n ? b - n : 0;
  return Pmf(static_cast<std::int64_t>(lo), std::vector<double>(p.begin() + static_cast<std::ptrdiff_t>(lo), p.end()));
}

Pmf occupied_pmf(u64 n, u64 b, const DpLimits& limits) {
  require(n >= 1, "bin count n must be positive");
  if (b == 0) return Pmf::point_mass(0);
  check_states(triangle_states(n, b), limits);

  const double inv_n = 1.0 / static_cast<double>(n);
  const u64 width = std::min(b, n);
  // q[i] = P(I(t, n) = i) for i in [1, min(t, n)].
  std::vector<double> q(width + 1, 0.0);
  q[1] = 1.0;  // t = 1
  for (u64 t = 1; t < b; ++t) {
    const u64 hi = std::min(t + 1, n);
    for (u64 i = hi; i >= 1; --i) {
      const double stay = i <= t ? q[i] * (static_cast<double>(i) * inv_n) : 0.0;
      const double from_below = i >= 2 ? q[i - 1] * (static_cast<double>(n - (i - 1)) * inv_n) : 0.0;
      q[i] = stay + from_below;
    }
  }
  return Pmf(1, std::vector<double>(q.begin() + 1, q.end()));
}

Pmf empty_pmf(u64 n, u64 b, const DpLimits& limits) {
  const Pmf occ = occupied_pmf(n, b, limits);
  std::vector<double> masses(occ.masses().rbegin(), occ.masses().rend());
  return Pmf(static_cast<std::int64_t>(n) - occ.support_max(), std::move(masses));
}

Pmf balls_needed_pmf(u64 n, u64 c, const DpLimits& limits) {
  require(n >= 1, "bin count n must be positive");
  require(c >= 1, "collision target c must be positive (B(0, n) = 0 is constant)");
  check_states(static_cast<u128>(c + n) * std::min<u64>(c, n + 1), limits);

  const double inv_n = 1.0 / static_cast<double>(n);
  // Collision chain truncated below c: p[k] = P(C(t, n) = k) for k < c.
  std::vector<double> p(c, 0.0);
  p[0] = 1.0;  // t = 0
  std::vector<double> out(n, 0.0);  // out[b - c - 1] = P(B(c, n) = b), b in [c+1, c+n]
  for (u64 t = 0; t < c + n; ++t) {
    const u64 lo = t > n ? t - n : 0;
    const u64 hi = std::min(t, c - 1);
    // Ball t + 1 lands while state c - 1 has t - (c - 1) occupied bins.
    if (t + 1 > c && hi == c - 1) out[t - c] = p[c - 1] * (static_cast<double>(t + 1 - c) * inv_n);
    const u64 new_hi = std::min(t + 1, c - 1);
    for (u64 k = new_hi + 1; k-- > lo;) {
      const double stay = k <= hi ? p[k] * (static_cast<double>(n - (t - k)) * inv_n) : 0.0;
      const double from_below = k > lo ? p[k - 1] * (static_cast<double>(t - (k - 1)) * inv_n) : 0.0;
      p[k] = stay + from_below;
    }
  }
  return Pmf(static_cast<std::int64_t>(c + 1), std::move(out));
}

double expected_empty(u64 n, u64 b) {
  require(n >= 1, "bin count n must be positive");
  if (n == 1) return b == 0 ? 1.0 : 0.0;
  return static_cast<double>(n) * std::exp(static_cast<double>(b) * std::log1p(-1.0 / static_cast<double>(n)));
}

double expected_collisions(u64 n, u64 b) {
  require(n >= 1, "bin count n must be positive");
  if (b <= 1) return 0.0;
  if (n == 1) return static_cast<double>(b - 1);

  // b - n + n e^{bL} with L = log(1 - 1/n), rewritten as n h(bL) - b r with
  // h(x) = e^x - 1 - x and r = -1 - nL > 0 so that neither piece cancels
  // catastrophically when b << n.
  const double nd = static_cast<double>(n);
  const double bd = static_cast<double>(b);
  const double x = bd * std::log1p(-1.0 / nd);

  double h;
  if (std::fabs(x) < 0.5) {
    double term = x * x / 2.0;
    h = 0.0;
    for (int k = 3; std::fabs(term) > 1e-18 * std::fabs(h) || k < 5; ++k) {
      h += term;
      term *= x / k;
    }
  } else {
    h = std::expm1(x) - x;
  }

  double r;
  if (n >= 16) {
    // r = sum_{k >= 2} 1 / (k n^{k-1})
    r = 0.0;
    double power = 1.0 / nd;
    for (int k = 2; power > 1e-20; ++k) {
      r += power / k;
      power /= nd;
    }
  } else {
    r = -1.0 - nd * std::log1p(-1.0 / nd);
  }
  return nd * h - bd * r;
}

}  // namespace collide
