#pragma once

#include <cstdint>
#include <string_view>

namespace collide {

struct BoundResult {
  double value = 1.0;      // min(1, raw)
  double raw = 1.0;        // unclamped expression
  bool clamped = false;    // raw > 1
  bool caveat = false;     // valid only for n beyond an unspecified n0
};

enum class CrucialVariant {
  statement,  // c exp(-c t / 8)
  proof_end,  // c exp(-t^2 / 16)
};

/// Upper bound on P(B(c,n) / sqrt(2cn) > sqrt(t)), valid for 1 <= c <= K n
/// and t > max(8K, 44). Outside that range throws Errc::out_of_regime.
BoundResult crucial_tail_bound(std::uint64_t c, std::uint64_t n, double t, double K,
                               CrucialVariant variant = CrucialVariant::statement);

/// exp(-t^2 / (2b)): each one-sided tail of N0(b, n) - E N0(b, n).
BoundResult azuma_bound(std::uint64_t b, double t);

enum class Side { lower, upper };

/// Tails of C(b,n) - mu with mu = E C(b,n):
///   lower: P(C - mu <= -t) <= exp(-t^2 / (2 mu))
///   upper: P(C - mu >= t)  <= exp(-t^2 / (2 mu + t))
BoundResult ghosh_bound(std::uint64_t n, std::uint64_t b, double t, Side side);

/// exp(-min(y, y^2) / 104) for P(|B(c,n) - beta(c,n)| >= y sqrt(n)). Always
/// flagged with `caveat`: it holds only for n >= n0, and n0 is not explicit.
BoundResult centered_tail_bound(double y);

struct BoundQuery {
  enum class Kind { crucial, crucial_proof_end, azuma_upper, azuma_lower, ghosh_lower, ghosh_upper, centered };
  Kind kind = Kind::azuma_upper;
  std::uint64_t n = 0;
  std::uint64_t b = 0;
  std::uint64_t c = 0;
  double t = 0.0;  // t, or y for centered
  double K = 1.0;
};

BoundResult evaluate(const BoundQuery& query);

std::string_view to_string(BoundQuery::Kind kind);

}  // namespace collide
