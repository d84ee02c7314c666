#include "collide/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "collide/error.hpp"
#include "collide/occupancy.hpp"

namespace collide {
namespace {

BoundResult clamp(double raw) {
  BoundResult r;
  r.raw = raw;
  r.clamped = raw > 1.0;
  // Underflow rounds up so the reported bound stays positive and valid.
  r.value = std::clamp(raw, std::numeric_limits<double>::denorm_min(), 1.0);
  return r;
}

}  // namespace

BoundResult crucial_tail_bound(std::uint64_t c, std::uint64_t n, double t, double K, CrucialVariant variant) {
  if (!(K > 0.0) || n < 1) fail(Errc::out_of_regime, "crucial bound needs K > 0 and n >= 1");
  if (c < 1 || static_cast<double>(c) > K * static_cast<double>(n)) {
    fail(Errc::out_of_regime, "crucial bound needs 1 <= c <= K n");
  }
  if (!(t > std::max(8.0 * K, 44.0))) fail(Errc::out_of_regime, "crucial bound needs t > max(8K, 44)");
  const double cd = static_cast<double>(c);
  const double exponent = variant == CrucialVariant::statement ? -cd * t / 8.0 : -t * t / 16.0;
  return clamp(cd * std::exp(exponent));
}

BoundResult azuma_bound(std::uint64_t b, double t) {
  require(b >= 1, "azuma bound needs b >= 1");
  require(t > 0.0, "azuma bound needs t > 0");
  return clamp(std::exp(-t * t / (2.0 * static_cast<double>(b))));
}

BoundResult ghosh_bound(std::uint64_t n, std::uint64_t b, double t, Side side) {
  require(n >= 1, "bin count n must be positive");
  require(b >= 2, "ghosh bound needs b >= 2 so that E C > 0");
  require(t > 0.0, "ghosh bound needs t > 0");
  const double mu = expected_collisions(n, b);
  const double denom = side == Side::lower ? 2.0 * mu : 2.0 * mu + t;
  return clamp(std::exp(-t * t / denom));
}

BoundResult centered_tail_bound(double y) {
  require(y > 0.0, "centered bound needs y > 0");
  BoundResult r = clamp(std::exp(-std::min(y, y * y) / 104.0));
  r.caveat = true;
  return r;
}

BoundResult evaluate(const BoundQuery& q) {
  switch (q.kind) {
    case BoundQuery::Kind::crucial:
      return crucial_tail_bound(q.c, q.n, q.t, q.K, CrucialVariant::statement);
    case BoundQuery::Kind::crucial_proof_end:
      return crucial_tail_bound(q.c, q.n, q.t, q.K, CrucialVariant::proof_end);
    case BoundQuery::Kind::azuma_upper:
    case BoundQuery::Kind::azuma_lower:
      return azuma_bound(q.b, q.t);
    case BoundQuery::Kind::ghosh_lower:
      return ghosh_bound(q.n, q.b, q.t, Side::lower);
    case BoundQuery::Kind::ghosh_upper:
      return ghosh_bound(q.n, q.b, q.t, Side::upper);
    case BoundQuery::Kind::centered:
      return centered_tail_bound(q.t);
  }
  fail(Errc::invalid_argument, "unknown bound kind");
}

std::string_view to_string(BoundQuery::Kind kind) {
  switch (kind) {
    case BoundQuery::Kind::crucial: return "crucial";
    case BoundQuery::Kind::crucial_proof_end: return "crucial_proof_end";
    case BoundQuery::Kind::azuma_upper: return "azuma_upper";
    case BoundQuery::Kind::azuma_lower: return "azuma_lower";
    case BoundQuery::Kind::ghosh_lower: return "ghosh_lower";
    case BoundQuery::Kind::ghosh_upper: return "ghosh_upper";
    case BoundQuery::Kind::centered: return "centered";
  }
  return "unknown";
}

}  // namespace collide
