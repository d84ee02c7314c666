#include "collide/embedding.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include <json.hpp>

#include "collide/error.hpp"
#include "collide/kahan.hpp"

namespace collide {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double f_ratio(std::uint64_t i, std::uint64_t n) {
  if (i >= n) return kInf;
  return -std::log1p(-static_cast<double>(i) / static_cast<double>(n));
}

}  // namespace

double f_hazard(double p) {
  require(p >= 0.0 && p <= 1.0, "f(p) needs p in [0, 1]");
  if (p == 1.0) return kInf;
  return -std::log1p(-p);
}

double a_accum(std::uint64_t i, std::uint64_t n) {
  require(n >= 1, "bin count n must be positive");
  require(i <= n, "a(i, n) needs i <= n");
  CompensatedSum acc;
  for (std::uint64_t j = 0; j < i; ++j) acc += f_ratio(j, n);
  return acc.value();
}

ArrivalSequence::ArrivalSequence(std::vector<double> times) : times_(std::move(times)) {
  double prev = 0.0;
  for (double t : times_) {
    require(std::isfinite(t) && t > prev, "arrival times must be finite, positive and strictly increasing");
    prev = t;
  }
}

CoupledPath embed_path(const ArrivalSequence& arrivals, std::uint64_t n, std::uint64_t c_max) {
  require(n >= 1, "bin count n must be positive");
  require(c_max >= 1, "c_max must be positive");
  require(arrivals.size() >= c_max, "arrival sequence shorter than c_max");

  CoupledPath path;
  path.n = n;
  path.records.reserve(c_max + 1);
  path.records.push_back(PathRecord{});

  std::uint64_t occupied = 0;
  double previous = 0.0;
  for (std::uint64_t c = 1; c <= c_max; ++c) {
    const double arrival = arrivals[c - 1];
    double residual = arrival - previous;
    for (;;) {
      const double cost = f_ratio(occupied, n);
      if (residual <= cost) break;  // hit
      residual -= cost;             // miss: one more occupied bin
      ++occupied;
    }
    path.records.push_back(PathRecord{c, c + occupied, arrival, occupied, residual});
    previous = arrival;
  }
  return path;
}

std::string CoupledPath::to_jsonl() const {
  std::ostringstream os;
  for (const auto& r : records) {
    nlohmann::json j = {{"n", n}, {"c", r.c}, {"B", r.balls}, {"T", r.arrival}, {"J", r.occupied}, {"R", r.remainder}};
    os << j.dump() << '\n';
  }
  return os.str();
}

bool SandwichReport::all_ok() const noexcept { return violations() == 0; }

std::size_t SandwichReport::violations() const noexcept {
  std::size_t bad = 0;
  for (const auto& e : entries) {
    if (!e.lower_ok || !e.upper_ok || !e.combined_ok) ++bad;
  }
  return bad;
}

SandwichReport check_sandwich(const CoupledPath& path) {
  SandwichReport report;
  const std::uint64_t n = path.n;
  const double nd = static_cast<double>(n);

  // a(i, n) accumulated independently of the walk; i is nondecreasing in c.
  CompensatedSum a_sum;
  std::uint64_t a_index = 0;

  for (const auto& r : path.records) {
    if (r.c == 0) continue;
    SandwichEntry e;
    e.c = r.c;
    e.i = r.balls - r.c;
    while (a_index < e.i && a_index < n) a_sum += f_ratio(a_index++, n);
    const double a = a_sum.value();
    const double T = r.arrival;
    const double tol = kRoundingSlack * std::max(1.0, T);
    const double cd = static_cast<double>(r.c);
    const double id = static_cast<double>(e.i);

    e.lower_slack = T - a;
    e.lower_ok = e.i <= n && e.lower_slack >= -tol;

    const double f_i = f_ratio(e.i, n);
    e.upper_slack = std::isinf(f_i) ? kInf : a + cd * f_i - T;
    e.upper_ok = e.upper_slack >= -tol;

    e.combined_applies = 2 * e.i < n;
    if (e.combined_applies) {
      const double bound = id / (2.0 * nd) + id * id * id / (3.0 * nd * nd) + 2.0 * cd * id / nd;
      const double gap = std::fabs(id * id / (2.0 * nd) - T);
      e.combined_slack = bound - gap;
      e.combined_ok = e.combined_slack >= -tol;
    }
    report.entries.push_back(e);
  }
  return report;
}

}  // namespace collide
