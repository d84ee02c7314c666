#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace collide {

/// Hazard time f(p) = -log(1 - p); f(1) = +inf.
double f_hazard(double p);

/// a(i, n) = sum_{0 <= j < i} f(j / n), for 0 <= i <= n.
double a_accum(std::uint64_t i, std::uint64_t n);

/// Strictly increasing, strictly positive arrival times of a rate-1 Poisson
/// process (only a finite prefix is ever needed).
class ArrivalSequence {
 public:
  ArrivalSequence() = default;
  explicit ArrivalSequence(std::vector<double> times);

  std::span<const double> times() const noexcept { return times_; }
  std::size_t size() const noexcept { return times_.size(); }
  double operator[](std::size_t i) const noexcept { return times_[i]; }

 private:
  std::vector<double> times_;
};

struct PathRecord {
  std::uint64_t c = 0;
  std::uint64_t balls = 0;     // B(c, n)
  double arrival = 0.0;        // T_c
  std::uint64_t occupied = 0;  // J(c, n) = B(c, n) - c
  double remainder = 0.0;      // R(c): time spent in the final (hit) step
};

/// Output of the embedding for one arrival sequence. records[0] is the base
/// case c = 0 with B = J = 0 and T = R = 0.
struct CoupledPath {
  std::uint64_t n = 0;
  std::vector<PathRecord> records;

  /// One JSON object per line, one line per c >= 0.
  std::string to_jsonl() const;
};

/// Deterministic coupling of (B(c, n), T_c) for c = 0..c_max driven by the
/// arrival times. Uses the incremental hit/miss walk: at i occupied bins, a
/// residual arrival gap no larger than f(i/n) is a hit, otherwise the gap is
/// charged f(i/n) and one more bin becomes occupied.
CoupledPath embed_path(const ArrivalSequence& arrivals, std::uint64_t n, std::uint64_t c_max);

struct SandwichEntry {
  std::uint64_t c = 0;
  std::uint64_t i = 0;  // B(c, n) - c
  double lower_slack = 0.0;  // T_c - a(i, n)
  double upper_slack = 0.0;  // a(i, n) + c f(i/n) - T_c; +inf when vacuous
  bool lower_ok = false;
  bool upper_ok = false;
  bool combined_applies = false;  // i < n / 2
  double combined_slack = 0.0;    // bound - |(B - c)^2 / (2n) - T_c|
  bool combined_ok = true;
};

struct SandwichReport {
  std::vector<SandwichEntry> entries;  // one per c >= 1

  bool all_ok() const noexcept;
  std::size_t violations() const noexcept;
};

/// Checks a(i,n) <= T_c <= a(i,n) + c f(i/n) for every c >= 1 and, when
/// i < n/2, |(B - c)^2/(2n) - T_c| <= i/(2n) + i^3/(3n^2) + 2ci/n.
/// Violations are reported, never thrown. Comparisons allow kRoundingSlack
/// relative to max(1, T_c) for floating-point rounding in the walk.
SandwichReport check_sandwich(const CoupledPath& path);

inline constexpr double kRoundingSlack = 1e-12;

}  // namespace collide
