#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace collide {

/// Probability mass function on the contiguous integer range
/// [support_min, support_min + masses.size()).
///
/// Construction trims edge masses below kEdgeTrim and checks that all masses
/// lie in [0, 1] and sum to 1 within kMassTolerance. It never renormalizes:
/// a drifting sum is a bug upstream and is reported as such.
class Pmf {
 public:
  static constexpr double kEdgeTrim = 1e-300;
  static constexpr double kMassTolerance = 1e-12;

  Pmf(std::int64_t support_min, std::vector<double> masses);

  static Pmf point_mass(std::int64_t x) { return Pmf(x, {1.0}); }

  std::int64_t support_min() const noexcept { return support_min_; }
  std::int64_t support_max() const noexcept {
    return support_min_ + static_cast<std::int64_t>(masses_.size()) - 1;
  }
  std::span<const double> masses() const noexcept { return masses_; }
  std::size_t size() const noexcept { return masses_.size(); }

  /// P(X = x); zero outside the support.
  double mass(std::int64_t x) const noexcept;
  /// P(X <= x).
  double cdf(std::int64_t x) const noexcept;

  /// {"support_min": int, "masses": [...]}
  std::string to_json() const;
  static Pmf from_json(const std::string& text);

 private:
  std::int64_t support_min_;
  std::vector<double> masses_;
};

/// Sum of (x - center)^k P(X = x), compensated.
double pmf_moment(const Pmf& pmf, unsigned k, double center = 0.0);
double pmf_mean(const Pmf& pmf);
double pmf_variance(const Pmf& pmf);

/// Smallest x with P(X <= x) >= p, for p in (0, 1).
std::int64_t pmf_quantile(const Pmf& pmf, double p);

/// Total-variation distance between two pmfs.
double total_variation(const Pmf& a, const Pmf& b);

/// Normalized histogram of integer samples.
Pmf empirical_distribution(std::span<const std::int64_t> samples);

}  // namespace collide
