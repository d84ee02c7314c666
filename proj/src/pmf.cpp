#include "collide/pmf.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include <json.hpp>

#include "collide/error.hpp"
#include "collide/kahan.hpp"

namespace collide {

Pmf::Pmf(std::int64_t support_min, std::vector<double> masses) : support_min_(support_min) {
  std::size_t lo = 0;
  std::size_t hi = masses.size();
  while (lo < hi && masses[lo] < kEdgeTrim) ++lo;
  while (hi > lo && masses[hi - 1] < kEdgeTrim) --hi;
  require(lo < hi, "pmf has no mass");

  CompensatedSum total;
  for (std::size_t k = lo; k < hi; ++k) {
    const double m = masses[k];
    require(m >= 0.0 && m <= 1.0, "pmf mass outside [0, 1]");
    total += m;
  }
  const double sum = total.value();
  if (std::fabs(sum - 1.0) > kMassTolerance) {
    std::ostringstream os;
    os.precision(17);
    os << "pmf masses sum to " << sum << ", not 1";
    fail(Errc::invalid_argument, os.str());
  }

  support_min_ = support_min + static_cast<std::int64_t>(lo);
  masses_.assign(masses.begin() + static_cast<std::ptrdiff_t>(lo),
                 masses.begin() + static_cast<std::ptrdiff_t>(hi));
}

double Pmf::mass(std::int64_t x) const noexcept {
  if (x < support_min_ || x > support_max()) return 0.0;
  return masses_[static_cast<std::size_t>(x - support_min_)];
}

double Pmf::cdf(std::int64_t x) const noexcept {
  if (x < support_min_) return 0.0;
  if (x >= support_max()) return 1.0;
  CompensatedSum acc;
  for (std::int64_t k = support_min_; k <= x; ++k) acc += masses_[static_cast<std::size_t>(k - support_min_)];
  return std::min(1.0, acc.value());
}

std::string Pmf::to_json() const {
  nlohmann::json j;
  j["support_min"] = support_min_;
  j["masses"] = masses_;
  return j.dump();
}

Pmf Pmf::from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
    return Pmf(j.at("support_min").get<std::int64_t>(), j.at("masses").get<std::vector<double>>());
  } catch (const nlohmann::json::exception& e) {
    fail(Errc::invalid_argument, std::string("malformed pmf json: ") + e.what());
  }
}

double pmf_moment(const Pmf& pmf, unsigned k, double center) {
  CompensatedSum acc;
  std::int64_t x = pmf.support_min();
  for (double m : pmf.masses()) {
    acc += std::pow(static_cast<double>(x) - center, static_cast<int>(k)) * m;
    ++x;
  }
  return acc.value();
}

double pmf_mean(const Pmf& pmf) { return pmf_moment(pmf, 1, 0.0); }

double pmf_variance(const Pmf& pmf) { return pmf_moment(pmf, 2, pmf_mean(pmf)); }

std::int64_t pmf_quantile(const Pmf& pmf, double p) {
  require(p > 0.0 && p < 1.0, "quantile level must lie in (0, 1)");
  CompensatedSum acc;
  std::int64_t x = pmf.support_min();
  for (double m : pmf.masses()) {
    acc += m;
    if (acc.value() >= p) return x;
    ++x;
  }
  return pmf.support_max();
}

double total_variation(const Pmf& a, const Pmf& b) {
  const std::int64_t lo = std::min(a.support_min(), b.support_min());
  const std::int64_t hi = std::max(a.support_max(), b.support_max());
  CompensatedSum acc;
  for (std::int64_t x = lo; x <= hi; ++x) acc += std::fabs(a.mass(x) - b.mass(x));
  return 0.5 * acc.value();
}

Pmf empirical_distribution(std::span<const std::int64_t> samples) {
  require(!samples.empty(), "empirical distribution of an empty sample");
  const auto [lo, hi] = std::minmax_element(samples.begin(), samples.end());
  std::vector<double> counts(static_cast<std::size_t>(*hi - *lo) + 1, 0.0);
  for (std::int64_t s : samples) counts[static_cast<std::size_t>(s - *lo)] += 1.0;
  const double m = static_cast<double>(samples.size());
  for (double& v : counts) v /= m;
  return Pmf(*lo, std::move(counts));
}

}  // namespace collide
