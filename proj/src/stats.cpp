#include "collide/stats.hpp"

#include <algorithm>
#include <cmath>

#include "collide/error.hpp"
#include "collide/kahan.hpp"
#include "collide/special.hpp"

namespace collide {

double ks_statistic(std::span<const double> samples, const std::function<double(double)>& cdf) {
  require(!samples.empty(), "KS statistic of an empty sample");
  std::vector<double> sorted(samples.begin(), samples.end());
  std::sort(sorted.begin(), sorted.end());
  const double m = static_cast<double>(sorted.size());
  double sup = 0.0;
  for (std::size_t k = 0; k < sorted.size(); ++k) {
    const double f = cdf(sorted[k]);
    sup = std::max({sup, static_cast<double>(k + 1) / m - f, f - static_cast<double>(k) / m});
  }
  return sup;
}

ChiSquaredResult chi_squared_gof(std::span<const std::int64_t> samples, const Pmf& reference, double min_expected) {
  require(!samples.empty(), "chi-squared test of an empty sample");
  const double m = static_cast<double>(samples.size());
  const std::int64_t lo = reference.support_min();
  const std::int64_t hi = reference.support_max();

  std::vector<double> observed(reference.size(), 0.0);
  std::size_t outside = 0;
  for (std::int64_t s : samples) {
    if (s < lo || s > hi) {
      ++outside;
    } else {
      observed[static_cast<std::size_t>(s - lo)] += 1.0;
    }
  }

  ChiSquaredResult result;
  if (outside > 0) {
    result.statistic = INFINITY;
    result.p_value = 0.0;
    return result;
  }

  std::vector<double> cell_obs;
  std::vector<double> cell_exp;
  double obs = 0.0;
  double expct = 0.0;
  const auto masses = reference.masses();
  for (std::size_t k = 0; k < masses.size(); ++k) {
    obs += observed[k];
    expct += masses[k] * m;
    if (expct >= min_expected) {
      cell_obs.push_back(obs);
      cell_exp.push_back(expct);
      obs = expct = 0.0;
    }
  }
  if (expct > 0.0 || obs > 0.0) {
    if (cell_exp.empty()) {
      cell_obs.push_back(obs);
      cell_exp.push_back(expct);
    } else {
      cell_obs.back() += obs;
      cell_exp.back() += expct;
    }
  }

  CompensatedSum stat;
  for (std::size_t k = 0; k < cell_obs.size(); ++k) {
    const double diff = cell_obs[k] - cell_exp[k];
    stat += diff * diff / cell_exp[k];
  }
  result.statistic = stat.value();
  result.cells = cell_obs.size();
  result.dof = static_cast<double>(cell_obs.size()) - 1.0;
  result.p_value = result.dof > 0.0 ? chi_squared_survival(result.statistic, result.dof) : 1.0;
  return result;
}

double proportion_slack(double p, std::size_t m) {
  require(m > 0, "proportion slack needs m > 0");
  return 3.0 * std::sqrt(std::max(p * (1.0 - p), 0.0) / static_cast<double>(m));
}

SampleMoments sample_moments(std::span<const double> xs) {
  require(xs.size() >= 2, "sample moments need at least two values");
  CompensatedSum sum;
  for (double x : xs) sum += x;
  const double mean = sum.value() / static_cast<double>(xs.size());
  CompensatedSum sq;
  for (double x : xs) sq += (x - mean) * (x - mean);
  return {mean, sq.value() / static_cast<double>(xs.size() - 1)};
}

}  // namespace collide
