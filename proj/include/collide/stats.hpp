#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "collide/pmf.hpp"

namespace collide {

/// sup_x |F_m(x) - F(x)| between the empirical CDF of `samples` and `cdf`.
/// Assumes `cdf` is continuous; evaluates both one-sided gaps at each order
/// statistic.
double ks_statistic(std::span<const double> samples, const std::function<double(double)>& cdf);

struct ChiSquaredResult {
  double statistic = 0.0;
  std::size_t cells = 0;  // after merging
  double dof = 0.0;
  double p_value = 1.0;
};

/// Pearson goodness-of-fit of integer samples against an exact pmf. Adjacent
/// support points are pooled left to right until each cell has expected
/// count >= min_expected; the remainder is folded into the last cell.
/// Samples outside the reference support go into a tail cell of expected
/// count zero and force p = 0.
ChiSquaredResult chi_squared_gof(std::span<const std::int64_t> samples, const Pmf& reference,
                                 double min_expected = 5.0);

/// Three standard errors of a proportion estimate p from m trials.
double proportion_slack(double p, std::size_t m);

struct SampleMoments {
  double mean = 0.0;
  double variance = 0.0;  // unbiased
};
SampleMoments sample_moments(std::span<const double> xs);

}  // namespace collide
