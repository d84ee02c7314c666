#pragma once

#include <cstdint>

namespace collide {

/// gamma(c) = Gamma(c + 1/2) / (sqrt(c) Gamma(c)), so that E B(c, n) ~ gamma(c) sqrt(2cn).
double gamma_c(std::uint64_t c);

/// 1 - 1/(8c) + 1/(128c^2) + 5/(1024c^3) - 21/(32768c^4).
double gamma_c_series(std::uint64_t c);

/// (2c)! / (2^{2c} (c!)^2) * sqrt(pi c), evaluated as a running product.
/// Only used as a cross-check of gamma_c for moderate c.
double gamma_c_factorial(std::uint64_t c);

/// w(x) = e^{-x} + x - 1, x >= 0.
double w_eval(double x);
/// w'(x) = 1 - e^{-x}.
double w_derivative(double x);
/// The x >= 0 with w(x) = delta.
double w_inverse(double delta);

/// beta(c, n) = n w^{-1}(c / n), the centering of B(c, n).
double beta_center(double c, double n);

/// d(x) = e^{-x} (1 - (1 + x) e^{-x}).
double d_eval(double x);
/// g(x) = sqrt(d(x)) / (1 - e^{-x}), g(0) = 1/sqrt(2).
double g_eval(double x);

struct LimitLaw {
  enum class Kind { rayleigh, chi_2c, standard_normal };
  Kind kind = Kind::standard_normal;
  std::uint64_t c = 1;  // degrees of freedom are 2c; chi_2c only

  static LimitLaw rayleigh() { return {Kind::rayleigh, 1}; }
  static LimitLaw chi(std::uint64_t c) { return {Kind::chi_2c, c}; }
  static LimitLaw normal() { return {Kind::standard_normal, 1}; }
};

/// CDF of the limit law at x. chi_2c is the law of sqrt(2 T_c) with
/// T_c ~ Gamma(c, 1); rayleigh coincides with chi_2c at c = 1.
double limit_cdf(const LimitLaw& law, double x);

struct Regime {
  enum class Kind { fixed_c, growing_sublinear, central };
  Kind kind = Kind::fixed_c;
  double alpha0 = 0.0;  // lim c/n; zero unless central
};

struct MomentApprox {
  double mean = 0.0;
  double variance = 0.0;
};

/// Leading-order mean and variance of B(c, n) in the given regime.
///   fixed_c, growing_sublinear: gamma(c) sqrt(2cn), 2c (1 - gamma(c)^2) n
///   central:                    beta(c, n),         n g(w^{-1}(c/n))^2
MomentApprox moments_approx(std::uint64_t c, std::uint64_t n, const Regime& regime);

/// 2c (1 - gamma(c)^2): the limit of Var B(c, n) / n for fixed c.
double variance_coefficient(std::uint64_t c);

}  // namespace collide
