#pragma once

namespace collide {

/// Regularized lower incomplete gamma P(a, x) = gamma(a, x) / Gamma(a), a > 0, x >= 0.
/// Series for x < a + 1, Lentz continued fraction for the complement otherwise.
double regularized_gamma_p(double a, double x);
/// Q(a, x) = 1 - P(a, x), evaluated without cancellation.
double regularized_gamma_q(double a, double x);

/// Standard normal CDF.
double normal_cdf(double x);

/// P(X >= x) for X ~ chi-squared with `dof` degrees of freedom.
double chi_squared_survival(double x, double dof);

}  // namespace collide
