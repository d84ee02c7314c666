#include "collide/asymptotics.hpp"

#include <cmath>
#include <numbers>

#include "collide/error.hpp"
#include "collide/special.hpp"

namespace collide {

double gamma_c(std::uint64_t c) {
  require(c >= 1, "gamma(c) needs c >= 1");
  // Extended precision keeps the log-Gamma difference accurate for large c.
  const long double cl = static_cast<long double>(c);
  const long double log_ratio = std::lgamma(cl + 0.5L) - std::lgamma(cl) - 0.5L * std::log(cl);
  return static_cast<double>(std::exp(log_ratio));
}

double gamma_c_series(std::uint64_t c) {
  require(c >= 1, "gamma(c) needs c >= 1");
  const double x = 1.0 / static_cast<double>(c);
  return 1.0 + x * (-1.0 / 8.0 + x * (1.0 / 128.0 + x * (5.0 / 1024.0 - x * 21.0 / 32768.0)));
}

double gamma_c_factorial(std::uint64_t c) {
  require(c >= 1, "gamma(c) needs c >= 1");
  // (2c)! / (2^{2c} (c!)^2) = prod_{k=1}^{c} (2k - 1) / (2k)
  long double central = 1.0L;
  for (std::uint64_t k = 1; k <= c; ++k) {
    central *= static_cast<long double>(2 * k - 1) / static_cast<long double>(2 * k);
  }
  return static_cast<double>(central * std::sqrt(std::numbers::pi_v<long double> * static_cast<long double>(c)));
}

double w_eval(double x) {
  require(x >= 0.0, "w(x) needs x >= 0");
  if (x < 0.5) {
    // x^2/2 - x^3/6 + x^4/24 - ...
    double term = x * x / 2.0;
    double sum = 0.0;
    for (int k = 3; term != 0.0 && std::fabs(term) > 1e-17 * sum; ++k) {
      sum += term;
      term *= -x / k;
    }
    return sum;
  }
  return std::exp(-x) + x - 1.0;
}

double w_derivative(double x) { return -std::expm1(-x); }

double w_inverse(double delta) {
  require(delta >= 0.0, "w^{-1} needs delta >= 0");
  if (delta == 0.0) return 0.0;
  if (std::isinf(delta)) return delta;

  double x;
  if (delta < 1.0) {
    const double r = std::sqrt(delta);
    x = std::sqrt(2.0 * delta) + delta / 3.0 + delta * r / (9.0 * std::sqrt(2.0)) + 2.0 * delta * delta / 135.0;
  } else {
    x = delta + 1.0;
  }
  // w is convex and increasing, so [lo, hi] brackets the root and Newton steps
  // that leave the bracket fall back to bisection.
  double lo = 0.0;
  double hi = delta + 1.0;
  for (int iter = 0; iter < 200; ++iter) {
    const double residual = w_eval(x) - delta;
    if (residual > 0.0) {
      hi = std::min(hi, x);
    } else {
      lo = std::max(lo, x);
    }
    if (residual == 0.0) break;
    const double slope = w_derivative(x);
    if (slope > 0.0) {
      const double step = residual / slope;
      if (std::fabs(step) <= 4e-16 * x) break;
      const double next = x - step;
      if (next > lo && next < hi) {
        x = next;
        continue;
      }
    }
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    x = mid;
  }
  return x;
}

double beta_center(double c, double n) {
  require(c > 0.0 && n > 0.0, "beta(c, n) needs c > 0 and n > 0");
  return n * w_inverse(c / n);
}

namespace {

// 1 - (1 + x) e^{-x} = sum_{k >= 2} (-1)^k (k - 1) x^k / k!, stable for small x.
double one_minus_1px_emx(double x) {
  if (x < 0.5) {
    double power = x * x / 2.0;  // x^k / k!
    double sum = 0.0;
    for (int k = 2; k < 60; ++k) {
      const double term = (k % 2 == 0 ? 1.0 : -1.0) * (k - 1) * power;
      sum += term;
      if (std::fabs(term) < 1e-18 * std::fabs(sum)) break;
      power *= x / (k + 1);
    }
    return sum;
  }
  return 1.0 - (1.0 + x) * std::exp(-x);
}

}  // namespace

double d_eval(double x) {
  require(x >= 0.0, "d(x) needs x >= 0");
  return std::exp(-x) * one_minus_1px_emx(x);
}

double g_eval(double x) {
  require(x >= 0.0, "g(x) needs x >= 0");
  if (x == 0.0) return std::numbers::sqrt2 / 2.0;
  return std::sqrt(d_eval(x)) / -std::expm1(-x);
}

double limit_cdf(const LimitLaw& law, double x) {
  switch (law.kind) {
    case LimitLaw::Kind::rayleigh:
      return x <= 0.0 ? 0.0 : -std::expm1(-x * x / 2.0);
    case LimitLaw::Kind::chi_2c:
      require(law.c >= 1, "chi_2c needs c >= 1");
      return x <= 0.0 ? 0.0 : regularized_gamma_p(static_cast<double>(law.c), x * x / 2.0);
    case LimitLaw::Kind::standard_normal:
      return normal_cdf(x);
  }
  return 0.0;
}

double variance_coefficient(std::uint64_t c) {
  const double g = gamma_c(c);
  return 2.0 * static_cast<double>(c) * (1.0 - g * g);
}

MomentApprox moments_approx(std::uint64_t c, std::uint64_t n, const Regime& regime) {
  require(c >= 1 && n >= 1, "moments need c >= 1 and n >= 1");
  const double cd = static_cast<double>(c);
  const double nd = static_cast<double>(n);
  switch (regime.kind) {
    case Regime::Kind::fixed_c:
    case Regime::Kind::growing_sublinear:
      require(regime.alpha0 == 0.0, "alpha0 must be 0 outside the central regime");
      return {gamma_c(c) * std::sqrt(2.0 * cd * nd), variance_coefficient(c) * nd};
    case Regime::Kind::central: {
      require(regime.alpha0 > 0.0 && std::isfinite(regime.alpha0), "central regime needs alpha0 > 0");
      const double g = g_eval(w_inverse(cd / nd));
      return {beta_center(cd, nd), nd * g * g};
    }
  }
  return {};
}

}  // namespace collide
