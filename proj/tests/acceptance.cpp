// Acceptance suite: one PASS/FAIL line per criterion.
//   acceptance               run all criteria
//   acceptance --criterion N run criterion N only

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "collide/asymptotics.hpp"
#include "collide/embedding.hpp"
#include "collide/occupancy.hpp"
#include "collide/pmf.hpp"
#include "collide/random.hpp"
#include "collide/simulate.hpp"
#include "collide/stats.hpp"
#include "collide/verify.hpp"
#include "dominance.hpp"
#include "oracles.hpp"

using namespace collide;
using std::numbers::pi;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

struct Criterion {
  int id;
  const char* title;
  double time_limit_s;  // <= 0 means no limit
  std::function<Outcome()> run;
};

std::string fmt(const char* format, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, format, args...);
  return buf;
}

Outcome exact_vs_enumeration() {
  double worst = 0.0;
  for (std::uint64_t n = 1; n <= 4; ++n) {
    for (std::uint64_t b = 0; b <= 8; ++b) {
      const Pmf pmf = collision_pmf(n, b);
      const auto ref = oracle::enumerate_collisions(n, b);
      for (std::uint64_t k = 0; k <= b; ++k) {
        worst = std::max(worst, std::abs(pmf.mass(static_cast<std::int64_t>(k)) - ref[k]));
      }
    }
  }
  return {worst <= 1e-12, fmt("max |DP - enumeration| = %.3g", worst)};
}

Outcome classic_birthday() {
  const Pmf pmf = balls_needed_pmf(365, 1);
  const std::int64_t median = pmf_quantile(pmf, 0.5);
  const double mean = pmf_mean(pmf);
  const double ratio = mean / std::sqrt(pi * 365 / 2);
  const bool ok = median == 23 && std::abs(mean - 24.617) < 0.01 && ratio >= 1.02 && ratio <= 1.04;
  return {ok, fmt("median %lld, mean %.6f, mean/sqrt(pi n/2) %.5f", static_cast<long long>(median), mean, ratio)};
}

Outcome embedding_fidelity() {
  const std::pair<std::uint64_t, std::uint64_t> cases[] = {{10, 1}, {10, 3}, {100, 2}};
  bool ok = true;
  std::string detail;
  for (const auto& [n, c] : cases) {
    Rng rng(Seed{3000 + n, c});
    std::vector<std::int64_t> samples(100000);
    for (auto& s : samples) s = static_cast<std::int64_t>(embed_path(sample_arrivals(rng, c), n, c).records[c].balls);
    const double p = chi_squared_gof(samples, balls_needed_pmf(n, c)).p_value;
    ok = ok && p > 1e-3;
    detail += fmt("(n=%llu,c=%llu) p=%.4f ", static_cast<unsigned long long>(n), static_cast<unsigned long long>(c), p);
  }
  return {ok, detail};
}

Outcome deterministic_sandwich() {
  Rng rng(Seed{4000, 0});
  std::size_t violations = 0, checked = 0;
  for (int p = 0; p < 10000; ++p) {
    const SandwichReport r = check_sandwich(embed_path(sample_arrivals(rng, 50), 1000, 50));
    violations += r.violations();
    checked += r.entries.size();
  }
  return {violations == 0, fmt("%zu (path, c) pairs checked, %zu violations", checked, violations)};
}

Outcome ks_against(std::uint64_t n, std::uint64_t c, const LimitLaw& law, std::uint64_t seed) {
  Rng rng(Seed{seed, 0});
  ThrowSimulator sim(n);
  std::vector<double> xs(100000);
  const double scale = std::sqrt(static_cast<double>(n));
  for (auto& x : xs) x = static_cast<double>(sim.balls_needed(rng, c)) / scale;
  const double ks = ks_statistic(xs, [&](double x) { return limit_cdf(law, x); });
  return {ks < 0.01, fmt("KS = %.5f (threshold 0.01)", ks)};
}

Outcome gamma_tables() {
  const double num[] = {1, 9, 75, 1225, 19845};
  const double den[] = {4, 32, 256, 4096, 65536};
  const double table[] = {0.4292, 0.4567, 0.4777, 0.4835, 0.4869};
  bool ok = true;
  double worst_gamma = 0.0;
  std::string mismatches;
  for (std::uint64_t c = 1; c <= 5; ++c) {
    worst_gamma = std::max(worst_gamma, std::abs(gamma_c(c) - std::sqrt(num[c - 1] * pi / den[c - 1])));
    const double v = variance_coefficient(c);
    if (std::abs(v - table[c - 1]) > 5e-5) {
      ok = false;
      mismatches += fmt(" c=%llu: %.6f vs %.4f;", static_cast<unsigned long long>(c), v, table[c - 1]);
    }
  }
  ok = ok && worst_gamma <= 1e-12;
  return {ok, fmt("max |gamma - radical| = %.3g; variance table", worst_gamma) +
                  (mismatches.empty() ? std::string(" matches") : " mismatches:" + mismatches)};
}

Outcome fixed_c_variance() {
  const double target = 2.0 * (1.0 - pi / 4.0);
  double v[3];
  const std::uint64_t ns[] = {1000, 10000, 100000};
  for (int k = 0; k < 3; ++k) v[k] = pmf_variance(balls_needed_pmf(ns[k], 1)) / static_cast<double>(ns[k]);
  const bool within = std::abs(v[1] / target - 1.0) <= 0.02;
  const bool monotone = std::abs(v[0] - target) > std::abs(v[1] - target) && std::abs(v[1] - target) > std::abs(v[2] - target);
  return {within && monotone, fmt("Var(B/sqrt n): n=1e3 %.5f, n=1e4 %.5f, n=1e5 %.5f, limit %.5f", v[0], v[1], v[2], target)};
}

Outcome normal_limit() {
  const std::uint64_t n = 10000, c = n / 2;
  const double beta = beta_center(static_cast<double>(c), static_cast<double>(n));
  const double scale = g_eval(w_inverse(0.5)) * std::sqrt(static_cast<double>(n));
  Rng rng(Seed{9000, 0});
  ThrowSimulator sim(n);
  std::vector<double> xs(100000);
  for (auto& x : xs) x = (static_cast<double>(sim.balls_needed(rng, c)) - beta) / scale;
  const double ks = ks_statistic(xs, [](double x) { return limit_cdf(LimitLaw::normal(), x); });
  const double var = sample_moments(xs).variance;
  return {ks < 0.015 && std::abs(var - 1.0) <= 0.03, fmt("KS = %.5f (threshold 0.015), sample variance %.5f", ks, var)};
}

Outcome growing_c_mean() {
  const std::uint64_t n = 100000;
  const std::uint64_t c = resolve_c("pow:0.6", n, 0);
  Rng rng(Seed{10000, 0});
  ThrowSimulator sim(n);
  std::vector<double> xs(10000);
  const double scale = std::sqrt(2.0 * static_cast<double>(c) * static_cast<double>(n));
  for (auto& x : xs) x = static_cast<double>(sim.balls_needed(rng, c)) / scale;
  const double mean = sample_moments(xs).mean;
  const double g = gamma_c(c);
  const bool ok = std::abs(mean - g) <= 0.005 && std::abs(mean - 1.0) <= 0.01;
  return {ok, fmt("c=%llu, mean B/sqrt(2cn) = %.5f, gamma(c) = %.5f, beta/sqrt(2cn) = %.5f",
                  static_cast<unsigned long long>(c), mean, g, beta_center(double(c), double(n)) / scale)};
}

Outcome size_biased_coupling() {
  const std::uint64_t n = 3, b = 3;
  const Pmf law = collision_pmf(n, b);
  const double m1 = pmf_moment(law, 1), m2 = pmf_moment(law, 2), m3 = pmf_moment(law, 3);
  std::vector<double> biased(law.size());
  for (std::size_t k = 0; k < law.size(); ++k) {
    biased[k] = static_cast<double>(law.support_min() + static_cast<std::int64_t>(k)) * law.masses()[k] / m1;
  }
  const Pmf target(law.support_min(), biased);
  Rng rng(Seed{11000, 0});
  SizeBiasedSampler sampler(n, b);
  const std::size_t m = 1'000'000;
  std::vector<std::int64_t> cb(m);
  std::size_t exceptions = 0;
  double sum = 0.0;
  for (auto& y : cb) {
    const auto [c0, c1] = sampler.sample(rng);
    exceptions += !(c1 == c0 || c1 == c0 + 1);
    y = static_cast<std::int64_t>(c1);
    sum += static_cast<double>(c1);
  }
  const double p = chi_squared_gof(cb, target).p_value;
  const double expected = m2 / m1;
  const double sd = std::sqrt(m3 / m1 - expected * expected);
  const double mean = sum / static_cast<double>(m);
  const bool ok = exceptions == 0 && p > 1e-3 && std::abs(mean - expected) <= 3.0 * sd / std::sqrt(double(m));
  return {ok, fmt("exceptions %zu, chi-squared p = %.4f, mean C' %.5f vs E[C^2]/E[C] %.5f", exceptions, p, mean, expected)};
}

Outcome bound_dominance() {
  std::size_t total = 0, bad = 0;
  std::string failures;
  for (const auto& suite : {dominance::azuma_suite(100000, 12), dominance::ghosh_suite(100000, 12),
                            dominance::centered_suite(100000, 12)}) {
    for (const auto& c : suite) {
      ++total;
      if (!c.ok()) {
        ++bad;
        failures += " " + c.label;
      }
    }
  }
  return {bad == 0, fmt("%zu tail checks, %zu violations", total, bad) + failures};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Acceptance criteria"};
  int only = 0;
  app.add_option("--criterion", only, "Run a single criterion")->check(CLI::Range(1, 12));
  CLI11_PARSE(app, argc, argv);

  const std::vector<Criterion> criteria = {
      {1, "exact collision law vs enumeration", 5, exact_vs_enumeration},
      {2, "classic birthday", 1, classic_birthday},
      {3, "embedding fidelity", 30, embedding_fidelity},
      {4, "deterministic sandwich", 10, deterministic_sandwich},
      {5, "Rayleigh limit", 60, [] { return ks_against(100000, 1, LimitLaw::rayleigh(), 5000); }},
      {6, "chi_2c limit", 0, [] { return ks_against(100000, 3, LimitLaw::chi(3), 6000); }},
      {7, "gamma and variance tables", 1, gamma_tables},
      {8, "fixed-c variance", 0, fixed_c_variance},
      {9, "normal limit", 120, normal_limit},
      {10, "growing-c mean", 0, growing_c_mean},
      {11, "size-biased coupling", 0, size_biased_coupling},
      {12, "bound dominance", 0, bound_dominance},
  };

  int failed = 0;
  for (const auto& c : criteria) {
    if (only != 0 && c.id != only) continue;
    const auto start = std::chrono::steady_clock::now();
    Outcome o = c.run();
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.time_limit_s > 0 && secs > c.time_limit_s) {
      o.pass = false;
      o.detail += fmt(" [over time limit %.0f s]", c.time_limit_s);
    }
    std::printf("%s criterion %2d (%s): %s (%.2f s)\n", o.pass ? "PASS" : "FAIL", c.id, c.title, o.detail.c_str(), secs);
    std::fflush(stdout);
    failed += !o.pass;
  }
  return failed == 0 ? 0 : 1;
}
