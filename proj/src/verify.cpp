#include "collide/verify.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <sstream>

#include <json.hpp>

#include "collide/embedding.hpp"
#include "collide/error.hpp"
#include "collide/occupancy.hpp"
#include "collide/simulate.hpp"
#include "collide/stats.hpp"

namespace collide {
namespace {

using nlohmann::json;

Scenario::Kind parse_kind(const std::string& s) {
  if (s == "ks_limit") return Scenario::Kind::ks_limit;
  if (s == "mean_ratio") return Scenario::Kind::mean_ratio;
  if (s == "normal_variance") return Scenario::Kind::normal_variance;
  if (s == "embed_gof") return Scenario::Kind::embed_gof;
  fail(Errc::invalid_argument, "unknown scenario kind '" + s + "'");
}

LimitLaw parse_law(const std::string& s, std::uint64_t c) {
  if (s == "rayleigh") return LimitLaw::rayleigh();
  if (s == "chi_2c") return LimitLaw::chi(c);
  if (s == "normal") return LimitLaw::normal();
  fail(Errc::invalid_argument, "unknown limit law '" + s + "'");
}

std::vector<double> sample_balls_needed(std::uint64_t n, std::uint64_t c, std::uint64_t m, Seed seed) {
  Rng rng(seed);
  ThrowSimulator sim(n);
  std::vector<double> out(m);
  for (auto& x : out) x = static_cast<double>(sim.balls_needed(rng, c));
  return out;
}

// (B - beta(c, n)) / (g(w^{-1}(c/n)) sqrt(n))
void standardize_central(std::vector<double>& xs, std::uint64_t n, std::uint64_t c) {
  const double nd = static_cast<double>(n);
  const double beta = beta_center(static_cast<double>(c), nd);
  const double scale = g_eval(w_inverse(static_cast<double>(c) / nd)) * std::sqrt(nd);
  for (auto& x : xs) x = (x - beta) / scale;
}

double run_scenario(const Scenario& s) {
  require(s.n >= 1 && s.c >= 1, "scenario needs n >= 1 and c >= 1");
  const double nd = static_cast<double>(s.n);
  switch (s.kind) {
    case Scenario::Kind::ks_limit: {
      auto xs = sample_balls_needed(s.n, s.c, s.samples, s.seed);
      if (s.law.kind == LimitLaw::Kind::standard_normal) {
        standardize_central(xs, s.n, s.c);
      } else {
        for (auto& x : xs) x /= std::sqrt(nd);
      }
      return ks_statistic(xs, [&](double x) { return limit_cdf(s.law, x); });
    }
    case Scenario::Kind::mean_ratio: {
      auto xs = sample_balls_needed(s.n, s.c, s.samples, s.seed);
      const double scale = std::sqrt(2.0 * static_cast<double>(s.c) * nd);
      for (auto& x : xs) x /= scale;
      return std::fabs(sample_moments(xs).mean - gamma_c(s.c));
    }
    case Scenario::Kind::normal_variance: {
      auto xs = sample_balls_needed(s.n, s.c, s.samples, s.seed);
      standardize_central(xs, s.n, s.c);
      return std::fabs(sample_moments(xs).variance - 1.0);
    }
    case Scenario::Kind::embed_gof: {
      Rng rng(s.seed);
      std::vector<std::int64_t> bs(s.samples);
      for (auto& b : bs) {
        const auto path = embed_path(sample_arrivals(rng, s.c), s.n, s.c);
        b = static_cast<std::int64_t>(path.records.back().balls);
      }
      return chi_squared_gof(bs, balls_needed_pmf(s.n, s.c)).p_value;
    }
  }
  return NAN;
}

}  // namespace

std::uint64_t resolve_c(const std::string& rule, std::uint64_t n, std::uint64_t fallback) {
  if (rule.empty()) return fallback;
  if (rule == "half_n") return n / 2;
  if (rule == "sqrt_n") {
    auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(n)));
    while (r * r < n) ++r;
    while (r > 0 && (r - 1) * (r - 1) >= n) --r;
    return r;
  }
  if (rule.rfind("pow:", 0) == 0) {
    double a = 0.0;
    try {
      a = std::stod(rule.substr(4));
    } catch (const std::exception&) {
      fail(Errc::invalid_argument, "bad c_rule '" + rule + "'");
    }
    require(a > 0.0 && a < 1.0, "c_rule pow:<a> needs 0 < a < 1");
    // ceil(n^a) without letting rounding push an exact power up by one.
    const double v = std::pow(static_cast<double>(n), a);
    const double r = std::round(v);
    return static_cast<std::uint64_t>(std::fabs(v - r) <= 1e-9 * v ? r : std::ceil(v));
  }
  fail(Errc::invalid_argument, "unknown c_rule '" + rule + "'");
}

std::size_t Report::passed() const noexcept {
  std::size_t k = 0;
  for (const auto& s : scenarios) k += s.pass;
  return k;
}

std::size_t Report::failed() const noexcept { return scenarios.size() - passed(); }

std::string Report::to_json() const {
  json j;
  j["scenarios"] = json::array();
  for (const auto& s : scenarios) {
    json e = {{"name", s.name},           {"statistic", s.statistic}, {"threshold", s.threshold},
              {"pass", s.pass},           {"seed", s.seed.seed},      {"runtime_ms", s.runtime_ms}};
    if (!s.error.empty()) e["error"] = s.error;
    j["scenarios"].push_back(std::move(e));
  }
  j["summary"] = {{"passed", passed()}, {"failed", failed()}};
  return j.dump(2);
}

std::string Report::to_table() const {
  std::ostringstream os;
  char line[256];
  std::snprintf(line, sizeof line, "%-28s %14s %12s %6s %12s\n", "scenario", "statistic", "threshold", "result",
                "runtime_ms");
  os << line;
  for (const auto& s : scenarios) {
    std::snprintf(line, sizeof line, "%-28s %14.6g %12.6g %6s %12.1f\n", s.name.c_str(), s.statistic, s.threshold,
                  s.pass ? "PASS" : "FAIL", s.runtime_ms);
    os << line;
    if (!s.error.empty()) os << "  error: " << s.error << '\n';
  }
  os << "passed " << passed() << ", failed " << failed() << '\n';
  return os.str();
}

VerifyConfig parse_verify_config(const std::string& json_text) {
  VerifyConfig config;
  try {
    const json j = json::parse(json_text);
    for (const auto& e : j.at("scenarios")) {
      Scenario s;
      s.name = e.at("name").get<std::string>();
      s.kind = parse_kind(e.at("kind").get<std::string>());
      s.n = e.at("n").get<std::uint64_t>();
      s.c_rule = e.value("c_rule", std::string());
      s.c = resolve_c(s.c_rule, s.n, e.value("c", std::uint64_t{0}));
      s.samples = e.at("samples").get<std::uint64_t>();
      s.seed.seed = e.at("seed").get<std::uint64_t>();
      s.law = parse_law(e.value("law", std::string("normal")), s.c);
      s.threshold = e.at("threshold").get<double>();
      require(!s.name.empty(), "scenario name must be non-empty");
      require(s.samples >= 1000, "scenario '" + s.name + "' needs samples >= 1000");
      for (const auto& other : config.scenarios) {
        require(other.name != s.name, "duplicate scenario name '" + s.name + "'");
      }
      config.scenarios.push_back(std::move(s));
    }
  } catch (const json::exception& e) {
    fail(Errc::invalid_argument, std::string("malformed verify config: ") + e.what());
  }
  return config;
}

std::string default_verify_config_json() {
  return R"({
  "scenarios": [
    {"name": "embed_gof_n10_c1", "kind": "embed_gof", "n": 10, "c": 1, "samples": 100000, "seed": 301, "threshold": 0.001},
    {"name": "embed_gof_n10_c3", "kind": "embed_gof", "n": 10, "c": 3, "samples": 100000, "seed": 302, "threshold": 0.001},
    {"name": "embed_gof_n100_c2", "kind": "embed_gof", "n": 100, "c": 2, "samples": 100000, "seed": 303, "threshold": 0.001},
    {"name": "rayleigh_n1e5", "kind": "ks_limit", "n": 100000, "c": 1, "law": "rayleigh", "samples": 100000, "seed": 501, "threshold": 0.01},
    {"name": "chi6_n1e5", "kind": "ks_limit", "n": 100000, "c": 3, "law": "chi_2c", "samples": 100000, "seed": 601, "threshold": 0.01},
    {"name": "normal_half_n1e4", "kind": "ks_limit", "n": 10000, "c_rule": "half_n", "law": "normal", "samples": 100000, "seed": 901, "threshold": 0.015},
    {"name": "normal_var_half_n1e4", "kind": "normal_variance", "n": 10000, "c_rule": "half_n", "samples": 100000, "seed": 902, "threshold": 0.03},
    {"name": "mean_ratio_pow06_n1e5", "kind": "mean_ratio", "n": 100000, "c_rule": "pow:0.6", "samples": 10000, "seed": 1001, "threshold": 0.005}
  ]
})";
}

VerifyConfig default_verify_config() { return parse_verify_config(default_verify_config_json()); }

Report run_verification_suite(const VerifyConfig& config) {
  Report report;
  for (const auto& s : config.scenarios) {
    ScenarioResult r;
    r.name = s.name;
    r.threshold = s.threshold;
    r.seed = s.seed;
    const auto start = std::chrono::steady_clock::now();
    try {
      r.statistic = run_scenario(s);
      r.pass = s.kind == Scenario::Kind::embed_gof ? r.statistic >= s.threshold : r.statistic < s.threshold;
    } catch (const std::exception& e) {
      r.statistic = NAN;
      r.pass = false;
      r.error = e.what();
    }
    r.runtime_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    report.scenarios.push_back(std::move(r));
  }
  return report;
}

}  // namespace collide
