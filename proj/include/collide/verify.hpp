#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "collide/asymptotics.hpp"
#include "collide/random.hpp"

namespace collide {

/// One verification scenario. `kind` selects the statistic:
///   ks_limit      KS distance of the scaled B(c, n) samples to `law`
///                 (B / sqrt(n) for rayleigh/chi_2c; (B - beta)/(g sqrt(n)) for normal)
///   mean_ratio    |mean of B / sqrt(2cn) - gamma(c)|
///   normal_variance  |sample variance of (B - beta)/(g sqrt(n)) - 1|
///   embed_gof     chi-squared p-value of embedded B(c, n) against the exact pmf
/// A scenario passes when statistic < threshold, except embed_gof which
/// passes when p >= threshold.
struct Scenario {
  enum class Kind { ks_limit, mean_ratio, normal_variance, embed_gof };

  std::string name;
  Kind kind = Kind::ks_limit;
  std::uint64_t n = 0;
  std::uint64_t c = 0;  // resolved from c_rule when given
  std::string c_rule;   // "", "half_n" (floor n/2), "sqrt_n" (ceil sqrt n), "pow:<a>" (ceil n^a)
  std::uint64_t samples = 1000;
  Seed seed;
  LimitLaw law;
  double threshold = 0.0;
};

struct VerifyConfig {
  std::vector<Scenario> scenarios;
};

struct ScenarioResult {
  std::string name;
  double statistic = 0.0;
  double threshold = 0.0;
  bool pass = false;
  Seed seed;
  double runtime_ms = 0.0;
  std::string error;  // non-empty when the scenario could not run
};

struct Report {
  std::vector<ScenarioResult> scenarios;
  std::size_t passed() const noexcept;
  std::size_t failed() const noexcept;

  /// {"scenarios": [{"name","statistic","threshold","pass","seed","runtime_ms"}],
  ///  "summary": {"passed","failed"}}
  std::string to_json() const;
  /// Fixed-width table for terminals.
  std::string to_table() const;
};

/// Parses the JSON config; throws Error(invalid_argument) with a diagnostic.
VerifyConfig parse_verify_config(const std::string& json_text);
std::string default_verify_config_json();
VerifyConfig default_verify_config();

std::uint64_t resolve_c(const std::string& rule, std::uint64_t n, std::uint64_t fallback);

/// Runs every scenario. Failures inside a scenario are recorded and do not
/// stop the others.
Report run_verification_suite(const VerifyConfig& config);

}  // namespace collide
