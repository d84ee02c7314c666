// Command-line front end. Links only the C API in collide.h.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "collide/collide.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitUsage = 2;

struct CallError {
  collide_status status;
  std::string message;
};

void check(collide_status s) {
  if (s != COLLIDE_OK) throw CallError{s, collide_last_error()};
}

struct StringDeleter {
  void operator()(char* s) const { collide_string_free(s); }
};
using OwnedString = std::unique_ptr<char, StringDeleter>;

struct PmfDeleter {
  void operator()(collide_pmf* p) const { collide_pmf_free(p); }
};
using OwnedPmf = std::unique_ptr<collide_pmf, PmfDeleter>;

struct RngDeleter {
  void operator()(collide_rng* r) const { collide_rng_free(r); }
};
using OwnedRng = std::unique_ptr<collide_rng, RngDeleter>;

struct PathDeleter {
  void operator()(collide_path* p) const { collide_path_free(p); }
};
using OwnedPath = std::unique_ptr<collide_path, PathDeleter>;

OwnedRng make_rng(uint64_t seed, uint64_t stream) {
  collide_rng* raw = nullptr;
  check(collide_rng_new(seed, stream, &raw));
  return OwnedRng(raw);
}

std::string format_real(double v, int precision) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", precision, v);
  return buf;
}

// Output sink: stdout, or a file. Relative paths are resolved under
// $COLLIDE_OUT_DIR when it is set.
class Output {
 public:
  explicit Output(const std::string& path) {
    if (path.empty() || path == "-") return;
    std::string full = path;
    if (const char* dir = std::getenv("COLLIDE_OUT_DIR"); dir != nullptr && *dir != '\0' && path.front() != '/') {
      full = std::string(dir) + "/" + path;
    }
    file_.open(full);
    if (!file_) throw CallError{COLLIDE_INVALID_ARGUMENT, "cannot open output file " + full};
  }
  std::ostream& stream() { return file_.is_open() ? static_cast<std::ostream&>(file_) : std::cout; }

 private:
  std::ofstream file_;
};

struct Common {
  std::string out;
  int precision = 6;
};

// ---- exact ----------------------------------------------------------------

struct ExactArgs {
  std::string which;
  uint64_t n = 0;
  uint64_t b = 0;
  uint64_t c = 0;
  std::optional<double> quantile;
  std::optional<unsigned> moment;
  double center = 0.0;
  std::string format = "json";
  uint64_t max_states = 0;
};

int run_exact(const ExactArgs& a, const Common& common) {
  collide_pmf* raw = nullptr;
  if (a.which == "collision-pmf") {
    check(collide_collision_pmf(a.n, a.b, a.max_states, &raw));
  } else if (a.which == "occupied-pmf") {
    check(collide_occupied_pmf(a.n, a.b, a.max_states, &raw));
  } else {
    check(collide_balls_needed_pmf(a.n, a.c, a.max_states, &raw));
  }
  OwnedPmf pmf(raw);
  Output out(common.out);
  auto& os = out.stream();

  if (a.quantile) {
    int64_t q = 0;
    check(collide_pmf_quantile(pmf.get(), *a.quantile, &q));
    os << q << '\n';
    return kExitOk;
  }
  if (a.moment) {
    double m = 0.0;
    check(collide_pmf_moment(pmf.get(), *a.moment, a.center, &m));
    os << format_real(m, common.precision) << '\n';
    return kExitOk;
  }
  if (a.format == "csv") {
    os << "x,p\n";
    const double* masses = collide_pmf_masses(pmf.get());
    const int64_t lo = collide_pmf_support_min(pmf.get());
    for (size_t k = 0; k < collide_pmf_size(pmf.get()); ++k) {
      os << lo + static_cast<int64_t>(k) << ',' << format_real(masses[k], 17) << '\n';
    }
    return kExitOk;
  }
  char* json = nullptr;
  check(collide_pmf_to_json(pmf.get(), &json));
  OwnedString owned(json);
  os << json << '\n';
  return kExitOk;
}

// ---- simulate -------------------------------------------------------------

struct SimArgs {
  uint64_t seed = 0;
  uint64_t stream = 0;
  uint64_t n = 0;
  uint64_t balls = 0;
  uint64_t collisions = 0;
  uint64_t runs = 1;
  uint64_t count = 1;
  uint64_t c_max = 1;
  uint64_t paths = 1;
  uint64_t b = 0;
  bool check_sandwich = false;
};

int run_simulate_throws(const SimArgs& a, bool by_collisions, const Common& common) {
  auto rng = make_rng(a.seed, a.stream);
  Output out(common.out);
  auto& os = out.stream();
  const uint64_t target = by_collisions ? a.collisions : a.balls;
  os << "seed,stream,run,n,stop,target,balls,occupied,collisions,empty,max_load,first_passages\n";
  std::vector<uint64_t> passages(by_collisions ? target : 0);
  for (uint64_t run = 0; run < a.runs; ++run) {
    collide_trajectory_summary s{};
    check(collide_simulate_throws(rng.get(), a.n, by_collisions ? COLLIDE_STOP_COLLISIONS : COLLIDE_STOP_BALLS,
                                  target, &s, passages.empty() ? nullptr : passages.data()));
    os << a.seed << ',' << a.stream << ',' << run << ',' << a.n << ',' << (by_collisions ? "collisions" : "balls")
       << ',' << target << ',' << s.balls << ',' << s.occupied << ',' << s.collisions << ',' << s.empty << ','
       << s.max_load << ',';
    for (size_t k = 0; k < passages.size(); ++k) os << (k ? ";" : "") << passages[k];
    os << '\n';
  }
  return kExitOk;
}

int run_simulate_arrivals(const SimArgs& a, const Common& common) {
  auto rng = make_rng(a.seed, a.stream);
  std::vector<double> times(a.count);
  check(collide_sample_arrivals(rng.get(), times.size(), times.data()));
  Output out(common.out);
  auto& os = out.stream();
  os << "seed,stream,index,time\n";
  for (size_t k = 0; k < times.size(); ++k) {
    os << a.seed << ',' << a.stream << ',' << k + 1 << ',' << format_real(times[k], 17) << '\n';
  }
  return kExitOk;
}

int run_simulate_embed(const SimArgs& a, const Common& common) {
  auto rng = make_rng(a.seed, a.stream);
  Output out(common.out);
  auto& os = out.stream();
  os << "{\"seed\":" << a.seed << ",\"stream\":" << a.stream << ",\"n\":" << a.n << ",\"c_max\":" << a.c_max
     << ",\"paths\":" << a.paths << "}\n";
  std::vector<double> times(a.c_max);
  size_t violations = 0;
  for (uint64_t p = 0; p < a.paths; ++p) {
    check(collide_sample_arrivals(rng.get(), times.size(), times.data()));
    collide_path* raw = nullptr;
    check(collide_embed_path(times.data(), times.size(), a.n, a.c_max, &raw));
    OwnedPath path(raw);
    if (a.check_sandwich) {
      collide_sandwich_summary s{};
      check(collide_check_sandwich(path.get(), &s));
      violations += s.lower_violations + s.upper_violations + s.combined_violations;
    } else {
      char* jsonl = nullptr;
      check(collide_path_to_jsonl(path.get(), &jsonl));
      OwnedString owned(jsonl);
      os << jsonl;
    }
  }
  if (a.check_sandwich) {
    os << "{\"paths_checked\":" << a.paths << ",\"violations\":" << violations << "}\n";
    return violations == 0 ? kExitOk : kExitFailed;
  }
  return kExitOk;
}

int run_simulate_size_bias(const SimArgs& a, const Common& common) {
  auto rng = make_rng(a.seed, a.stream);
  std::vector<uint64_t> c(a.count), cb(a.count);
  check(collide_size_biased_pairs(rng.get(), a.n, a.b, a.count, c.data(), cb.data()));
  Output out(common.out);
  auto& os = out.stream();
  os << "seed,stream,sample,n,b,C,C_biased\n";
  for (size_t k = 0; k < c.size(); ++k) {
    os << a.seed << ',' << a.stream << ',' << k << ',' << a.n << ',' << a.b << ',' << c[k] << ',' << cb[k] << '\n';
  }
  return kExitOk;
}

// ---- asym -----------------------------------------------------------------

struct AsymArgs {
  uint64_t c = 1;
  double cr = 0.0;
  uint64_t n = 1;
  double x = 0.0;
  bool series = false;
  std::string law = "normal";
  std::string grid;
  std::string regime = "fixed_c";
  double alpha0 = 0.0;
};

collide_law parse_law(const std::string& s) {
  if (s == "rayleigh") return COLLIDE_LAW_RAYLEIGH;
  if (s == "chi_2c") return COLLIDE_LAW_CHI_2C;
  return COLLIDE_LAW_NORMAL;
}

int run_asym_cdf(const AsymArgs& a, const Common& common) {
  Output out(common.out);
  auto& os = out.stream();
  const collide_law law = parse_law(a.law);
  if (a.grid.empty()) {
    double v = 0.0;
    check(collide_limit_cdf(law, a.c, a.x, &v));
    os << format_real(v, common.precision) << '\n';
    return kExitOk;
  }
  double lo = 0.0, hi = 0.0;
  int steps = 0;
  char sep1 = 0, sep2 = 0;
  std::istringstream is(a.grid);
  if (!(is >> lo >> sep1 >> hi >> sep2 >> steps) || sep1 != ':' || sep2 != ':' || steps < 2 || !(hi > lo)) {
    throw CallError{COLLIDE_INVALID_ARGUMENT, "--grid expects lo:hi:steps with hi > lo and steps >= 2"};
  }
  os << "x,y\n";
  for (int k = 0; k < steps; ++k) {
    const double x = lo + (hi - lo) * k / (steps - 1);
    double y = 0.0;
    check(collide_limit_cdf(law, a.c, x, &y));
    os << format_real(x, 17) << ',' << format_real(y, 17) << '\n';
  }
  return kExitOk;
}

// ---- bounds ---------------------------------------------------------------

struct BoundArgs {
  uint64_t n = 0;
  uint64_t b = 0;
  uint64_t c = 0;
  double t = 0.0;
  double y = 0.0;
  double K = 1.0;
  std::string side = "lower";
  std::string variant = "statement";
  bool json = false;
};

int run_bound(collide_bound_query q, const BoundArgs& a, const Common& common) {
  collide_bound_result r{};
  check(collide_bound(&q, &r));
  Output out(common.out);
  auto& os = out.stream();
  if (a.json) {
    os << "{\"value\":" << format_real(r.value, 17) << ",\"raw\":" << format_real(r.raw, 17)
       << ",\"clamped\":" << (r.clamped ? "true" : "false") << ",\"caveat\":" << (r.caveat ? "true" : "false")
       << "}\n";
  } else {
    os << format_real(r.value, common.precision) << '\n';
    if (r.clamped) std::cerr << "note: bound exceeded 1 and was clamped (raw " << r.raw << ")\n";
    if (r.caveat) std::cerr << "note: bound holds only for n beyond an unspecified n0\n";
  }
  return kExitOk;
}

// ---- table ----------------------------------------------------------------

int run_table(const std::string& which, uint64_t max_c, const Common& common) {
  Output out(common.out);
  auto& os = out.stream();
  if (which == "gamma") {
    os << "c,gamma,gamma_series\n";
  } else {
    os << "c,variance_coefficient\n";
  }
  for (uint64_t c = 1; c <= max_c; ++c) {
    double g = 0.0;
    check(collide_gamma_c(c, &g));
    if (which == "gamma") {
      double s = 0.0;
      check(collide_gamma_c_series(c, &s));
      os << c << ',' << format_real(g, common.precision) << ',' << format_real(s, common.precision) << '\n';
    } else {
      os << c << ',' << format_real(2.0 * static_cast<double>(c) * (1.0 - g * g), common.precision) << '\n';
    }
  }
  return kExitOk;
}

// ---- verify ---------------------------------------------------------------

int run_verify(const std::string& config_path, bool print_default, const Common& common) {
  if (print_default) {
    char* cfg = nullptr;
    check(collide_verify_default_config(&cfg));
    OwnedString owned(cfg);
    Output out(common.out);
    out.stream() << cfg << '\n';
    return kExitOk;
  }
  std::string config;
  if (!config_path.empty()) {
    std::ifstream in(config_path);
    if (!in) throw CallError{COLLIDE_INVALID_ARGUMENT, "cannot read config " + config_path};
    std::ostringstream ss;
    ss << in.rdbuf();
    config = ss.str();
  }
  char* json = nullptr;
  char* table = nullptr;
  int all_passed = 0;
  check(collide_verify_run(config_path.empty() ? nullptr : config.c_str(), &json, &table, &all_passed));
  OwnedString owned_json(json), owned_table(table);
  std::cerr << table;
  Output out(common.out);
  out.stream() << json << '\n';
  return all_passed ? kExitOk : kExitFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"collide: exact, simulated and asymptotic laws for balls-into-bins collisions"};
  app.require_subcommand(1);
  Common common;
  app.add_option("--out", common.out, "Write output to this file instead of stdout");
  app.add_option("--precision", common.precision, "Significant digits for scalar output")->check(CLI::Range(1, 17));

  int status = kExitOk;
  std::function<int()> action;

  // exact
  ExactArgs ex;
  auto* exact = app.add_subcommand("exact", "Exact laws from the birth-chain dynamic programs");
  exact->require_subcommand(1);
  for (const char* which : {"collision-pmf", "occupied-pmf", "balls-needed"}) {
    auto* sub = exact->add_subcommand(which, which == std::string("balls-needed") ? "Law of B(c, n)"
                                             : which == std::string("collision-pmf") ? "Law of C(b, n)"
                                                                                     : "Law of I(b, n)");
    sub->add_option("--n", ex.n, "Number of bins")->required();
    if (which == std::string("balls-needed")) {
      sub->add_option("--c", ex.c, "Collision target")->required();
    } else {
      sub->add_option("--b", ex.b, "Number of balls")->required();
    }
    sub->add_option("--quantile", ex.quantile, "Print the smallest x with CDF(x) >= p");
    sub->add_option("--moment", ex.moment, "Print the k-th moment about --center");
    sub->add_option("--center", ex.center, "Center for --moment");
    sub->add_option("--format", ex.format, "Pmf output format")->check(CLI::IsMember({"json", "csv"}));
    sub->add_option("--max-states", ex.max_states, "Dynamic program state cap (0 = default)");
    sub->callback([&, which] {
      ex.which = which;
      action = [&] { return run_exact(ex, common); };
    });
  }

  // simulate
  SimArgs sim;
  auto* simulate = app.add_subcommand("simulate", "Seeded simulations (CSV / JSON lines)");
  simulate->require_subcommand(1);
  auto add_seed = [&](CLI::App* sub) {
    sub->add_option("--seed", sim.seed, "Generator seed")->required();
    sub->add_option("--stream", sim.stream, "Generator stream");
  };
  {
    auto* sub = simulate->add_subcommand("throws", "Direct balls-into-bins runs");
    add_seed(sub);
    sub->add_option("--n", sim.n, "Number of bins")->required();
    auto* balls = sub->add_option("--balls", sim.balls, "Stop after this many balls");
    auto* colls = sub->add_option("--collisions", sim.collisions, "Stop at this many collisions");
    balls->excludes(colls);
    sub->add_option("--runs", sim.runs, "Number of runs");
    sub->callback([&, colls, balls] {
      if (colls->count() == 0 && balls->count() == 0) throw CLI::ValidationError("one of --balls or --collisions is required");
      const bool by_collisions = colls->count() > 0;
      action = [&, by_collisions] { return run_simulate_throws(sim, by_collisions, common); };
    });
  }
  {
    auto* sub = simulate->add_subcommand("arrivals", "Rate-1 Poisson arrival times");
    add_seed(sub);
    sub->add_option("--count", sim.count, "Number of arrivals")->required();
    sub->callback([&] { action = [&] { return run_simulate_arrivals(sim, common); }; });
  }
  {
    auto* sub = simulate->add_subcommand("embed", "Embedded (B(c, n), T_c) paths as JSON lines");
    add_seed(sub);
    sub->add_option("--n", sim.n, "Number of bins")->required();
    sub->add_option("--c-max", sim.c_max, "Largest collision index")->required();
    sub->add_option("--paths", sim.paths, "Number of paths");
    sub->add_flag("--check-sandwich", sim.check_sandwich, "Check the deterministic inequalities instead of tracing");
    sub->callback([&] { action = [&] { return run_simulate_embed(sim, common); }; });
  }
  {
    auto* sub = simulate->add_subcommand("size-bias", "Coupled (C, C') size-biased pairs");
    add_seed(sub);
    sub->add_option("--n", sim.n, "Number of bins")->required();
    sub->add_option("--b", sim.b, "Number of balls")->required();
    sub->add_option("--samples", sim.count, "Number of pairs");
    sub->callback([&] { action = [&] { return run_simulate_size_bias(sim, common); }; });
  }

  // asym
  AsymArgs as;
  auto* asym = app.add_subcommand("asym", "Asymptotic quantities and limit laws");
  asym->require_subcommand(1);
  auto scalar = [&](double v) {
    Output out(common.out);
    out.stream() << format_real(v, common.precision) << '\n';
    return kExitOk;
  };
  {
    auto* sub = asym->add_subcommand("gamma", "gamma(c)");
    sub->add_option("--c", as.c, "Collision count")->required();
    sub->add_flag("--series", as.series, "Use the four-term expansion");
    sub->callback([&] {
      action = [&] {
        double v = 0.0;
        check(as.series ? collide_gamma_c_series(as.c, &v) : collide_gamma_c(as.c, &v));
        return scalar(v);
      };
    });
  }
  {
    auto* sub = asym->add_subcommand("beta", "beta(c, n) = n w^{-1}(c/n)");
    sub->add_option("--c", as.cr, "Collision count")->required();
    sub->add_option("--n", as.n, "Number of bins")->required();
    sub->callback([&] {
      action = [&] {
        double v = 0.0;
        check(collide_beta_center(as.cr, static_cast<double>(as.n), &v));
        return scalar(v);
      };
    });
  }
  for (const char* fn : {"g", "d", "w", "w-inverse"}) {
    auto* sub = asym->add_subcommand(fn, std::string("Evaluate ") + fn);
    sub->add_option("--x", as.x, "Argument")->required();
    sub->callback([&, fn] {
      const std::string name = fn;
      action = [&, name] {
        double v = 0.0;
        if (name == "g") check(collide_g(as.x, &v));
        else if (name == "d") check(collide_d(as.x, &v));
        else if (name == "w") check(collide_w(as.x, &v));
        else check(collide_w_inverse(as.x, &v));
        return scalar(v);
      };
    });
  }
  {
    auto* sub = asym->add_subcommand("cdf", "Limit-law CDF at --x, or (x, y) CSV over --grid lo:hi:steps");
    sub->add_option("--law", as.law, "Limit law")->required()->check(CLI::IsMember({"rayleigh", "chi_2c", "normal"}));
    sub->add_option("--c", as.c, "chi_2c parameter");
    auto* x = sub->add_option("--x", as.x, "Argument");
    auto* grid = sub->add_option("--grid", as.grid, "lo:hi:steps");
    x->excludes(grid);
    sub->callback([&] { action = [&] { return run_asym_cdf(as, common); }; });
  }
  {
    auto* sub = asym->add_subcommand("moments", "Leading-order mean and variance of B(c, n)");
    sub->add_option("--c", as.c, "Collision count")->required();
    sub->add_option("--n", as.n, "Number of bins")->required();
    sub->add_option("--regime", as.regime, "Regime")
        ->check(CLI::IsMember({"fixed_c", "growing_sublinear", "central"}));
    sub->add_option("--alpha0", as.alpha0, "Limit of c/n (central regime)");
    sub->callback([&] {
      action = [&] {
        const collide_regime r = as.regime == "central"             ? COLLIDE_REGIME_CENTRAL
                                 : as.regime == "growing_sublinear" ? COLLIDE_REGIME_GROWING_SUBLINEAR
                                                                    : COLLIDE_REGIME_FIXED_C;
        double mean = 0.0, var = 0.0;
        check(collide_moments_approx(as.c, as.n, r, as.alpha0, &mean, &var));
        Output out(common.out);
        out.stream() << "mean,variance\n"
                     << format_real(mean, common.precision) << ',' << format_real(var, common.precision) << '\n';
        return kExitOk;
      };
    });
  }

  // bounds
  BoundArgs bd;
  auto* bounds = app.add_subcommand("bounds", "Concentration bound calculators");
  bounds->require_subcommand(1);
  {
    auto* sub = bounds->add_subcommand("crucial", "P(B/sqrt(2cn) > sqrt(t)) <= c e^{-ct/8}");
    sub->add_option("--c", bd.c)->required();
    sub->add_option("--n", bd.n)->required();
    sub->add_option("--t", bd.t)->required();
    sub->add_option("--K", bd.K, "Regime constant, c <= K n");
    sub->add_option("--variant", bd.variant)->check(CLI::IsMember({"statement", "proof_end"}));
    sub->add_flag("--json", bd.json);
    sub->callback([&] {
      action = [&] {
        collide_bound_query q{bd.variant == "proof_end" ? COLLIDE_BOUND_CRUCIAL_PROOF_END : COLLIDE_BOUND_CRUCIAL,
                              bd.n, 0, bd.c, bd.t, bd.K};
        return run_bound(q, bd, common);
      };
    });
  }
  {
    auto* sub = bounds->add_subcommand("azuma", "exp(-t^2 / (2b)) for either tail of N0");
    sub->add_option("--b", bd.b)->required();
    sub->add_option("--t", bd.t)->required();
    sub->add_option("--side", bd.side)->check(CLI::IsMember({"lower", "upper"}));
    sub->add_flag("--json", bd.json);
    sub->callback([&] {
      action = [&] {
        collide_bound_query q{bd.side == "upper" ? COLLIDE_BOUND_AZUMA_UPPER : COLLIDE_BOUND_AZUMA_LOWER, bd.n, bd.b,
                              0, bd.t, 1.0};
        return run_bound(q, bd, common);
      };
    });
  }
  {
    auto* sub = bounds->add_subcommand("ghosh", "Size-bias tails of C(b, n) about its mean");
    sub->add_option("--n", bd.n)->required();
    sub->add_option("--b", bd.b)->required();
    sub->add_option("--t", bd.t)->required();
    sub->add_option("--side", bd.side)->required()->check(CLI::IsMember({"lower", "upper"}));
    sub->add_flag("--json", bd.json);
    sub->callback([&] {
      action = [&] {
        collide_bound_query q{bd.side == "upper" ? COLLIDE_BOUND_GHOSH_UPPER : COLLIDE_BOUND_GHOSH_LOWER, bd.n, bd.b,
                              0, bd.t, 1.0};
        return run_bound(q, bd, common);
      };
    });
  }
  {
    auto* sub = bounds->add_subcommand("centered", "exp(-min(y, y^2)/104) for |B - beta| >= y sqrt(n)");
    sub->add_option("--y", bd.y)->required();
    sub->add_flag("--json", bd.json);
    sub->callback([&] {
      action = [&] {
        collide_bound_query q{COLLIDE_BOUND_CENTERED, 0, 0, 0, bd.y, 1.0};
        return run_bound(q, bd, common);
      };
    });
  }

  // verify
  std::string config_path;
  bool print_default = false;
  auto* verify = app.add_subcommand("verify", "Run the verification scenarios; JSON report to stdout, table to stderr");
  verify->add_option("--config", config_path, "JSON scenario config (default: built-in)");
  verify->add_flag("--print-default-config", print_default, "Print the built-in config and exit");
  verify->callback([&] { action = [&] { return run_verify(config_path, print_default, common); }; });

  // table
  std::string table_which;
  uint64_t max_c = 5;
  auto* table = app.add_subcommand("table", "Reproduce the gamma(c) and variance-coefficient tables");
  table->add_option("which", table_which, "gamma | variance")->required()->check(CLI::IsMember({"gamma", "variance"}));
  table->add_option("--max-c", max_c, "Largest c");
  table->callback([&] { action = [&] { return run_table(table_which, max_c, common); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n\n" << app.help();
    return kExitUsage;
  }

  try {
    status = action ? action() : kExitUsage;
  } catch (const CallError& e) {
    std::cerr << "error: " << e.message << '\n';
    return kExitUsage;
  }
  return status;
}
