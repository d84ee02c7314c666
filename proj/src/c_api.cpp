#include "collide/collide.h"

#include <cstring>
#include <limits>
#include <new>
#include <string>

#include "collide/asymptotics.hpp"
#include "collide/bounds.hpp"
#include "collide/embedding.hpp"
#include "collide/error.hpp"
#include "collide/occupancy.hpp"
#include "collide/pmf.hpp"
#include "collide/simulate.hpp"
#include "collide/stats.hpp"
#include "collide/verify.hpp"

struct collide_pmf {
  collide::Pmf pmf;
};

struct collide_rng {
  collide::Rng rng;
};

struct collide_path {
  collide::CoupledPath path;
};

namespace {

thread_local std::string last_error;

collide_status to_status(collide::Errc code) {
  switch (code) {
    case collide::Errc::invalid_argument: return COLLIDE_INVALID_ARGUMENT;
    case collide::Errc::resource_limit: return COLLIDE_RESOURCE_LIMIT;
    case collide::Errc::out_of_regime: return COLLIDE_OUT_OF_REGIME;
  }
  return COLLIDE_INTERNAL_ERROR;
}

template <typename F>
collide_status guarded(F&& body) {
  last_error.clear();
  try {
    body();
    return COLLIDE_OK;
  } catch (const collide::Error& e) {
    last_error = e.what();
    return to_status(e.code());
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return COLLIDE_RESOURCE_LIMIT;
  } catch (const std::exception& e) {
    last_error = e.what();
    return COLLIDE_INTERNAL_ERROR;
  }
}

void need(const void* p, const char* what) {
  collide::require(p != nullptr, std::string(what) + " must not be NULL");
}

char* dup_string(const std::string& s) {
  auto* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

collide::DpLimits limits_from(uint64_t max_states) {
  collide::DpLimits limits;
  if (max_states != 0) limits.max_states = max_states;
  return limits;
}

collide::LimitLaw law_from(collide_law law, uint64_t c) {
  switch (law) {
    case COLLIDE_LAW_RAYLEIGH: return collide::LimitLaw::rayleigh();
    case COLLIDE_LAW_CHI_2C: return collide::LimitLaw::chi(c);
    case COLLIDE_LAW_NORMAL: return collide::LimitLaw::normal();
  }
  collide::fail(collide::Errc::invalid_argument, "unknown limit law");
}

template <typename Make>
collide_status make_pmf(collide_pmf** out, Make&& make) {
  return guarded([&] {
    need(out, "out");
    *out = new collide_pmf{make()};
  });
}

}  // namespace

extern "C" {

const char* collide_version(void) { return "0.1.0"; }

const char* collide_last_error(void) { return last_error.c_str(); }

void collide_string_free(char* s) { delete[] s; }

collide_status collide_collision_pmf(uint64_t n, uint64_t b, uint64_t max_states, collide_pmf** out) {
  return make_pmf(out, [&] { return collide::collision_pmf(n, b, limits_from(max_states)); });
}

collide_status collide_occupied_pmf(uint64_t n, uint64_t b, uint64_t max_states, collide_pmf** out) {
  return make_pmf(out, [&] { return collide::occupied_pmf(n, b, limits_from(max_states)); });
}

collide_status collide_balls_needed_pmf(uint64_t n, uint64_t c, uint64_t max_states, collide_pmf** out) {
  return make_pmf(out, [&] { return collide::balls_needed_pmf(n, c, limits_from(max_states)); });
}

collide_status collide_pmf_from_json(const char* json, collide_pmf** out) {
  return make_pmf(out, [&] {
    need(json, "json");
    return collide::Pmf::from_json(json);
  });
}

void collide_pmf_free(collide_pmf* pmf) { delete pmf; }

int64_t collide_pmf_support_min(const collide_pmf* pmf) { return pmf ? pmf->pmf.support_min() : 0; }

size_t collide_pmf_size(const collide_pmf* pmf) { return pmf ? pmf->pmf.size() : 0; }

const double* collide_pmf_masses(const collide_pmf* pmf) { return pmf ? pmf->pmf.masses().data() : nullptr; }

collide_status collide_pmf_moment(const collide_pmf* pmf, unsigned k, double center, double* out) {
  return guarded([&] {
    need(pmf, "pmf");
    need(out, "out");
    collide::require(k >= 1, "moment order must be positive");
    *out = collide::pmf_moment(pmf->pmf, k, center);
  });
}

collide_status collide_pmf_quantile(const collide_pmf* pmf, double p, int64_t* out) {
  return guarded([&] {
    need(pmf, "pmf");
    need(out, "out");
    *out = collide::pmf_quantile(pmf->pmf, p);
  });
}

collide_status collide_pmf_to_json(const collide_pmf* pmf, char** out) {
  return guarded([&] {
    need(pmf, "pmf");
    need(out, "out");
    *out = dup_string(pmf->pmf.to_json());
  });
}

collide_status collide_expected_collisions(uint64_t n, uint64_t b, double* out) {
  return guarded([&] {
    need(out, "out");
    *out = collide::expected_collisions(n, b);
  });
}

collide_status collide_rng_new(uint64_t seed, uint64_t stream, collide_rng** out) {
  return guarded([&] {
    need(out, "out");
    *out = new collide_rng{collide::Rng(collide::Seed{seed, stream})};
  });
}

void collide_rng_free(collide_rng* rng) { delete rng; }

collide_status collide_sample_arrivals(collide_rng* rng, size_t count, double* times) {
  return guarded([&] {
    need(rng, "rng");
    need(times, "times");
    const auto arrivals = collide::sample_arrivals(rng->rng, count);
    std::memcpy(times, arrivals.times().data(), count * sizeof(double));
  });
}

collide_status collide_simulate_throws(collide_rng* rng, uint64_t n, collide_stop_kind stop, uint64_t target,
                                       collide_trajectory_summary* out, uint64_t* first_passages) {
  return guarded([&] {
    need(rng, "rng");
    need(out, "out");
    collide::require(stop == COLLIDE_STOP_BALLS || stop == COLLIDE_STOP_COLLISIONS, "unknown stop rule");
    const auto rule = stop == COLLIDE_STOP_BALLS ? collide::StopRule::after_balls(target)
                                                 : collide::StopRule::at_collisions(target);
    const auto tr = collide::simulate_throws(rng->rng, n, rule);
    *out = collide_trajectory_summary{tr.n, tr.balls, tr.occupied, tr.collisions, tr.empty(),
                                      static_cast<uint64_t>(tr.occupancy.size() - 1)};
    if (first_passages != nullptr && stop == COLLIDE_STOP_COLLISIONS) {
      std::copy(tr.first_passages.begin(), tr.first_passages.end(), first_passages);
    }
  });
}

collide_status collide_sample_balls_needed(collide_rng* rng, uint64_t n, uint64_t c, size_t count, uint64_t* out) {
  return guarded([&] {
    need(rng, "rng");
    need(out, "out");
    collide::ThrowSimulator sim(n);
    for (size_t k = 0; k < count; ++k) out[k] = sim.balls_needed(rng->rng, c);
  });
}

collide_status collide_size_biased_pairs(collide_rng* rng, uint64_t n, uint64_t b, size_t count, uint64_t* c_out,
                                         uint64_t* c_biased_out) {
  return guarded([&] {
    need(rng, "rng");
    need(c_out, "c_out");
    need(c_biased_out, "c_biased_out");
    collide::SizeBiasedSampler sampler(n, b);
    for (size_t k = 0; k < count; ++k) {
      const auto [c, cb] = sampler.sample(rng->rng);
      c_out[k] = c;
      c_biased_out[k] = cb;
    }
  });
}

collide_status collide_f_hazard(double p, double* out) {
  return guarded([&] {
    need(out, "out");
    *out = collide::f_hazard(p);
  });
}

collide_status collide_a_accum(uint64_t i, uint64_t n, double* out) {
  return guarded([&] {
    need(out, "out");
    *out = collide::a_accum(i, n);
  });
}

collide_status collide_embed_path(const double* arrivals, size_t count, uint64_t n, uint64_t c_max,
                                  collide_path** out) {
  return guarded([&] {
    need(arrivals, "arrivals");
    need(out, "out");
    collide::ArrivalSequence seq(std::vector<double>(arrivals, arrivals + count));
    *out = new collide_path{collide::embed_path(seq, n, c_max)};
  });
}

void collide_path_free(collide_path* path) { delete path; }

size_t collide_path_size(const collide_path* path) { return path ? path->path.records.size() : 0; }

collide_status collide_path_record_at(const collide_path* path, size_t index, collide_path_record* out) {
  return guarded([&] {
    need(path, "path");
    need(out, "out");
    collide::require(index < path->path.records.size(), "record index out of range");
    const auto& r = path->path.records[index];
    *out = collide_path_record{r.c, r.balls, r.arrival, r.occupied, r.remainder};
  });
}

collide_status collide_path_to_jsonl(const collide_path* path, char** out) {
  return guarded([&] {
    need(path, "path");
    need(out, "out");
    *out = dup_string(path->path.to_jsonl());
  });
}

collide_status collide_check_sandwich(const collide_path* path, collide_sandwich_summary* out) {
  return guarded([&] {
    need(path, "path");
    need(out, "out");
    const auto report = collide::check_sandwich(path->path);
    constexpr double inf = std::numeric_limits<double>::infinity();
    collide_sandwich_summary s{0, 0, 0, 0, 0, inf, inf, inf};
    for (const auto& e : report.entries) {
      ++s.checked;
      s.lower_violations += !e.lower_ok;
      s.upper_violations += !e.upper_ok;
      s.min_lower_slack = std::min(s.min_lower_slack, e.lower_slack);
      s.min_upper_slack = std::min(s.min_upper_slack, e.upper_slack);
      if (e.combined_applies) {
        ++s.combined_checked;
        s.combined_violations += !e.combined_ok;
        s.min_combined_slack = std::min(s.min_combined_slack, e.combined_slack);
      }
    }
    *out = s;
  });
}

#define COLLIDE_SCALAR(expr) \
  return guarded([&] {               \
    need(out, "out");                \
    *out = (expr);                   \
  })

collide_status collide_gamma_c(uint64_t c, double* out) { COLLIDE_SCALAR(collide::gamma_c(c)); }
collide_status collide_gamma_c_series(uint64_t c, double* out) { COLLIDE_SCALAR(collide::gamma_c_series(c)); }
collide_status collide_w(double x, double* out) { COLLIDE_SCALAR(collide::w_eval(x)); }
collide_status collide_w_inverse(double delta, double* out) { COLLIDE_SCALAR(collide::w_inverse(delta)); }
collide_status collide_beta_center(double c, double n, double* out) { COLLIDE_SCALAR(collide::beta_center(c, n)); }
collide_status collide_d(double x, double* out) { COLLIDE_SCALAR(collide::d_eval(x)); }
collide_status collide_g(double x, double* out) { COLLIDE_SCALAR(collide::g_eval(x)); }
collide_status collide_limit_cdf(collide_law law, uint64_t c, double x, double* out) {
  COLLIDE_SCALAR(collide::limit_cdf(law_from(law, c), x));
}

#undef COLLIDE_SCALAR

collide_status collide_moments_approx(uint64_t c, uint64_t n, collide_regime regime, double alpha0, double* mean,
                                      double* variance) {
  return guarded([&] {
    need(mean, "mean");
    need(variance, "variance");
    collide::Regime r;
    switch (regime) {
      case COLLIDE_REGIME_FIXED_C: r.kind = collide::Regime::Kind::fixed_c; break;
      case COLLIDE_REGIME_GROWING_SUBLINEAR: r.kind = collide::Regime::Kind::growing_sublinear; break;
      case COLLIDE_REGIME_CENTRAL: r.kind = collide::Regime::Kind::central; break;
      default: collide::fail(collide::Errc::invalid_argument, "unknown regime");
    }
    r.alpha0 = alpha0;
    const auto m = collide::moments_approx(c, n, r);
    *mean = m.mean;
    *variance = m.variance;
  });
}

collide_status collide_bound(const collide_bound_query* query, collide_bound_result* out) {
  return guarded([&] {
    need(query, "query");
    need(out, "out");
    collide::require(query->kind >= COLLIDE_BOUND_CRUCIAL && query->kind <= COLLIDE_BOUND_CENTERED,
                     "unknown bound kind");
    collide::BoundQuery q;
    q.kind = static_cast<collide::BoundQuery::Kind>(query->kind);
    q.n = query->n;
    q.b = query->b;
    q.c = query->c;
    q.t = query->t;
    q.K = query->K;
    const auto r = collide::evaluate(q);
    *out = collide_bound_result{r.value, r.raw, r.clamped ? 1 : 0, r.caveat ? 1 : 0};
  });
}

collide_status collide_ks_statistic(const double* samples, size_t count, collide_law law, uint64_t c, double* out) {
  return guarded([&] {
    need(samples, "samples");
    need(out, "out");
    const auto l = law_from(law, c);
    *out = collide::ks_statistic({samples, count}, [&](double x) { return collide::limit_cdf(l, x); });
  });
}

collide_status collide_verify_run(const char* config_json, char** report_json, char** report_table,
                                  int* all_passed) {
  return guarded([&] {
    need(report_json, "report_json");
    const auto config = config_json ? collide::parse_verify_config(config_json) : collide::default_verify_config();
    const auto report = collide::run_verification_suite(config);
    *report_json = dup_string(report.to_json());
    if (report_table) *report_table = dup_string(report.to_table());
    if (all_passed) *all_passed = report.failed() == 0 ? 1 : 0;
  });
}

collide_status collide_verify_default_config(char** out) {
  return guarded([&] {
    need(out, "out");
    *out = dup_string(collide::default_verify_config_json());
  });
}

}  // extern "C"
