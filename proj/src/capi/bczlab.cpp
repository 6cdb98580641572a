/*
   Copyright 2026 The bczlab Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/


#include "bczlab/bczlab.h"

#include <array>
#include <cstring>
#include <functional>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "bcz/errors.hpp"
#include "bcz/farey.hpp"
#include "bcz/lattice.hpp"
#include "bcz/mixing.hpp"
#include "bcz/renormalization.hpp"
#include "bcz/statistics.hpp"
#include "bcz/verification.hpp"

struct bcz_orbit {
  bool exact = false;
  std::vector<std::pair<double, double>> values;
  std::vector<std::array<std::string, 4>> text;  // exact mode only
  std::optional<std::uint64_t> period;
};

struct bcz_point_list {
  struct Row {
    std::int64_t m, n;
    double x, y, slope;
    std::string x_text, y_text, slope_text;
  };
  std::vector<Row> rows;
};

struct bcz_report {
  bcz::RunReport report;
};

struct bcz_series {
  std::vector<double> values;
};

struct bcz_verdict {
  bcz::verify::Verdict verdict;
};

namespace {

thread_local std::string g_last_error;

bcz_status fail(bcz_status status, const char* what) {
  g_last_error = what;
  return status;
}

// Runs fn, translating exceptions into status codes.
template <class Fn>
bcz_status guarded(Fn&& fn) {
  try {
    g_last_error.clear();
    fn();
    return BCZ_OK;
  } catch (const bcz::DomainError& e) {
    return fail(BCZ_ERR_DOMAIN, e.what());
  } catch (const bcz::CoprimalityError& e) {
    return fail(BCZ_ERR_COPRIMALITY, e.what());
  } catch (const bcz::SearchCeilingExceeded& e) {
    return fail(BCZ_ERR_SEARCH_CEILING, e.what());
  } catch (const bcz::IterationCeiling& e) {
    return fail(BCZ_ERR_ITERATION_CEILING, e.what());
  } catch (const bcz::CriterionMismatch& e) {
    return fail(BCZ_ERR_CRITERION_MISMATCH, e.what());
  } catch (const bcz::SlopeCoincidence& e) {
    return fail(BCZ_ERR_SLOPE_COINCIDENCE, e.what());
  } catch (const bcz::OrderError& e) {
    return fail(BCZ_ERR_ORDER, e.what());
  } catch (const bcz::ConfigError& e) {
    return fail(BCZ_ERR_CONFIG, e.what());
  } catch (const std::invalid_argument& e) {
    return fail(BCZ_ERR_INVALID_ARGUMENT, e.what());
  } catch (const std::exception& e) {
    return fail(BCZ_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(BCZ_ERR_INTERNAL, "unknown failure");
  }
}

void require(bool ok, const char* what) {
  if (!ok) throw std::invalid_argument(what);
}

std::string_view text_arg(const char* s, const char* name) {
  if (s == nullptr) throw std::invalid_argument(std::string(name) + " must not be null");
  return s;
}

template <class T>
T scalar(const char* s, const char* name) {
  if constexpr (std::is_same_v<T, bcz::Rational>) {
    return bcz::parse_rational(text_arg(s, name));
  } else {
    return bcz::parse_double(text_arg(s, name));
  }
}

template <class T>
bcz::OmegaPoint<T> point(const char* s, const char* t) {
  return bcz::OmegaPoint<T>(scalar<T>(s, "s"), scalar<T>(t, "t"));
}

// Calls fn with the scalar type picked by the exact flag.
template <class Fn>
void dispatch(int exact, Fn&& fn) {
  if (exact) {
    fn(bcz::Rational{});
  } else {
    fn(double{});
  }
}

void write_text(const std::string& value, char* out, std::size_t len) {
  if (out == nullptr || len == 0) return;
  require(value.size() < len, "output buffer too small");
  std::memcpy(out, value.c_str(), value.size() + 1);
}

bcz::ExperimentSpec to_spec(const bcz_experiment_spec* spec) {
  require(spec != nullptr, "spec must not be null");
  bcz::ExperimentSpec out;
  out.a = spec->a;
  out.b = spec->b;
  out.samples = spec->samples;
  out.seed = spec->seed;
  switch (spec->region) {
    case BCZ_REGION_OMEGA: out.region = bcz::Region::Omega; break;
    case BCZ_REGION_OMEGA_B: out.region = bcz::Region::OmegaB; break;
    case BCZ_REGION_HALF_SECTION: out.region = bcz::Region::HalfSection; break;
    default: throw std::invalid_argument("unknown region");
  }
  return out;
}

bcz_experiment_spec from_spec(const bcz::ExperimentSpec& spec) {
  bcz_experiment_spec out{spec.a, spec.b, spec.samples, spec.seed, BCZ_REGION_OMEGA};
  if (spec.region == bcz::Region::OmegaB) out.region = BCZ_REGION_OMEGA_B;
  if (spec.region == bcz::Region::HalfSection) out.region = BCZ_REGION_HALF_SECTION;
  return out;
}

bcz::Observable observable(bcz_observable f) {
  switch (f) {
    case BCZ_OBS_ZERO: return bcz::Observable::Zero;
    case BCZ_OBS_ONE: return bcz::Observable::One;
    case BCZ_OBS_EXP_S: return bcz::Observable::ExpS;
    case BCZ_OBS_EXP_ST: return bcz::Observable::ExpST;
    case BCZ_OBS_IND_HALF: return bcz::Observable::IndHalf;
  }
  throw std::invalid_argument("unknown observable");
}

template <class T>
bcz_orbit* make_orbit(const bcz::OrbitRecord<T>& rec) {
  auto* out = new bcz_orbit;
  out->exact = bcz::ScalarTraits<T>::exact;
  out->period = rec.period;
  out->values.reserve(rec.points.size());
  for (const auto& p : rec.points) {
    out->values.emplace_back(bcz::to_double(p.s()), bcz::to_double(p.t()));
    if constexpr (bcz::ScalarTraits<T>::exact) {
      out->text.push_back({p.s().get_num().get_str(), p.s().get_den().get_str(),
                           p.t().get_num().get_str(), p.t().get_den().get_str()});
    }
  }
  return out;
}

bcz_status report_out(bcz_report** out, const std::function<bcz::RunReport()>& fn) {
  return guarded([&] {
    require(out != nullptr, "out must not be null");
    *out = new bcz_report{fn()};
  });
}

}  // namespace

extern "C" {

const char* bcz_version(void) { return BCZLAB_VERSION_STRING; }

const char* bcz_status_name(bcz_status status) {
  switch (status) {
    case BCZ_OK: return "ok";
    case BCZ_ERR_DOMAIN: return "domain_error";
    case BCZ_ERR_COPRIMALITY: return "coprimality_error";
    case BCZ_ERR_SEARCH_CEILING: return "search_ceiling_exceeded";
    case BCZ_ERR_ITERATION_CEILING: return "iteration_ceiling";
    case BCZ_ERR_CRITERION_MISMATCH: return "criterion_mismatch";
    case BCZ_ERR_SLOPE_COINCIDENCE: return "slope_coincidence";
    case BCZ_ERR_ORDER: return "order_error";
    case BCZ_ERR_CONFIG: return "config_error";
    case BCZ_ERR_INVALID_ARGUMENT: return "invalid_argument";
    case BCZ_ERR_INTERNAL: return "internal_error";
  }
  return "unknown_status";
}

const char* bcz_last_error(void) { return g_last_error.c_str(); }

bcz_experiment_spec bcz_experiment_spec_default(void) { return from_spec(bcz::ExperimentSpec{}); }

bcz_status bcz_orbit_compute(const char* s, const char* t, uint64_t steps, int exact,
                             bcz_orbit** out) {
  return guarded([&] {
    require(out != nullptr, "out must not be null");
    dispatch(exact, [&](auto tag) {
      using T = decltype(tag);
      *out = make_orbit(bcz::bcz_orbit(point<T>(s, t), steps));
    });
  });
}

bcz_status bcz_farey_orbit(uint64_t q, bcz_orbit** out) {
  return guarded([&] {
    require(out != nullptr, "out must not be null");
    bcz::OrbitRecord<bcz::Rational> rec;
    rec.points = bcz::farey_section_orbit(q);
    rec.period = rec.points.size();
    *out = make_orbit(rec);
  });
}

void bcz_orbit_free(bcz_orbit* orbit) { delete orbit; }

size_t bcz_orbit_size(const bcz_orbit* orbit) { return orbit ? orbit->values.size() : 0; }

int bcz_orbit_is_exact(const bcz_orbit* orbit) { return orbit && orbit->exact ? 1 : 0; }

int bcz_orbit_period(const bcz_orbit* orbit, uint64_t* period) {
  if (orbit == nullptr || !orbit->period) return 0;
  if (period) *period = *orbit->period;
  return 1;
}

bcz_status bcz_orbit_point(const bcz_orbit* orbit, size_t i, double* s, double* t) {
  return guarded([&] {
    require(orbit != nullptr && i < orbit->values.size(), "orbit index out of range");
    if (s) *s = orbit->values[i].first;
    if (t) *t = orbit->values[i].second;
  });
}

bcz_status bcz_orbit_point_exact(const bcz_orbit* orbit, size_t i, const char** s_num,
                                 const char** s_den, const char** t_num, const char** t_den) {
  return guarded([&] {
    require(orbit != nullptr && i < orbit->values.size(), "orbit index out of range");
    require(orbit->exact, "orbit was computed in float mode");
    const auto& row = orbit->text[i];
    if (s_num) *s_num = row[0].c_str();
    if (s_den) *s_den = row[1].c_str();
    if (t_num) *t_num = row[2].c_str();
    if (t_den) *t_den = row[3].c_str();
  });
}

bcz_status bcz_enumerate_primitive(const char* s, const char* t, int exact, const char* x_lo,
                                   const char* x_hi, const char* slope_max,
                                   bcz_point_list** out) {
  return guarded([&] {
    require(out != nullptr, "out must not be null");
    dispatch(exact, [&](auto tag) {
      using T = decltype(tag);
      const auto pts = bcz::enumerate_primitive(point<T>(s, t), scalar<T>(x_lo, "x_lo"),
                                                scalar<T>(x_hi, "x_hi"),
                                                scalar<T>(slope_max, "slope_max"));
      auto list = std::make_unique<bcz_point_list>();
      for (const auto& p : pts) {
        const T slope = p.slope ? *p.slope : T(p.y / p.x);
        list->rows.push_back({p.m, p.n, bcz::to_double(p.x), bcz::to_double(p.y),
                              bcz::to_double(slope), bcz::to_string(p.x), bcz::to_string(p.y),
                              bcz::to_string(slope)});
      }
      *out = list.release();
    });
  });
}

void bcz_point_list_free(bcz_point_list* list) { delete list; }

size_t bcz_point_list_size(const bcz_point_list* list) { return list ? list->rows.size() : 0; }

bcz_status bcz_point_list_get(const bcz_point_list* list, size_t i, int64_t* m, int64_t* n,
                              double* x, double* y, double* slope) {
  return guarded([&] {
    require(list != nullptr && i < list->rows.size(), "point index out of range");
    const auto& r = list->rows[i];
    if (m) *m = r.m;
    if (n) *n = r.n;
    if (x) *x = r.x;
    if (y) *y = r.y;
    if (slope) *slope = r.slope;
  });
}

bcz_status bcz_point_list_get_text(const bcz_point_list* list, size_t i, const char** x,
                                   const char** y, const char** slope) {
  return guarded([&] {
    require(list != nullptr && i < list->rows.size(), "point index out of range");
    const auto& r = list->rows[i];
    if (x) *x = r.x_text.c_str();
    if (y) *y = r.y_text.c_str();
    if (slope) *slope = r.slope_text.c_str();
  });
}

bcz_status bcz_box_count(const char* s, const char* t, int exact, const char* x_lo,
                         const char* x_hi, const char* y_max, uint64_t* count) {
  return guarded([&] {
    require(count != nullptr, "count must not be null");
    dispatch(exact, [&](auto tag) {
      using T = decltype(tag);
      const bcz::BoxSpec<T> box(scalar<T>(x_lo, "x_lo"), scalar<T>(x_hi, "x_hi"),
                                scalar<T>(y_max, "y_max"));
      *count = bcz::box_count(point<T>(s, t), box);
    });
  });
}

bcz_status bcz_nth_slope(const char* s, const char* t, int exact, uint64_t n, const char* x_max,
                         double* value, char* text, size_t text_len) {
  return guarded([&] {
    dispatch(exact, [&](auto tag) {
      using T = decltype(tag);
      const T v = bcz::nth_slope(point<T>(s, t), n, scalar<T>(x_max, "x_max"));
      if (value) *value = bcz::to_double(v);
      write_text(bcz::to_string(v), text, text_len);
    });
  });
}

bcz_status bcz_phi(const char* s, const char* t, const char* b, int exact, int inverse,
                   char* s_out, size_t s_len, char* t_out, size_t t_len) {
  return guarded([&] {
    dispatch(exact, [&](auto tag) {
      using T = decltype(tag);
      const bcz::SectionConfig<T> cfg(scalar<T>(b, "b"));
      const auto p = point<T>(s, t);
      const auto q = inverse ? bcz::phi_inverse(p, cfg) : bcz::phi(p, cfg);
      write_text(bcz::to_string(q.s()), s_out, s_len);
      write_text(bcz::to_string(q.t()), t_out, t_len);
    });
  });
}

bcz_status bcz_return_index(const char* s, const char* t, const char* b, int exact, uint64_t n,
                            uint64_t* total_steps, double* land_s, double* land_t) {
  return guarded([&] {
    dispatch(exact, [&](auto tag) {
      using T = decltype(tag);
      const bcz::SectionConfig<T> cfg(scalar<T>(b, "b"));
      const auto rec = bcz::return_index(point<T>(s, t), cfg, n);
      if (total_steps) *total_steps = rec.total_steps;
      if (land_s) *land_s = bcz::to_double(rec.landing.s());
      if (land_t) *land_t = bcz::to_double(rec.landing.t());
    });
  });
}

bcz_status bcz_plus_one_event(const char* s, const char* t, const char* b, int exact, uint64_t n,
                              int* event) {
  return guarded([&] {
    require(event != nullptr, "event must not be null");
    dispatch(exact, [&](auto tag) {
      using T = decltype(tag);
      const bcz::SectionConfig<T> cfg(scalar<T>(b, "b"));
      *event = bcz::plus_one_event(point<T>(s, t), cfg, n) ? 1 : 0;
    });
  });
}

bcz_status bcz_claim_integral(bcz_claim which, const bcz_experiment_spec* spec,
                              bcz_report** out) {
  return report_out(out, [&] {
    require(which == BCZ_CLAIM_F1 || which == BCZ_CLAIM_F2_EXCESS, "unknown claim");
    return bcz::claim_integral(which == BCZ_CLAIM_F1 ? bcz::ClaimKind::F1 : bcz::ClaimKind::F2Excess,
                               to_spec(spec));
  });
}

bcz_status bcz_g0_fraction(const bcz_experiment_spec* spec, bcz_report** out) {
  return report_out(out, [&] { return bcz::g0_fraction(to_spec(spec)); });
}

bcz_status bcz_plus_one_fraction(const bcz_experiment_spec* spec, bcz_report** out) {
  return report_out(out, [&] { return bcz::plus_one_fraction(to_spec(spec)); });
}

bcz_status bcz_invariance_test(const bcz_experiment_spec* spec, uint32_t bins, uint32_t iterates,
                               int skewed, bcz_report** out) {
  return report_out(out, [&] {
    return bcz::invariance_histogram_test(
        to_spec(spec), bins, iterates,
        skewed ? bcz::SamplerKind::SquaredSBiased : bcz::SamplerKind::Uniform);
  });
}

void bcz_report_free(bcz_report* report) { delete report; }
const char* bcz_report_name(const bcz_report* r) { return r ? r->report.name.c_str() : ""; }
double bcz_report_estimate(const bcz_report* r) { return r ? r->report.estimate : 0.0; }
double bcz_report_stderr(const bcz_report* r) { return r ? r->report.std_error : 0.0; }
double bcz_report_threshold(const bcz_report* r) { return r ? r->report.threshold : 0.0; }
int bcz_report_at_least(const bcz_report* r) {
  return r && r->report.comparison == bcz::Comparison::AtLeast ? 1 : 0;
}
int bcz_report_pass(const bcz_report* r) { return r && r->report.pass ? 1 : 0; }
uint64_t bcz_report_samples(const bcz_report* r) { return r ? r->report.samples_used : 0; }
double bcz_report_wall_seconds(const bcz_report* r) { return r ? r->report.wall_seconds : 0.0; }
bcz_experiment_spec bcz_report_spec(const bcz_report* r) {
  return from_spec(r ? r->report.spec : bcz::ExperimentSpec{});
}
size_t bcz_report_extra_count(const bcz_report* r) { return r ? r->report.extras.size() : 0; }
const char* bcz_report_extra_key(const bcz_report* r, size_t i) {
  return r && i < r->report.extras.size() ? r->report.extras[i].first.c_str() : "";
}
double bcz_report_extra_value(const bcz_report* r, size_t i) {
  return r && i < r->report.extras.size() ? r->report.extras[i].second : 0.0;
}

bcz_status bcz_sample_point(bcz_region region, double b, uint64_t seed, uint64_t i, double* s,
                            double* t) {
  return guarded([&] {
    bcz_experiment_spec spec{0.25, b, 1, seed, region};
    bcz::ExperimentSpec cpp = to_spec(&spec);
    const auto p = bcz::RegionSampler(cpp.region, b, seed)(i);
    if (s) *s = p.s();
    if (t) *t = p.t();
  });
}

bcz_status bcz_birkhoff_slope_rate(const char* s, const char* t, int exact, uint64_t n,
                                   const char* x_max, double* rate) {
  return guarded([&] {
    require(rate != nullptr, "rate must not be null");
    dispatch(exact, [&](auto tag) {
      using T = decltype(tag);
      *rate = bcz::birkhoff_slope_rate(point<T>(s, t), n, scalar<T>(x_max, "x_max"));
    });
  });
}

bcz_status bcz_coprime_density(int64_t m, double* density) {
  return guarded([&] {
    require(density != nullptr, "density must not be null");
    *density = bcz::coprime_density(m);
  });
}

bcz_status bcz_correlation_cesaro(bcz_observable f, bcz_observable g, const char* s,
                                  const char* t, int exact, uint64_t n, uint64_t lags,
                                  bcz_series** out, int* decaying) {
  return guarded([&] {
    require(out != nullptr, "out must not be null");
    dispatch(exact, [&](auto tag) {
      using T = decltype(tag);
      auto res = bcz::correlation_cesaro(observable(f), observable(g), point<T>(s, t), n, lags);
      if (decaying) *decaying = res.decaying ? 1 : 0;
      *out = new bcz_series{std::move(res.averages)};
    });
  });
}

bcz_status bcz_weyl_scan(bcz_observable f, int centered, const char* s, const char* t, int exact,
                         uint64_t n, uint64_t theta_count, double* max_magnitude,
                         double* argmax_theta) {
  return guarded([&] {
    require(theta_count >= 1, "theta_count must be at least 1");
    dispatch(exact, [&](auto tag) {
      using T = decltype(tag);
      const auto res = bcz::weyl_scan(bcz::ObservableSpec{observable(f), centered != 0},
                                      point<T>(s, t), n, bcz::uniform_theta_grid(theta_count));
      if (max_magnitude) *max_magnitude = res.max_magnitude;
      if (argmax_theta) *argmax_theta = res.argmax_theta;
    });
  });
}

void bcz_series_free(bcz_series* series) { delete series; }
size_t bcz_series_size(const bcz_series* series) { return series ? series->values.size() : 0; }
const double* bcz_series_data(const bcz_series* series) {
  return series && !series->values.empty() ? series->values.data() : nullptr;
}

size_t bcz_verify_count(void) { return bcz::verify::acceptance_criteria().size(); }

int bcz_verify_id(size_t i) {
  const auto& all = bcz::verify::acceptance_criteria();
  return i < all.size() ? all[i].id : -1;
}

bcz_status bcz_verify_run(int id, bcz_verdict** out) {
  return guarded([&] {
    require(out != nullptr, "out must not be null");
    *out = new bcz_verdict{bcz::verify::run_criterion(id)};
  });
}

bcz_status bcz_verify_run_suite(bcz_verdict_callback callback, void* user, int* all_pass) {
  return guarded([&] {
    bool ok = true;
    bcz::verify::run_suite([&](const bcz::verify::Verdict& v) {
      ok = ok && v.pass;
      if (callback) {
        const bcz_verdict wrapped{v};
        callback(&wrapped, user);
      }
    });
    if (all_pass) *all_pass = ok ? 1 : 0;
  });
}

void bcz_verdict_free(bcz_verdict* verdict) { delete verdict; }
int bcz_verdict_id(const bcz_verdict* v) { return v ? v->verdict.id : 0; }
const char* bcz_verdict_title(const bcz_verdict* v) { return v ? v->verdict.title.c_str() : ""; }
int bcz_verdict_pass(const bcz_verdict* v) { return v && v->verdict.pass ? 1 : 0; }
const char* bcz_verdict_detail(const bcz_verdict* v) { return v ? v->verdict.detail.c_str() : ""; }
double bcz_verdict_seconds(const bcz_verdict* v) { return v ? v->verdict.seconds : 0.0; }

}  // extern "C"
