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


// bczlab command-line harness. Links only the C API.

#include <bczlab/bczlab.h>

#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

namespace {

using nlohmann::ordered_json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Library failure; carries the status so argument problems map to exit 2.
struct LibraryError : std::runtime_error {
  LibraryError(bcz_status s, const std::string& what) : std::runtime_error(what), status(s) {}
  bcz_status status;
};

void check(bcz_status s) {
  if (s != BCZ_OK) throw LibraryError(s, std::string(bcz_status_name(s)) + ": " + bcz_last_error());
}

struct OptSpec {
  std::string name;
  std::string help;
  std::optional<std::string> fallback;  // default value
  bool flag = false;
};

struct CommandSpec {
  std::string name;
  std::string help;
  std::vector<OptSpec> options;
  std::string default_format;
};

const std::vector<CommandSpec>& commands() {
  static const std::vector<CommandSpec> all{
      {"orbit",
       "Orbit of (s, t) under the BCZ map",
       {{"s", "first coordinate (p/q or decimal)", std::nullopt},
        {"t", "second coordinate (p/q or decimal)", std::nullopt},
        {"steps", "number of steps", "10"},
        {"exact", "exact rational arithmetic", std::nullopt, true}},
       "csv"},
      {"farey",
       "Exact orbit of (1/Q, 1), one period",
       {{"Q", "Farey order", std::nullopt}},
       "csv"},
      {"invariance",
       "Histogram invariance test of the normalized area",
       {{"samples", "sample count", "1000000"},
        {"seed", "random seed", "1"},
        {"bins", "bins per axis", "16"},
        {"iterates", "number of map applications", "5"},
        {"skewed", "use the s^2-biased sampler (negative control)", std::nullopt, true}},
       "json"},
      {"geometry",
       "Primitive lattice points of (s, t) in slope order",
       {{"s", "first coordinate", std::nullopt},
        {"t", "second coordinate", std::nullopt},
        {"exact", "exact rational arithmetic", std::nullopt, true},
        {"x-lo", "lower x bound (exclusive)", "0"},
        {"x-hi", "upper x bound (inclusive)", "1"},
        {"slope-max", "largest slope", "10"}},
       "csv"},
      {"claims",
       "Monte Carlo claim integrals over the half-section",
       {{"which", "F1 or F2", std::nullopt},
        {"a", "scale parameter a", "0.25"},
        {"b", "shrink parameter b", "0.001"},
        {"samples", "sample count", "100000"},
        {"seed", "random seed", "1"}},
       "json"},
      {"return-times",
       "Return-time statistics on the shrunken section",
       {{"which", "g0 or plus-one", std::nullopt},
        {"a", "scale parameter a", "0.25"},
        {"b", "shrink parameter b", "0.001"},
        {"samples", "sample count", "10000"},
        {"seed", "random seed", "1"}},
       "json"},
      {"mixing",
       "Cesaro averages of correlations along one orbit",
       {{"s", "first coordinate (default: random point from seed)", std::nullopt},
        {"t", "second coordinate", std::nullopt},
        {"exact", "exact rational arithmetic", std::nullopt, true},
        {"seed", "seed for the random start point", "1"},
        {"N", "orbit length", "1000000"},
        {"H", "number of lags", "10000"},
        {"observable", "zero, one, exp_s, exp_st or ind_half", "exp_s"}},
       "json"},
      {"scan-eigenvalues",
       "Weyl sums of a mean-removed observable over a theta grid",
       {{"s", "first coordinate (default: random point from seed)", std::nullopt},
        {"t", "second coordinate", std::nullopt},
        {"exact", "exact rational arithmetic", std::nullopt, true},
        {"seed", "seed for the random start point", "1"},
        {"N", "orbit length", "1000000"},
        {"thetas", "grid size", "1000"},
        {"observable", "zero, one, exp_s, exp_st or ind_half", "exp_s"}},
       "json"},
      {"verify-all",
       "Run the acceptance suite",
       {{"only", "run a single criterion by id", std::nullopt}},
       "json"},
  };
  return all;
}

const CommandSpec& command_spec(const std::string& name) {
  for (const auto& c : commands()) {
    if (c.name == name) return c;
  }
  throw UsageError("unknown command '" + name + "'");
}

// Merged configuration: flags over config file over defaults.
class Params {
 public:
  Params(const CommandSpec& cmd, std::map<std::string, std::string> values)
      : cmd_(&cmd), values_(std::move(values)) {}

  const CommandSpec& command() const { return *cmd_; }
  bool has(const std::string& key) const { return values_.count(key) > 0; }

  const std::string& text(const std::string& key) const {
    auto it = values_.find(key);
    if (it == values_.end()) throw UsageError("missing required parameter --" + key);
    return it->second;
  }
  std::optional<std::string> maybe(const std::string& key) const {
    auto it = values_.find(key);
    return it == values_.end() ? std::nullopt : std::optional<std::string>(it->second);
  }
  bool flag(const std::string& key) const { return has(key) && values_.at(key) == "true"; }

  double real(const std::string& key) const {
    const std::string& v = text(key);
    const auto slash = v.find('/');
    try {
      std::size_t used = 0;
      if (slash == std::string::npos) {
        const double x = std::stod(v, &used);
        if (used == v.size() && std::isfinite(x)) return x;
      } else {
        const double p = std::stod(v.substr(0, slash), &used);
        std::size_t used2 = 0;
        const double q = std::stod(v.substr(slash + 1), &used2);
        if (used == slash && used2 == v.size() - slash - 1 && q != 0) return p / q;
      }
    } catch (const std::exception&) {
    }
    throw UsageError("--" + key + " expects a number, got '" + v + "'");
  }

  std::uint64_t count(const std::string& key) const {
    const std::string& v = text(key);
    std::uint64_t out = 0;
    const auto res = std::from_chars(v.data(), v.data() + v.size(), out);
    if (res.ec == std::errc() && res.ptr == v.data() + v.size()) return out;
    // Also accept integral scientific notation such as 1e5.
    try {
      std::size_t used = 0;
      const double x = std::stod(v, &used);
      if (used == v.size() && x >= 0 && x <= 9007199254740992.0 && std::floor(x) == x) {
        return static_cast<std::uint64_t>(x);
      }
    } catch (const std::exception&) {
    }
    throw UsageError("--" + key + " expects a non-negative integer, got '" + v + "'");
  }

  ordered_json echo() const {
    ordered_json out = ordered_json::object();
    out["command"] = cmd_->name;
    for (const auto& opt : cmd_->options) {
      auto it = values_.find(opt.name);
      if (it == values_.end()) continue;
      if (opt.flag) {
        out[opt.name] = it->second == "true";
      } else {
        out[opt.name] = it->second;
      }
    }
    return out;
  }

 private:
  const CommandSpec* cmd_;
  std::map<std::string, std::string> values_;
};

std::string json_scalar_text(const std::string& key, const ordered_json& v, bool flag) {
  if (flag) {
    if (!v.is_boolean()) throw UsageError("config key '" + key + "' expects true or false");
    return v.get<bool>() ? "true" : "false";
  }
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_integer() || v.is_number_unsigned()) return v.dump();
  if (v.is_number_float()) return v.dump();
  throw UsageError("config key '" + key + "' expects a string or a number");
}

ordered_json load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read config file '" + path + "'");
  ordered_json j;
  try {
    j = ordered_json::parse(in);
  } catch (const std::exception& e) {
    throw UsageError("config file '" + path + "' is not valid JSON");
  }
  if (!j.is_object()) throw UsageError("config file must hold a flat JSON object");
  return j;
}

std::string shortest(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

// ---- validation helpers ----------------------------------------------

void require_unit_interval(const Params& p, const std::string& key) {
  const double v = p.real(key);
  if (!(v > 0 && v <= 1)) throw UsageError(key + " outside (0,1]");
}

void validate_point(const Params& p, bool optional) {
  if (optional && !p.has("s") && !p.has("t")) return;
  require_unit_interval(p, "s");
  require_unit_interval(p, "t");
  if (!(p.real("s") + p.real("t") > 1)) throw UsageError("(s, t) outside the Farey triangle: s + t must exceed 1");
}

void validate_ab(const Params& p) {
  const double a = p.real("a");
  const double b = p.real("b");
  if (!(a > 0 && a < 1)) throw UsageError("a outside (0,1)");
  if (!(b > 0 && b < a)) throw UsageError("b outside (0,a)");
  if (p.count("samples") < 1) throw UsageError("samples must be at least 1");
  p.count("seed");
}

bcz_observable observable(const Params& p) {
  const std::string v = p.text("observable");
  if (v == "zero") return BCZ_OBS_ZERO;
  if (v == "one") return BCZ_OBS_ONE;
  if (v == "exp_s") return BCZ_OBS_EXP_S;
  if (v == "exp_st") return BCZ_OBS_EXP_ST;
  if (v == "ind_half") return BCZ_OBS_IND_HALF;
  throw UsageError("unknown observable '" + v + "'");
}

void validate(const Params& p) {
  const std::string& c = p.command().name;
  if (c == "orbit") {
    validate_point(p, false);
    p.count("steps");
  } else if (c == "farey") {
    if (p.count("Q") < 1) throw UsageError("Q must be at least 1");
  } else if (c == "invariance") {
    if (p.count("samples") < 1) throw UsageError("samples must be at least 1");
    if (p.count("bins") < 4) throw UsageError("bins must be at least 4");
    p.count("iterates");
    p.count("seed");
  } else if (c == "geometry") {
    validate_point(p, false);
    p.real("x-lo");
    p.real("x-hi");
    p.real("slope-max");
  } else if (c == "claims") {
    const auto w = p.text("which");
    if (w != "F1" && w != "F2") throw UsageError("--which must be F1 or F2");
    validate_ab(p);
  } else if (c == "return-times") {
    const auto w = p.text("which");
    if (w != "g0" && w != "plus-one") throw UsageError("--which must be g0 or plus-one");
    validate_ab(p);
  } else if (c == "mixing" || c == "scan-eigenvalues") {
    validate_point(p, true);
    p.count("seed");
    if (p.count("N") < 1) throw UsageError("N must be at least 1");
    if (c == "mixing" && p.count("H") < 1) throw UsageError("H must be at least 1");
    if (c == "scan-eigenvalues" && p.count("thetas") < 1) throw UsageError("thetas must be at least 1");
    observable(p);
  } else if (c == "verify-all") {
    if (p.has("only")) {
      const auto id = p.count("only");
      bool known = false;
      for (std::size_t i = 0; i < bcz_verify_count(); ++i) {
        known = known || bcz_verify_id(i) == static_cast<int>(id);
      }
      if (!known) throw UsageError("no acceptance criterion with id " + std::to_string(id));
    }
  }
}

// ---- output -----------------------------------------------------------

struct Outcome {
  std::string body;     // CSV text or the JSON body
  ordered_json header;  // JSON only
  bool pass = true;
};

std::string render(const Outcome& out, const std::string& format) {
  if (format == "csv") return out.body;
  ordered_json doc = ordered_json::object();
  doc["header"] = out.header;
  doc["body"] = ordered_json::parse(out.body);
  return doc.dump(2) + "\n";
}

void write_atomically(const std::string& path, const std::string& content) {
  namespace fs = std::filesystem;
  const fs::path target(path);
  const fs::path temp = target.string() + ".partial";
  try {
    {
      std::ofstream f(temp, std::ios::binary | std::ios::trunc);
      if (!f) throw std::runtime_error("cannot open '" + temp.string() + "' for writing");
      f << content;
      f.flush();
      if (!f) throw std::runtime_error("write to '" + temp.string() + "' failed");
    }
    fs::rename(temp, target);
  } catch (...) {
    std::error_code ec;
    fs::remove(temp, ec);
    throw;
  }
}

ordered_json report_body(const bcz_report* r) {
  ordered_json body = ordered_json::object();
  const auto spec = bcz_report_spec(r);
  body["name"] = bcz_report_name(r);
  body["estimate"] = bcz_report_estimate(r);
  body["stderr"] = bcz_report_stderr(r);
  body["threshold"] = bcz_report_threshold(r);
  body["comparison"] = bcz_report_at_least(r) ? "at_least" : "at_most";
  body["pass"] = bcz_report_pass(r) != 0;
  body["seed"] = spec.seed;
  body["samples"] = bcz_report_samples(r);
  body["a"] = spec.a;
  body["b"] = spec.b;
  ordered_json extras = ordered_json::object();
  for (std::size_t i = 0; i < bcz_report_extra_count(r); ++i) {
    extras[bcz_report_extra_key(r, i)] = bcz_report_extra_value(r, i);
  }
  body["extras"] = extras;
  return body;
}

struct ReportHandle {
  bcz_report* r = nullptr;
  ~ReportHandle() { bcz_report_free(r); }
};

Outcome from_report(const bcz_report* r) {
  Outcome out;
  out.body = report_body(r).dump();
  out.pass = bcz_report_pass(r) != 0;
  return out;
}

// ---- commands ---------------------------------------------------------

struct OrbitHandle {
  bcz_orbit* o = nullptr;
  ~OrbitHandle() { bcz_orbit_free(o); }
};

Outcome orbit_outcome(const bcz_orbit* o, const std::string& format) {
  Outcome out;
  const bool exact = bcz_orbit_is_exact(o) != 0;
  const std::size_t n = bcz_orbit_size(o);
  if (format == "csv") {
    std::string csv = exact ? "step,s_num,s_den,t_num,t_den\n" : "step,s,t\n";
    for (std::size_t i = 0; i < n; ++i) {
      csv += std::to_string(i);
      if (exact) {
        const char *sn, *sd, *tn, *td;
        check(bcz_orbit_point_exact(o, i, &sn, &sd, &tn, &td));
        csv += std::string(",") + sn + "," + sd + "," + tn + "," + td + "\n";
      } else {
        double s, t;
        check(bcz_orbit_point(o, i, &s, &t));
        csv += "," + shortest(s) + "," + shortest(t) + "\n";
      }
    }
    out.body = csv;
    return out;
  }
  ordered_json rows = ordered_json::array();
  for (std::size_t i = 0; i < n; ++i) {
    if (exact) {
      const char *sn, *sd, *tn, *td;
      check(bcz_orbit_point_exact(o, i, &sn, &sd, &tn, &td));
      rows.push_back({{"step", i}, {"s_num", sn}, {"s_den", sd}, {"t_num", tn}, {"t_den", td}});
    } else {
      double s, t;
      check(bcz_orbit_point(o, i, &s, &t));
      rows.push_back({{"step", i}, {"s", s}, {"t", t}});
    }
  }
  ordered_json body = {{"exact", exact}, {"rows", rows}};
  std::uint64_t period = 0;
  if (bcz_orbit_period(o, &period)) body["period"] = period;
  out.body = body.dump();
  return out;
}

Outcome run_orbit(const Params& p, const std::string& format) {
  OrbitHandle h;
  check(bcz_orbit_compute(p.text("s").c_str(), p.text("t").c_str(), p.count("steps"),
                          p.flag("exact"), &h.o));
  return orbit_outcome(h.o, format);
}

Outcome run_farey(const Params& p, const std::string& format) {
  OrbitHandle h;
  check(bcz_farey_orbit(p.count("Q"), &h.o));
  return orbit_outcome(h.o, format);
}

std::pair<std::string, std::string> split_ratio(const std::string& v) {
  const auto slash = v.find('/');
  if (slash == std::string::npos) return {v, "1"};
  return {v.substr(0, slash), v.substr(slash + 1)};
}

Outcome run_geometry(const Params& p, const std::string& format) {
  struct ListHandle {
    bcz_point_list* l = nullptr;
    ~ListHandle() { bcz_point_list_free(l); }
  } h;
  const bool exact = p.flag("exact");
  check(bcz_enumerate_primitive(p.text("s").c_str(), p.text("t").c_str(), exact,
                                p.text("x-lo").c_str(), p.text("x-hi").c_str(),
                                p.text("slope-max").c_str(), &h.l));
  const std::size_t n = bcz_point_list_size(h.l);
  Outcome out;
  std::string csv = exact ? "m,n,x_num,x_den,y_num,y_den,slope_num,slope_den\n" : "m,n,x,y,slope\n";
  ordered_json rows = ordered_json::array();
  for (std::size_t i = 0; i < n; ++i) {
    std::int64_t m, nn;
    double x, y, slope;
    check(bcz_point_list_get(h.l, i, &m, &nn, &x, &y, &slope));
    if (exact) {
      const char *xt, *yt, *st;
      check(bcz_point_list_get_text(h.l, i, &xt, &yt, &st));
      const auto [xn, xd] = split_ratio(xt);
      const auto [yn, yd] = split_ratio(yt);
      const auto [sn, sd] = split_ratio(st);
      csv += std::to_string(m) + "," + std::to_string(nn) + "," + xn + "," + xd + "," + yn + "," +
             yd + "," + sn + "," + sd + "\n";
      rows.push_back({{"m", m}, {"n", nn}, {"x", xt}, {"y", yt}, {"slope", st}});
    } else {
      csv += std::to_string(m) + "," + std::to_string(nn) + "," + shortest(x) + "," + shortest(y) +
             "," + shortest(slope) + "\n";
      rows.push_back({{"m", m}, {"n", nn}, {"x", x}, {"y", y}, {"slope", slope}});
    }
  }
  out.body = format == "csv" ? csv : ordered_json({{"exact", exact}, {"rows", rows}}).dump();
  return out;
}

bcz_experiment_spec experiment(const Params& p, bcz_region region) {
  bcz_experiment_spec spec = bcz_experiment_spec_default();
  spec.a = p.real("a");
  spec.b = p.real("b");
  spec.samples = p.count("samples");
  spec.seed = p.count("seed");
  spec.region = region;
  return spec;
}

Outcome run_claims(const Params& p) {
  ReportHandle h;
  const auto spec = experiment(p, BCZ_REGION_HALF_SECTION);
  check(bcz_claim_integral(p.text("which") == "F1" ? BCZ_CLAIM_F1 : BCZ_CLAIM_F2_EXCESS, &spec, &h.r));
  return from_report(h.r);
}

Outcome run_return_times(const Params& p) {
  ReportHandle h;
  const auto spec = experiment(p, BCZ_REGION_OMEGA_B);
  if (p.text("which") == "g0") {
    check(bcz_g0_fraction(&spec, &h.r));
  } else {
    check(bcz_plus_one_fraction(&spec, &h.r));
  }
  return from_report(h.r);
}

Outcome run_invariance(const Params& p) {
  ReportHandle h;
  bcz_experiment_spec spec = bcz_experiment_spec_default();
  spec.samples = p.count("samples");
  spec.seed = p.count("seed");
  spec.region = BCZ_REGION_OMEGA;
  check(bcz_invariance_test(&spec, static_cast<std::uint32_t>(p.count("bins")),
                            static_cast<std::uint32_t>(p.count("iterates")), p.flag("skewed"), &h.r));
  Outcome out;
  auto body = report_body(h.r);
  body.erase("a");
  body.erase("b");
  out.body = body.dump();
  out.pass = bcz_report_pass(h.r) != 0;
  return out;
}

// Start point for the orbit diagnostics: explicit, or sample 0 of the seed.
std::pair<std::string, std::string> start_point(const Params& p) {
  if (p.has("s")) return {p.text("s"), p.text("t")};
  double s, t;
  check(bcz_sample_point(BCZ_REGION_OMEGA, 0.0, p.count("seed"), 0, &s, &t));
  return {shortest(s), shortest(t)};
}

Outcome run_mixing(const Params& p, const std::string& format) {
  struct SeriesHandle {
    bcz_series* s = nullptr;
    ~SeriesHandle() { bcz_series_free(s); }
  } h;
  const auto [s, t] = start_point(p);
  const auto f = observable(p);
  const std::uint64_t lags = p.count("H");
  int decaying = 0;
  check(bcz_correlation_cesaro(f, f, s.c_str(), t.c_str(), p.flag("exact"), p.count("N"), lags,
                               &h.s, &decaying));
  const double* avg = bcz_series_data(h.s);
  const std::size_t n = bcz_series_size(h.s);
  Outcome out;
  if (format == "csv") {
    std::string csv = "h,cesaro_average\n";
    for (std::size_t i = 0; i < n; ++i) csv += std::to_string(i + 1) + "," + shortest(avg[i]) + "\n";
    out.body = csv;
    out.pass = true;
    return out;
  }
  const std::size_t ref = std::min<std::size_t>(n, 100);
  const double ratio = avg[ref - 1] > 0 ? avg[n - 1] / avg[ref - 1] : 0.0;
  ordered_json body = ordered_json::object();
  body["name"] = "cesaro_decay";
  body["estimate"] = ratio;
  body["stderr"] = nullptr;
  body["threshold"] = 0.5;
  body["comparison"] = "at_most";
  body["pass"] = decaying != 0;
  body["seed"] = p.count("seed");
  body["samples"] = p.count("N");
  body["s"] = s;
  body["t"] = t;
  body["extras"] = {{"lags", lags}, {"average_at_100", avg[ref - 1]}, {"average_at_H", avg[n - 1]}};
  out.body = body.dump();
  out.pass = decaying != 0;
  return out;
}

Outcome run_scan(const Params& p) {
  const auto [s, t] = start_point(p);
  double max_mag = 0, argmax = 0;
  check(bcz_weyl_scan(observable(p), 1, s.c_str(), t.c_str(), p.flag("exact"), p.count("N"),
                      p.count("thetas"), &max_mag, &argmax));
  ordered_json body = ordered_json::object();
  body["name"] = "weyl_scan";
  body["estimate"] = max_mag;
  body["stderr"] = nullptr;
  body["threshold"] = 0.05;
  body["comparison"] = "at_most";
  body["pass"] = max_mag <= 0.05;
  body["seed"] = p.count("seed");
  body["samples"] = p.count("N");
  body["s"] = s;
  body["t"] = t;
  body["extras"] = {{"thetas", p.count("thetas")}, {"argmax_theta", argmax}};
  Outcome out;
  out.body = body.dump();
  out.pass = max_mag <= 0.05;
  return out;
}

void print_verdict(const bcz_verdict* v) {
  std::printf("%s %2d %s (%.1f s): %s\n", bcz_verdict_pass(v) ? "PASS" : "FAIL", bcz_verdict_id(v),
              bcz_verdict_title(v), bcz_verdict_seconds(v), bcz_verdict_detail(v));
  std::fflush(stdout);
}

Outcome run_verify(const Params& p, const std::string& format) {
  struct Collected {
    ordered_json rows = ordered_json::array();
    std::string csv = "id,title,pass,detail\n";
  } collected;
  auto record = [](const bcz_verdict* v, void* user) {
    auto* c = static_cast<Collected*>(user);
    print_verdict(v);
    const bool pass = bcz_verdict_pass(v) != 0;
    c->rows.push_back({{"id", bcz_verdict_id(v)},
                       {"title", bcz_verdict_title(v)},
                       {"pass", pass},
                       {"detail", bcz_verdict_detail(v)}});
    std::string detail = bcz_verdict_detail(v);
    std::string quoted = "\"";
    for (char ch : detail) quoted += ch == '"' ? std::string("\"\"") : std::string(1, ch);
    quoted += "\"";
    c->csv += std::to_string(bcz_verdict_id(v)) + "," + bcz_verdict_title(v) + "," +
              (pass ? "true" : "false") + "," + quoted + "\n";
  };
  int all_pass = 1;
  if (p.has("only")) {
    bcz_verdict* v = nullptr;
    check(bcz_verify_run(static_cast<int>(p.count("only")), &v));
    record(v, &collected);
    all_pass = bcz_verdict_pass(v);
    bcz_verdict_free(v);
  } else {
    check(bcz_verify_run_suite(record, &collected, &all_pass));
  }
  Outcome out;
  out.pass = all_pass != 0;
  out.body = format == "csv" ? collected.csv
                             : ordered_json({{"verdicts", collected.rows}, {"pass", out.pass}}).dump();
  return out;
}

Outcome dispatch(const Params& p, const std::string& format) {
  const std::string& c = p.command().name;
  if (c == "orbit") return run_orbit(p, format);
  if (c == "farey") return run_farey(p, format);
  if (c == "geometry") return run_geometry(p, format);
  if (c == "invariance") return run_invariance(p);
  if (c == "claims") return run_claims(p);
  if (c == "return-times") return run_return_times(p);
  if (c == "mixing") return run_mixing(p, format);
  if (c == "scan-eigenvalues") return run_scan(p);
  return run_verify(p, format);
}

bool csv_capable(const std::string& command) {
  return command == "orbit" || command == "farey" || command == "geometry" || command == "mixing" ||
         command == "verify-all";
}

int run(int argc, char** argv) {
  CLI::App app{"bczlab: BCZ map laboratory", "bczlab"};
  app.fallthrough();
  app.require_subcommand(0, 1);
  app.set_version_flag("--version", std::string(bcz_version()));
  std::string config_path, output_path, format;
  app.add_option("--config", config_path, "flat JSON object of parameters; flags override it");
  app.add_option("--output", output_path, "write the report here instead of stdout");
  app.add_option("--format", format, "csv or json");

  struct Bound {
    std::string text;
    bool flag = false;
    CLI::Option* opt = nullptr;
  };
  std::map<std::string, std::map<std::string, Bound>> bound;
  std::map<std::string, CLI::App*> subs;
  for (const auto& cmd : commands()) {
    CLI::App* sub = app.add_subcommand(cmd.name, cmd.help);
    subs[cmd.name] = sub;
    auto& slots = bound[cmd.name];
    for (const auto& opt : cmd.options) {
      Bound& b = slots[opt.name];
      std::string help = opt.help;
      if (opt.fallback) help += " (default " + *opt.fallback + ")";
      b.opt = opt.flag ? sub->add_flag("--" + opt.name, b.flag, help)
                       : sub->add_option("--" + opt.name, b.text, help);
    }
  }

  const CLI::App* active_help = &app;
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    for (const auto& [name, sub] : subs) {
      if (sub->parsed()) active_help = sub;
    }
    std::cerr << "bczlab: error: " << e.what() << "\n\n" << active_help->help(active_help == &app ? "" : "bczlab");
    return 2;
  }

  try {
    std::optional<ordered_json> config;
    if (!config_path.empty()) config = load_config(config_path);

    std::string command;
    for (const auto& [name, sub] : subs) {
      if (sub->parsed()) command = name;
    }
    if (config && config->contains("command")) {
      if (!(*config)["command"].is_string()) throw UsageError("config key 'command' must be a string");
      const auto from_file = (*config)["command"].get<std::string>();
      if (command.empty()) command = from_file;
      if (command != from_file) {
        throw UsageError("config file is for '" + from_file + "' but the command is '" + command + "'");
      }
    }
    if (command.empty()) throw UsageError("a command is required");
    const CommandSpec& cmd = command_spec(command);
    active_help = subs.at(command);

    std::map<std::string, std::string> values;
    for (const auto& opt : cmd.options) {
      if (opt.fallback) values[opt.name] = *opt.fallback;
    }
    if (config) {
      for (const auto& [key, v] : config->items()) {
        if (key == "command") continue;
        if (key == "output") {
          if (output_path.empty()) output_path = json_scalar_text(key, v, false);
          continue;
        }
        if (key == "format") {
          if (format.empty()) format = json_scalar_text(key, v, false);
          continue;
        }
        const OptSpec* spec = nullptr;
        for (const auto& opt : cmd.options) {
          if (opt.name == key) spec = &opt;
        }
        if (spec == nullptr) throw UsageError("unknown config key '" + key + "' for " + command);
        values[key] = json_scalar_text(key, v, spec->flag);
      }
    }
    for (const auto& opt : cmd.options) {
      const Bound& b = bound[command][opt.name];
      if (b.opt->count() == 0) continue;
      values[opt.name] = opt.flag ? (b.flag ? "true" : "false") : b.text;
    }
    for (auto it = values.begin(); it != values.end();) {
      // A false flag is the same as an absent one.
      it = it->second == "false" ? values.erase(it) : std::next(it);
    }

    if (format.empty()) format = cmd.default_format;
    if (format != "csv" && format != "json") throw UsageError("--format must be csv or json");
    if (format == "csv" && !csv_capable(command)) throw UsageError(command + " reports only in json");

    const Params params(cmd, std::move(values));
    validate(params);

    const auto start = std::chrono::steady_clock::now();
    Outcome out = dispatch(params, format);
    const double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    out.header = {{"tool", "bczlab"},
                  {"version", bcz_version()},
                  {"config", params.echo()},
                  {"seed", params.has("seed") ? ordered_json(params.count("seed")) : ordered_json(nullptr)},
                  {"wall_seconds", wall}};
    const std::string text = render(out, format);
    if (output_path.empty()) {
      if (command != "verify-all") std::fwrite(text.data(), 1, text.size(), stdout);
    } else {
      write_atomically(output_path, text);
    }
    return out.pass ? 0 : 1;
  } catch (const UsageError& e) {
    std::cerr << "bczlab: error: " << e.what() << "\n\n" << active_help->help(active_help == &app ? "" : "bczlab");
    return 2;
  } catch (const LibraryError& e) {
    const bool usage = e.status == BCZ_ERR_DOMAIN || e.status == BCZ_ERR_CONFIG ||
                       e.status == BCZ_ERR_INVALID_ARGUMENT || e.status == BCZ_ERR_COPRIMALITY;
    std::cerr << "bczlab: error: " << e.what() << "\n";
    if (usage) std::cerr << "\n" << active_help->help(active_help == &app ? "" : "bczlab");
    return usage ? 2 : 1;
  } catch (const std::exception& e) {
    std::cerr << "bczlab: error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace

int main(int argc, char** argv) { return run(argc, argv); }
