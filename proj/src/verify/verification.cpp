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


#include "bcz/verification.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numbers>
#include <sstream>

#include "bcz/errors.hpp"
#include "bcz/farey.hpp"
#include "bcz/lattice.hpp"
#include "bcz/mixing.hpp"
#include "bcz/oracles.hpp"
#include "bcz/renormalization.hpp"
#include "bcz/statistics.hpp"
#include "bcz/strips.hpp"

namespace bcz::verify {
namespace {

using Clock = std::chrono::steady_clock;

double since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string fmt(double v) {
  std::ostringstream out;
  out.precision(6);
  out << v;
  return out.str();
}

class Checks {
 public:
  void require(bool ok, const std::string& name, const std::string& value) {
    if (!ok) pass_ = false;
    if (!detail_.empty()) detail_ += "; ";
    detail_ += name + "=" + value + (ok ? " ok" : " FAIL");
  }
  void note(const std::string& name, const std::string& value) {
    if (!detail_.empty()) detail_ += "; ";
    detail_ += name + "=" + value;
  }
  bool pass() const { return pass_; }
  const std::string& detail() const { return detail_; }

 private:
  bool pass_ = true;
  std::string detail_;
};

Verdict finish(int id, const Checks& c, Clock::time_point start) {
  Verdict v;
  v.id = id;
  v.pass = c.pass();
  v.detail = c.detail();
  v.seconds = since(start);
  return v;
}

// Random points with exact coordinates: the double samples are dyadic
// rationals, so the conversion is lossless.
OmegaPoint<Rational> exact_sample(Region region, double b, std::uint64_t seed, std::uint64_t i) {
  return convert_point<Rational>(RegionSampler(region, b, seed)(i));
}

Verdict exact_identities() {
  const auto start = Clock::now();
  Checks c;
  const OmegaPoint<Rational> one(Rational(1), Rational(1));
  c.require(bcz_step(one) == one, "fixed_point", "Phi(1,1)");

  const auto five = bcz_orbit(OmegaPoint<Rational>(Rational(1, 5), Rational(1)), 20);
  c.require(five.period && *five.period == 10, "period_q5",
            five.period ? std::to_string(*five.period) : "none");

  std::uint64_t bad_q = 0;
  for (std::uint64_t q = 1; q <= 100; ++q) {
    const auto orbit = farey_section_orbit(q);
    const auto expected = oracle::farey_pairs_orbit(q);
    const auto record = bcz_orbit(orbit.front(), orbit.size() + 1);
    const bool ok = orbit.size() == oracle::farey_length(q) - 1 && orbit == expected &&
                    record.period && *record.period == orbit.size();
    if (!ok) ++bad_q;
  }
  c.require(bad_q == 0, "farey_orbits_q_le_100_mismatches", std::to_string(bad_q));
  const double secs = since(start);
  c.require(secs < 10.0, "seconds", fmt(secs) + " < 10");
  return finish(1, c, start);
}

Verdict measure_facts() {
  const auto start = Clock::now();
  Checks c;
  for (const Rational& b : {Rational(1, 10), Rational(1, 100)}) {
    const Rational m = omega_b_region(b).normalized_measure();
    const Rational want = (1 - b) * (1 - b);
    c.require(m == want, "m(Omega_b) b=" + to_string(b), to_string(m));
  }
  std::int64_t bad_det = 0;
  for (std::int64_t j = 0; j <= 10000; ++j) {
    if (BranchMatrix::for_branch(j).determinant() != 1) ++bad_det;
  }
  c.require(bad_det == 0, "branch_det_ne_1_j_le_1e4", std::to_string(bad_det));

  ExperimentSpec spec;
  spec.samples = 1000000;
  spec.seed = 11;
  spec.region = Region::Omega;
  const auto rep = invariance_histogram_test(spec, 16, 5);
  c.require(rep.estimate < 0.01, "tv_16x16_5_iterates", fmt(rep.estimate) + " < 0.01");
  return finish(2, c, start);
}

Verdict conjugacy() {
  const auto start = Clock::now();
  Checks c;
  for (const Rational& b : {Rational(1, 10), Rational(1, 100)}) {
    const SectionConfig<Rational> cfg(b);
    std::uint64_t failures = 0, skipped = 0, round_trip = 0, inverse_trip = 0;
    for (std::uint64_t i = 0; i < 1000; ++i) {
      const auto p = exact_sample(Region::Omega, 0.0, 31, i);
      const auto q = bcz_step(p);
      // phi is discontinuous on its branch boundaries; the identity is an
      // almost-everywhere statement.
      if (on_phi_boundary(p, cfg) || on_phi_boundary(q, cfg)) {
        ++skipped;
        continue;
      }
      const auto lhs = phi(q, cfg);
      const auto rhs = return_map_b(phi(p, cfg), cfg).first;
      if (!(lhs == rhs)) ++failures;
      if (!(phi_inverse(phi(p, cfg), cfg) == p)) ++round_trip;
    }
    for (std::uint64_t i = 0; i < 1000; ++i) {
      const auto q = exact_sample(Region::OmegaB, to_double(b), 37, i);
      if (!omega_b_contains(q, cfg)) continue;
      if (!(phi(phi_inverse(q, cfg), cfg) == q)) ++inverse_trip;
    }
    const std::string tag = " b=" + to_string(b);
    c.require(failures == 0, "conjugacy_failures" + tag, std::to_string(failures));
    c.note("boundary_skipped" + tag, std::to_string(skipped));
    c.require(round_trip == 0, "inverse_after_phi_failures" + tag, std::to_string(round_trip));
    c.require(inverse_trip == 0, "phi_after_inverse_failures" + tag, std::to_string(inverse_trip));
  }

  std::vector<double> fractions;
  for (const double b : {0.1, 0.01, 0.001}) {
    const SectionConfig<double> cfg(b);
    const RegionSampler sampler(Region::Omega, 0.0, 41);
    const std::uint64_t n = 100000;
    std::uint64_t hits = 0;
    for (std::uint64_t i = 0; i < n; ++i) {
      if (displacement(sampler(i), cfg) > std::sqrt(2.0) * b) ++hits;
    }
    fractions.push_back(static_cast<double>(hits) / static_cast<double>(n));
  }
  const bool decreasing = fractions[0] > fractions[1] && fractions[1] > fractions[2];
  c.require(decreasing, "displacement_fraction_b=0.1,0.01,0.001",
            fmt(fractions[0]) + "," + fmt(fractions[1]) + "," + fmt(fractions[2]));
  return finish(3, c, start);
}

Verdict plus_one_condition() {
  const auto start = Clock::now();
  Checks c;
  const Rational a(1, 4);
  for (const Rational& b : {Rational(1, 100), Rational(1, 1000)}) {
    const SectionConfig<Rational> cfg(b);
    const std::uint64_t n = ScalarTraits<Rational>::floor_i64(a / b);
    std::uint64_t mismatches = 0, events = 0, tested = 0;
    for (std::uint64_t i = 0; i < 1000; ++i) {
      const auto p = exact_sample(Region::OmegaB, to_double(b), 53, i);
      if (!omega_b_contains(p, cfg)) continue;
      ++tested;
      try {
        if (plus_one_event(p, cfg, n)) ++events;
      } catch (const CriterionMismatch&) {
        ++mismatches;
      }
    }
    const std::string tag = " b=" + to_string(b) + " N=" + std::to_string(n);
    c.require(mismatches == 0, "mismatches" + tag, std::to_string(mismatches));
    c.note("events" + tag, std::to_string(events) + "/" + std::to_string(tested));
  }
  return finish(4, c, start);
}

Verdict slope_correspondence() {
  const auto start = Clock::now();
  Checks c;
  const Rational one(1);
  std::uint64_t first_bad = 0;
  for (std::uint64_t i = 0; i < 10000; ++i) {
    const auto p = exact_sample(Region::Omega, 0.0, 61, i);
    if (nth_slope(p, 1, one) != 1 / (p.s() * p.t())) ++first_bad;
  }
  c.require(first_bad == 0, "first_slope_ne_1/(st)", std::to_string(first_bad));

  std::uint64_t shift_bad = 0;
  for (std::uint64_t i = 0; i < 100; ++i) {
    const auto p = exact_sample(Region::Omega, 0.0, 67, i);
    const auto before = first_slopes(p, 51, one);
    const auto after = first_slopes(bcz_step(p), 50, one);
    for (std::size_t n = 0; n < 50; ++n) {
      if (after[n] != before[n + 1] - before[0]) ++shift_bad;
    }
  }
  c.require(shift_bad == 0, "shift_identity_failures_n_le_50", std::to_string(shift_bad));
  return finish(5, c, start);
}

Verdict constants() {
  const auto start = Clock::now();
  Checks c;
  const double pi2_3 = std::numbers::pi * std::numbers::pi / 3.0;
  for (const double b : {0.0, 0.1}) {
    const double target = pi2_3 / ((1 - b) * (1 - b));
    int within = 0;
    double worst = 0.0;
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
      const auto p = RegionSampler(Region::Omega, 0.0, 100 + seed)(0);
      const double rate = birkhoff_slope_rate(p, 100000, 1.0 - b);
      const double rel = std::abs(rate - target) / target;
      worst = std::max(worst, rel);
      if (rel < 0.02) ++within;
    }
    c.require(within >= 9, "birkhoff_within_2pct b=" + fmt(b),
              std::to_string(within) + "/10 worst_rel=" + fmt(worst));
  }
  const double density = coprime_density(2000);
  const double want = 6.0 / (std::numbers::pi * std::numbers::pi);
  c.require(std::abs(density - want) < 0.005, "coprime_density_2000", fmt(density));
  const double secs = since(start);
  c.require(secs < 60.0, "seconds", fmt(secs) + " < 60");
  return finish(6, c, start);
}

ExperimentSpec claim_spec(double a, double b, std::uint64_t samples, std::uint64_t seed,
                          Region region) {
  ExperimentSpec spec;
  spec.a = a;
  spec.b = b;
  spec.samples = samples;
  spec.seed = seed;
  spec.region = region;
  return spec;
}

Verdict claim_one() {
  const auto start = Clock::now();
  Checks c;
  const auto fine = claim_integral(ClaimKind::F1, claim_spec(0.25, 1e-3, 100000, 7, Region::HalfSection));
  const auto coarse = claim_integral(ClaimKind::F1, claim_spec(0.25, 1e-2, 100000, 7, Region::HalfSection));
  c.require(fine.estimate >= 0.25 / 100, "F1 b=1e-3", fmt(fine.estimate) + " >= 0.0025");
  c.require(coarse.estimate >= 0.25 / 100, "F1 b=1e-2", fmt(coarse.estimate) + " >= 0.0025");
  const double ratio = std::max(fine.estimate, coarse.estimate) /
                       std::min(fine.estimate, coarse.estimate);
  c.require(ratio <= 2.0, "ratio", fmt(ratio) + " <= 2");
  return finish(7, c, start);
}

Verdict claim_two() {
  const auto start = Clock::now();
  Checks c;
  const std::vector<double> as{0.05, 0.1, 0.2, 0.4};
  std::vector<double> xs, ys;
  std::string values;
  for (const double a : as) {
    const auto rep = claim_integral(ClaimKind::F2Excess, claim_spec(a, 1e-3, 100000, 7, Region::HalfSection));
    if (!values.empty()) values += ",";
    values += fmt(rep.estimate);
    if (!(rep.estimate > 0)) {
      c.require(false, "F2_excess a=" + fmt(a), fmt(rep.estimate));
      return finish(8, c, start);
    }
    xs.push_back(std::log(a));
    ys.push_back(std::log(rep.estimate));
  }
  const double n = static_cast<double>(xs.size());
  double mx = 0, my = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    mx += xs[i] / n;
    my += ys[i] / n;
  }
  double sxy = 0, sxx = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sxy += (xs[i] - mx) * (ys[i] - my);
    sxx += (xs[i] - mx) * (xs[i] - mx);
  }
  const double slope = sxy / sxx;
  c.note("F2_excess a=0.05,0.1,0.2,0.4", values);
  c.require(slope >= 1.7 && slope <= 2.3, "loglog_slope", fmt(slope) + " in [1.7,2.3]");
  return finish(8, c, start);
}

Verdict g0_and_plus_one() {
  const auto start = Clock::now();
  Checks c;
  const auto g0 = g0_fraction(claim_spec(0.25, 1e-3, 10000, 7, Region::OmegaB));
  c.require(g0.estimate >= 0.9, "g0_fraction", fmt(g0.estimate) + " >= 0.9");
  const auto coarse = plus_one_fraction(claim_spec(0.25, 1e-2, 10000, 7, Region::OmegaB));
  const auto fine = plus_one_fraction(claim_spec(0.25, 1e-3, 10000, 7, Region::OmegaB));
  c.require(coarse.estimate > 0, "plus_one b=1e-2", fmt(coarse.estimate));
  c.require(fine.estimate > 0, "plus_one b=1e-3", fmt(fine.estimate));
  if (coarse.estimate > 0 && fine.estimate > 0) {
    const double ratio = std::max(coarse.estimate, fine.estimate) /
                         std::min(coarse.estimate, fine.estimate);
    c.require(ratio <= 3.0, "ratio", fmt(ratio) + " <= 3");
  }
  return finish(9, c, start);
}

struct StripTally {
  std::uint64_t pairs = 0;        // intersecting pairs with n < n2
  std::uint64_t uncut = 0;
  std::uint64_t bound_violations = 0;
  std::uint64_t formula_mismatches = 0;
  std::uint64_t neccond_violations = 0;
};

// Every pair of regions A_{m,n}, A_{m2,n2} with n < n2 <= n_max and positive
// intersection.
StripTally strip_pairs(const Rational& b, std::int64_t n_max) {
  StripTally tally;
  const auto region = half_section_region(b);
  for (std::int64_t n = 1; n < n_max; ++n) {
    const auto ms = meeting_strip_range(region, n, b);
    if (!ms) continue;
    for (std::int64_t m = std::max<std::int64_t>(ms->first, 0); m <= ms->second; ++m) {
      const StripSpec first(m, n, b);
      const auto a_mn = a_mn_region(first);
      if (a_mn.empty()) continue;
      for (std::int64_t n2 = n + 1; n2 <= n_max; ++n2) {
        const auto ms2 = meeting_strip_range(a_mn, n2, b);
        if (!ms2) continue;
        for (std::int64_t m2 = std::max<std::int64_t>(ms2->first, 0); m2 <= ms2->second; ++m2) {
          if (m2 * n == m * n2) continue;
          const StripSpec second(m2, n2, b);
          const auto meas = strip_intersection_measure(first, second);
          if (!(meas.clipped_measure > 0)) continue;
          ++tally.pairs;
          const Rational full = 2 * meas.unbounded_area;
          if (meas.clipped_measure > full) ++tally.bound_violations;
          if (parallelogram_uncut(first, second)) {
            ++tally.uncut;
            if (meas.clipped_measure != full) ++tally.formula_mismatches;
          }
          if (!neccond_holds(m, n, m2, n2)) ++tally.neccond_violations;
        }
      }
    }
  }
  return tally;
}

Verdict strip_combinatorics() {
  const auto start = Clock::now();
  Checks c;
  // The necessity check runs at b = 1/20. The derivation of neccond assumes
  // parallelogram widths b (n + n2) < 1/4, which fails there for large n, so
  // it is repeated at stage parameters a = 1/32, N = 10, b = 1/320 where
  // n < n2 <= 4N = 40 keeps every width below 1/4.
  const Rational coarse_b(1, 20);
  const Rational stage_b(1, 320);
  for (const Rational& b : {coarse_b, stage_b}) {
    const auto tally = strip_pairs(b, 40);
    const std::string tag = " b=" + to_string(b);
    c.note("intersecting_pairs" + tag, std::to_string(tally.pairs) + " uncut=" + std::to_string(tally.uncut));
    c.require(tally.bound_violations == 0, "area_bound_violations" + tag,
              std::to_string(tally.bound_violations));
    c.require(tally.formula_mismatches == 0, "uncut_formula_mismatches" + tag,
              std::to_string(tally.formula_mismatches));
    c.require(tally.neccond_violations == 0, "neccond_violations_n2_le_40" + tag,
              std::to_string(tally.neccond_violations));
  }

  std::uint64_t overlaps = 0;
  for (const Rational& b : {Rational(1, 10), stage_b}) {
    const auto region = half_section_region(b);
    for (std::int64_t n = 1; n <= 50; ++n) {
      const auto ms = meeting_strip_range(region, n, b);
      if (!ms) continue;
      const std::int64_t lo = std::max<std::int64_t>(ms->first, 0);
      for (std::int64_t m = lo; m <= ms->second; ++m) {
        for (std::int64_t m2 = m + 1; m2 <= ms->second; ++m2) {
          const auto meas = strip_intersection_measure(StripSpec(m, n, b), StripSpec(m2, n, b));
          if (meas.clipped_measure > 0) ++overlaps;
        }
      }
    }
  }
  c.require(overlaps == 0, "same_n_overlaps_n_le_50", std::to_string(overlaps));

  std::uint64_t count_violations = 0;
  double worst = 0.0;
  for (std::int64_t n2 = 2; n2 <= 120; ++n2) {
    for (std::int64_t n = 1; n < n2; ++n) {
      const auto count = admissible_pair_count(n, n2);
      worst = std::max(worst, static_cast<double>(count) / static_cast<double>(n2 - n));
      if (count > static_cast<std::uint64_t>(8 * (n2 - n))) ++count_violations;
    }
  }
  c.require(count_violations == 0, "pair_count_gt_8gap_n2_le_120",
            std::to_string(count_violations) + " max_ratio=" + fmt(worst));

  for (const std::int64_t big_n : {60, 200}) {
    const auto size = q_set_size(big_n);
    const double bound = static_cast<double>(big_n * big_n) / 20.0;
    c.require(static_cast<double>(size) >= bound, "q_set_size(" + std::to_string(big_n) + ")",
              std::to_string(size) + " >= " + fmt(bound));
  }
  return finish(10, c, start);
}

Verdict mixing_diagnostics() {
  const auto start = Clock::now();
  Checks c;
  const std::uint64_t n = 1000000;
  const std::uint64_t h = 10000;
  for (std::uint64_t seed = 1; seed <= 3; ++seed) {
    const auto p = RegionSampler(Region::Omega, 0.0, 200 + seed)(0);
    const auto ces = correlation_cesaro(Observable::ExpS, Observable::ExpS, p, n, h);
    c.require(ces.decaying, "cesaro_decay seed=" + std::to_string(seed),
              fmt(ces.averages[h - 1]) + " < 0.5*" + fmt(ces.averages[99]));
  }
  {
    const auto p = RegionSampler(Region::Omega, 0.0, 211)(0);
    const auto w = weyl_scan(ObservableSpec{Observable::ExpS, true}, p, n, uniform_theta_grid(1000));
    c.require(w.max_magnitude <= 0.05, "weyl_max", fmt(w.max_magnitude) + " <= 0.05 at theta=" +
                                                       fmt(w.argmax_theta));
  }
  {
    const OmegaPoint<Rational> p(Rational(1, 5), Rational(1));
    const auto ces = correlation_cesaro(Observable::ExpS, Observable::ExpS, p, n, h);
    c.require(!ces.decaying, "periodic_q5_flagged_non_decaying",
              fmt(ces.averages[h - 1]) + " vs " + fmt(ces.averages[99]));
  }
  return finish(11, c, start);
}

}  // namespace

const std::vector<Criterion>& acceptance_criteria() {
  static const std::vector<Criterion> all = [] {
    std::vector<Criterion> v{
        {1, "exact identities", exact_identities},
        {2, "measure facts", measure_facts},
        {3, "conjugacy", conjugacy},
        {4, "plus-one lattice condition", plus_one_condition},
        {5, "return/slope correspondence", slope_correspondence},
        {6, "constants", constants},
        {7, "claim 1", claim_one},
        {8, "claim 2", claim_two},
        {9, "G0 and plus-one positivity", g0_and_plus_one},
        {10, "strip combinatorics", strip_combinatorics},
        {11, "weak-mixing diagnostics", mixing_diagnostics},
    };
    return v;
  }();
  return all;
}

Verdict run_criterion(int id) {
  for (const auto& crit : acceptance_criteria()) {
    if (crit.id != id) continue;
    const auto start = Clock::now();
    Verdict v;
    try {
      v = crit.run();
    } catch (const std::exception& e) {
      v.id = id;
      v.pass = false;
      v.detail = std::string("exception: ") + e.what();
      v.seconds = since(start);
    }
    v.title = crit.title;
    return v;
  }
  throw ConfigError("no acceptance criterion with id " + std::to_string(id));
}

std::vector<Verdict> run_suite(const std::function<void(const Verdict&)>& on_verdict) {
  const auto start = Clock::now();
  std::vector<Verdict> out;
  const auto& all = acceptance_criteria();
  for (std::size_t i = 0; i < all.size(); ++i) {
    Verdict v = run_criterion(all[i].id);
    if (i + 1 == all.size()) {
      const double total = since(start);
      const bool ok = total < kSuiteBudgetSeconds;
      v.pass = v.pass && ok;
      v.detail += "; suite_seconds=" + fmt(total) + " < " + fmt(kSuiteBudgetSeconds) +
                  (ok ? " ok" : " FAIL");
    }
    if (on_verdict) on_verdict(v);
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace bcz::verify
