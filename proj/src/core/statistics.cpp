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

#include "bcz/statistics.hpp"

#include <chrono>
#include <cmath>
#include <numeric>

#include "bcz/sampling.hpp"

namespace bcz {

namespace {

constexpr std::uint64_t kChunk = 2048;
constexpr std::uint64_t kMaxDraws = 1u << 20;

struct Moments {
  double sum = 0.0;
  double sumsq = 0.0;
  double aux = 0.0;
  double aux2 = 0.0;
  std::uint64_t hits = 0;
  std::uint64_t fallbacks = 0;

  void add(double v) {
    sum += v;
    sumsq += v * v;
  }
  void merge(const Moments& o) {
    sum += o.sum;
    sumsq += o.sumsq;
    aux += o.aux;
    aux2 += o.aux2;
    hits += o.hits;
    fallbacks += o.fallbacks;
  }
};

double standard_error(const Moments& m, std::uint64_t n) {
  if (n < 2) return 0.0;
  const double mean = m.sum / static_cast<double>(n);
  const double var = std::max(0.0, m.sumsq / static_cast<double>(n) - mean * mean);
  return std::sqrt(var / static_cast<double>(n - 1));
}

class Stopwatch {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

bool in_slope_band(double slope, std::uint64_t rank) {
  const double n = static_cast<double>(rank);
  return slope >= 3.0 * n && slope <= 4.0 * n;
}

void require_region(const ExperimentSpec& spec, Region expected, const char* op) {
  if (spec.region != expected) {
    throw ConfigError(std::string(op) + " requires region " + region_name(expected));
  }
}

}  // namespace

const char* region_name(Region r) {
  switch (r) {
    case Region::Omega: return "OMEGA";
    case Region::OmegaB: return "OMEGA_B";
    case Region::HalfSection: return "HALF_SECTION";
  }
  return "?";
}

void ExperimentSpec::validate() const {
  if (!(a > 0.0 && a < 1.0)) throw ConfigError("a must lie in (0, 1)");
  if (!(b > 0.0 && b < a)) throw ConfigError("b must satisfy 0 < b < a");
  if (rank() < 1) throw ConfigError("floor(a/b) must be at least 1");
  if (samples < 1) throw ConfigError("samples must be at least 1");
}

std::uint64_t ExperimentSpec::rank() const {
  if (!(b > 0.0)) return 0;
  return static_cast<std::uint64_t>(std::floor(a / b));
}

void RunReport::judge() {
  pass = comparison == Comparison::AtLeast ? estimate >= threshold : estimate <= threshold;
}

double RunReport::extra(const std::string& key) const {
  for (const auto& [k, v] : extras) {
    if (k == key) return v;
  }
  throw ConfigError("report has no field '" + key + "'");
}

RegionSampler::RegionSampler(const ExperimentSpec& spec)
    : RegionSampler(spec.region, spec.b, spec.seed) {}

RegionSampler::RegionSampler(Region region, double b, std::uint64_t seed)
    : region_(region), b_(b), seed_(seed) {
  if (region_ != Region::Omega && !(b_ >= 0.0 && b_ < 1.0)) {
    throw ConfigError("region sampler needs b in [0, 1)");
  }
  if (region_ == Region::HalfSection && !(1.0 - b_ > 0.5)) {
    throw ConfigError("half-section is empty for b >= 1/2");
  }
}

bool RegionSampler::accepts(double s, double t) const {
  if (!contains_omega(s, t)) return false;
  switch (region_) {
    case Region::Omega: return true;
    case Region::OmegaB: return s <= 1.0 - b_;
    case Region::HalfSection: return s >= 0.5 && s <= 1.0 - b_;
  }
  return false;
}

OmegaPoint<double> RegionSampler::operator()(std::uint64_t i) const {
  for (std::uint64_t k = 0; k < kMaxDraws; ++k) {
    const double s = uniform01(seed_, i, 2 * k);
    const double t = uniform01(seed_, i, 2 * k + 1);
    if (accepts(s, t)) return OmegaPoint<double>(s, t);
  }
  throw ConfigError("region sampler failed to accept a point");
}

RunReport claim_integral(ClaimKind which, const ExperimentSpec& spec) {
  spec.validate();
  require_region(spec, Region::HalfSection, "claim_integral");
  Stopwatch clock;
  const double b = spec.b;
  const double height = (which == ClaimKind::F1 ? 2.0 : 4.0) * spec.a / b;
  const BoxSpec<double> box(1.0 - b, 1.0, height);
  const RegionSampler sampler(Region::Omega, b, spec.seed);

  auto parts = map_chunks<Moments>(spec.samples, kChunk, [&](std::uint64_t lo, std::uint64_t hi) {
    Moments acc;
    for (std::uint64_t i = lo; i < hi; ++i) {
      const auto p = sampler(i);
      double value = 0.0;
      if (p.s() >= 0.5 && p.s() <= 1.0 - b) {
        const double f = static_cast<double>(box_count(p, box));
        value = which == ClaimKind::F1 ? f : (f > 1.0 ? f : 0.0);
        acc.aux += f * f - f;
        acc.aux2 += (f * f - f) * (f * f - f);
        ++acc.hits;
      }
      acc.add(value);
    }
    return acc;
  });
  const Moments total = reduce_pairwise(std::move(parts));
  const double n = static_cast<double>(spec.samples);

  RunReport rep;
  rep.name = which == ClaimKind::F1 ? "claim_f1" : "claim_f2_excess";
  rep.spec = spec;
  rep.samples_used = spec.samples;
  rep.estimate = total.sum / n;
  rep.std_error = standard_error(total, spec.samples);
  if (which == ClaimKind::F1) {
    rep.threshold = spec.a / 100.0;
    rep.comparison = Comparison::AtLeast;
  } else {
    rep.threshold = kClaimTwoConstant * spec.a * spec.a;
    rep.comparison = Comparison::AtMost;
  }
  rep.judge();
  Moments second;
  second.sum = total.aux;
  second.sumsq = total.aux2;
  rep.extras = {{"rank", static_cast<double>(spec.rank())},
                {"box_height", height},
                {"half_section_fraction", static_cast<double>(total.hits) / n},
                {"second_moment", total.aux / n},
                {"second_moment_stderr", standard_error(second, spec.samples)}};
  rep.wall_seconds = clock.seconds();
  return rep;
}

RunReport g0_fraction(const ExperimentSpec& spec) {
  spec.validate();
  require_region(spec, Region::OmegaB, "g0_fraction");
  Stopwatch clock;
  const std::uint64_t rank = spec.rank();
  const double x_max = 1.0 - spec.b;
  const RegionSampler sampler(spec);

  auto parts = map_chunks<Moments>(spec.samples, kChunk, [&](std::uint64_t lo, std::uint64_t hi) {
    Moments acc;
    for (std::uint64_t i = lo; i < hi; ++i) {
      const double slope = nth_slope(sampler(i), rank, x_max);
      acc.add(in_slope_band(slope, rank) ? 1.0 : 0.0);
      acc.aux += slope / static_cast<double>(rank);
    }
    return acc;
  });
  const Moments total = reduce_pairwise(std::move(parts));
  const double n = static_cast<double>(spec.samples);

  RunReport rep;
  rep.name = "g0_fraction";
  rep.spec = spec;
  rep.samples_used = spec.samples;
  rep.estimate = total.sum / n;
  rep.std_error = standard_error(total, spec.samples);
  rep.threshold = 0.9;
  rep.comparison = Comparison::AtLeast;
  rep.judge();
  rep.extras = {{"rank", static_cast<double>(rank)}, {"mean_slope_rate", total.aux / n}};
  rep.wall_seconds = clock.seconds();
  return rep;
}

RunReport plus_one_fraction(const ExperimentSpec& spec) {
  const bool trivial_section = spec.b == 0.0;
  if (trivial_section) {
    if (!(spec.a > 0.0 && spec.a < 1.0) || spec.samples < 1) {
      throw ConfigError("plus_one_fraction needs 0 < a < 1 and samples >= 1");
    }
  } else {
    spec.validate();
  }
  require_region(spec, Region::OmegaB, "plus_one_fraction");
  Stopwatch clock;
  const double b = spec.b;
  // On Omega_0 every step is a return, so R = n for any n; use n = 1.
  const std::uint64_t rank = trivial_section ? 1 : spec.rank();
  const SectionConfig<double> cfg(b);
  const SectionConfig<Rational> exact_cfg{Rational(b)};
  const RegionSampler sampler(spec);

  auto parts = map_chunks<Moments>(spec.samples, kChunk, [&](std::uint64_t lo, std::uint64_t hi) {
    Moments acc;
    for (std::uint64_t i = lo; i < hi; ++i) {
      const auto p = sampler(i);
      bool event = false;
      try {
        event = plus_one_event(p, cfg, rank);
      } catch (const CriterionMismatch&) {
        // Float rounding flipped one route; settle it in exact arithmetic.
        ++acc.fallbacks;
        event = plus_one_event(convert_point<Rational>(p), exact_cfg, rank);
      }
      acc.add(event ? 1.0 : 0.0);
      if (!trivial_section && p.s() >= 0.5) {
        const BoxSpec<double> box1(1.0 - b, 1.0, 2.0 * spec.a / b);
        const BoxSpec<double> box2(1.0 - b, 1.0, 4.0 * spec.a / b);
        if (box_count(p, box1) == 1 && box_count(p, box2) == 1 &&
            in_slope_band(nth_slope(p, rank, 1.0 - b), rank)) {
          acc.aux += 1.0;
          if (event) acc.aux2 += 1.0;
        }
      }
    }
    return acc;
  });
  const Moments total = reduce_pairwise(std::move(parts));
  const double n = static_cast<double>(spec.samples);

  RunReport rep;
  rep.name = "plus_one_fraction";
  rep.spec = spec;
  rep.samples_used = spec.samples;
  rep.estimate = total.sum / n;
  rep.std_error = standard_error(total, spec.samples);
  rep.threshold = 0.005;
  rep.comparison = Comparison::AtLeast;
  rep.judge();
  rep.extras = {{"rank", static_cast<double>(rank)},
                {"intersection_fraction", total.aux / n},
                {"intersection_with_event_fraction", total.aux2 / n},
                {"float_fallbacks", static_cast<double>(total.fallbacks)}};
  rep.wall_seconds = clock.seconds();
  return rep;
}

template <class T>
double birkhoff_slope_rate(const OmegaPoint<T>& p, std::uint64_t n, const T& x_max,
                           const SlopeSearchOptions& opts) {
  return to_double(nth_slope(p, n, x_max, opts)) / static_cast<double>(n);
}

double coprime_density(std::int64_t big_m) {
  if (big_m < 1) throw DomainError("coprime_density requires M >= 1");
  // #{(m, n) in [1, M]^2 : gcd = 1} = 2 * sum_{k <= M} phi(k) - 1.
  std::vector<std::int64_t> phi(static_cast<std::size_t>(big_m) + 1);
  std::iota(phi.begin(), phi.end(), 0);
  for (std::int64_t p = 2; p <= big_m; ++p) {
    if (phi[p] != p) continue;
    for (std::int64_t k = p; k <= big_m; k += p) phi[k] -= phi[k] / p;
  }
  const std::int64_t sum = std::accumulate(phi.begin() + 1, phi.end(), std::int64_t{0});
  const double pairs = static_cast<double>(2 * sum - 1);
  return pairs / (static_cast<double>(big_m) * static_cast<double>(big_m));
}

RunReport invariance_histogram_test(const ExperimentSpec& spec, std::uint32_t bins,
                                    std::uint32_t iterates, SamplerKind sampler_kind) {
  if (bins < 4) throw ConfigError("invariance test needs at least 4 bins per axis");
  if (spec.samples < 1) throw ConfigError("samples must be at least 1");
  Stopwatch clock;
  const RegionSampler sampler(spec);
  const std::size_t cells = static_cast<std::size_t>(bins) * bins;

  auto draw = [&](std::uint64_t i) {
    if (sampler_kind == SamplerKind::Uniform) return sampler(i);
    // Rejection with acceptance probability s^2.
    for (std::uint64_t k = 0; k < kMaxDraws; ++k) {
      const double s = uniform01(spec.seed, i, 3 * k);
      const double t = uniform01(spec.seed, i, 3 * k + 1);
      const double u = uniform01(spec.seed, i, 3 * k + 2);
      if (sampler.accepts(s, t) && u <= s * s) return OmegaPoint<double>(s, t);
    }
    throw ConfigError("skewed sampler failed to accept a point");
  };
  auto cell = [&](const OmegaPoint<double>& p) {
    const auto bin = [&](double v) {
      return std::min<std::size_t>(bins - 1, static_cast<std::size_t>(v * bins));
    };
    return bin(p.s()) * bins + bin(p.t());
  };

  struct Histograms {
    std::vector<std::uint64_t> before, after;
    void merge(const Histograms& o) {
      if (before.empty()) {
        *this = o;
        return;
      }
      for (std::size_t i = 0; i < before.size() && i < o.before.size(); ++i) {
        before[i] += o.before[i];
        after[i] += o.after[i];
      }
    }
  };
  auto parts = map_chunks<Histograms>(spec.samples, kChunk, [&](std::uint64_t lo, std::uint64_t hi) {
    Histograms h{std::vector<std::uint64_t>(cells), std::vector<std::uint64_t>(cells)};
    for (std::uint64_t i = lo; i < hi; ++i) {
      auto p = draw(i);
      ++h.before[cell(p)];
      for (std::uint32_t k = 0; k < iterates; ++k) p = bcz_step(p);
      ++h.after[cell(p)];
    }
    return h;
  });
  const Histograms total = reduce_pairwise(std::move(parts));
  const double n = static_cast<double>(spec.samples);
  double tv = 0.0;
  double root_mass = 0.0;
  std::uint64_t occupied = 0;
  for (std::size_t i = 0; i < cells; ++i) {
    const double pb = static_cast<double>(total.before[i]) / n;
    const double pa = static_cast<double>(total.after[i]) / n;
    tv += std::abs(pb - pa);
    root_mass += std::sqrt(pb);
    if (total.before[i] > 0) ++occupied;
  }
  RunReport rep;
  rep.name = "invariance_tv";
  rep.spec = spec;
  rep.samples_used = spec.samples;
  rep.estimate = 0.5 * tv;
  // Three standard deviations per bin, aggregated over occupied bins.
  rep.threshold = 1.5 * root_mass / std::sqrt(n);
  rep.comparison = Comparison::AtMost;
  rep.judge();
  rep.extras = {{"bins", static_cast<double>(bins)},
                {"iterates", static_cast<double>(iterates)},
                {"occupied_bins", static_cast<double>(occupied)}};
  rep.wall_seconds = clock.seconds();
  return rep;
}

template double birkhoff_slope_rate(const OmegaPoint<double>&, std::uint64_t, const double&,
                                    const SlopeSearchOptions&);
template double birkhoff_slope_rate(const OmegaPoint<Rational>&, std::uint64_t, const Rational&,
                                    const SlopeSearchOptions&);

}  // namespace bcz
