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

#include "bcz/strips.hpp"

#include <algorithm>
#include <numeric>

namespace bcz {

namespace {

Rational r(std::int64_t v) { return Rational(static_cast<long>(v)); }

// Top and bottom lines of the strip as t = intercept + slope * s.
struct StripLines {
  Rational slope;
  Rational top;
  Rational bottom;
};

StripLines lines_of(const StripSpec& spec) {
  const Rational n = r(spec.n());
  return {Rational(r(spec.m()) / n), Rational(1 / n), Rational((1 - spec.b()) / n)};
}

Vec2 meet(const Rational& slope1, const Rational& c1, const Rational& slope2, const Rational& c2) {
  const Rational s = (c2 - c1) / (slope1 - slope2);
  return {s, Rational(c1 + slope1 * s)};
}

}  // namespace

StripSpec::StripSpec(std::int64_t m, std::int64_t n, Rational b) : m_(m), n_(n), b_(std::move(b)) {
  if (n_ < 1) throw DomainError("strip index n must be at least 1");
  if (m_ < 0) throw DomainError("strip index m must be nonnegative");
  if (!(b_ > 0 && b_ < 1)) throw DomainError("strip height parameter b must lie in (0, 1)");
}

bool strip_contains(const StripSpec& spec, const OmegaPoint<Rational>& p) {
  const Rational x = r(spec.n()) * p.t() - r(spec.m()) * p.s();
  return x > 1 - spec.b() && x <= 1;
}

bool strip_contains(const StripSpec& spec, const OmegaPoint<double>& p) {
  const double x = static_cast<double>(spec.n()) * p.t() - static_cast<double>(spec.m()) * p.s();
  return x > 1.0 - to_double(spec.b()) && x <= 1.0;
}

RegionPolygon half_section_region(const Rational& b) {
  const Rational half(1, 2);
  const Rational top = 1 - b;
  if (!(top > half)) return {};
  return RegionPolygon({{half, half}, {top, Rational(1 - top)}, {top, Rational(1)}, {half, Rational(1)}});
}

RegionPolygon a_mn_region(const StripSpec& spec) {
  return half_section_region(spec.b())
      .clipped_band(r(-spec.m()), r(spec.n()), Rational(1 - spec.b()), Rational(1));
}

IntersectionMeasure strip_intersection_measure(const StripSpec& first, const StripSpec& second) {
  if (first.b() != second.b()) throw DomainError("strips must share the parameter b");
  const std::int64_t det = first.m() * second.n() - second.m() * first.n();
  if (det == 0) throw SlopeCoincidence("strips have equal slopes");
  const Rational& b = first.b();
  IntersectionMeasure out;
  out.unbounded_area = b * b / r(det < 0 ? -det : det);
  out.clipped_measure =
      a_mn_region(first)
          .clipped_band(r(-second.m()), r(second.n()), Rational(1 - b), Rational(1))
          .normalized_measure();
  return out;
}

RegionPolygon strip_parallelogram(const StripSpec& first, const StripSpec& second) {
  const auto a = lines_of(first);
  const auto c = lines_of(second);
  if (a.slope == c.slope) throw SlopeCoincidence("strips have equal slopes");
  return RegionPolygon({meet(a.slope, a.bottom, c.slope, c.bottom),
                        meet(a.slope, a.top, c.slope, c.bottom),
                        meet(a.slope, a.top, c.slope, c.top),
                        meet(a.slope, a.bottom, c.slope, c.top)});
}

bool parallelogram_uncut(const StripSpec& first, const StripSpec& second) {
  const auto region = half_section_region(first.b());
  const auto para = strip_parallelogram(first, second);
  return std::all_of(para.vertices().begin(), para.vertices().end(),
                     [&](const Vec2& v) { return region.contains(v); });
}

std::optional<std::pair<std::int64_t, std::int64_t>> meeting_strip_range(
    const RegionPolygon& region, std::int64_t n2, const Rational& b) {
  if (region.empty()) return std::nullopt;
  // n2 t - m' s ranges over [min, max] on the region; it meets (1 - b, 1)
  // iff m' > min_v (n2 t_v - 1)/s_v and m' < max_v (n2 t_v - 1 + b)/s_v.
  const Rational nn = r(n2);
  std::optional<Rational> lower, upper;
  for (const Vec2& v : region.vertices()) {
    if (!(v.s > 0)) throw DomainError("region must lie in s > 0");
    const Rational lo = (nn * v.t - 1) / v.s;
    const Rational hi = (nn * v.t - 1 + b) / v.s;
    if (!lower || lo < *lower) lower = lo;
    if (!upper || hi > *upper) upper = hi;
  }
  const std::int64_t first = ScalarTraits<Rational>::floor_i64(*lower) + 1;
  const std::int64_t last = ScalarTraits<Rational>::ceil_i64(*upper) - 1;
  if (first > last) return std::nullopt;
  return std::make_pair(first, last);
}

bool neccond_holds(std::int64_t m, std::int64_t n, std::int64_t m2, std::int64_t n2) {
  if (n >= n2) throw OrderError("neccond requires n < n2");
  const std::int64_t value = m2 * n - m * n2;
  const std::int64_t gap = n2 - n;
  return 4 * gap <= 5 * value && value <= 4 * gap;
}

std::uint64_t admissible_pair_count(std::int64_t n, std::int64_t n2) {
  if (n < 1 || n >= n2) throw OrderError("admissible_pair_count requires 1 <= n < n2");
  const std::int64_t gap = n2 - n;
  std::uint64_t count = 0;
  // For fixed m: 4 gap <= 5 (m2 n - m n2) and m2 n - m n2 <= 4 gap.
  for (std::int64_t m = 0; m <= 2 * n; ++m) {
    const std::int64_t base = m * n2;
    // m2 >= ceil((4 gap + 5 base) / (5 n)),  m2 <= floor((4 gap + base) / n)
    const std::int64_t lo_num = 4 * gap + 5 * base;
    std::int64_t lo = (lo_num + 5 * n - 1) / (5 * n);
    std::int64_t hi = (4 * gap + base) / n;
    lo = std::max<std::int64_t>(lo, 0);
    hi = std::min<std::int64_t>(hi, 2 * n2);
    if (hi >= lo) count += static_cast<std::uint64_t>(hi - lo + 1);
  }
  return count;
}

std::uint64_t q_set_size(std::int64_t big_n) {
  if (big_n < 1) throw DomainError("q_set_size requires N >= 1");
  const std::int64_t m_lo = big_n / 6 + 1;   // m > N/6
  const std::int64_t m_hi = big_n / 3;       // m <= N/3
  const std::int64_t n_lo = (big_n + 1) / 2; // n >= N/2
  std::uint64_t count = 0;
  for (std::int64_t m = m_lo; m <= m_hi; ++m) {
    for (std::int64_t n = n_lo; n <= big_n; ++n) {
      if (std::gcd(m, n) == 1) ++count;
    }
  }
  return count;
}

}  // namespace bcz
