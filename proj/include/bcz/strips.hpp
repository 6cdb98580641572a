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

#pragma once

// The strips S_{m,n} = {1 - b < n t - m s <= 1}, their pieces A_{m,n} inside
// the half-section, pairwise intersections and the counting bounds used in
// the second-moment estimate.

#include <cstdint>
#include <optional>
#include <utility>

#include "bcz/farey.hpp"
#include "bcz/polygon.hpp"

namespace bcz {

class StripSpec {
 public:
  StripSpec(std::int64_t m, std::int64_t n, Rational b);

  std::int64_t m() const { return m_; }
  std::int64_t n() const { return n_; }
  const Rational& b() const { return b_; }

 private:
  std::int64_t m_;
  std::int64_t n_;
  Rational b_;
};

bool strip_contains(const StripSpec& spec, const OmegaPoint<Rational>& p);
bool strip_contains(const StripSpec& spec, const OmegaPoint<double>& p);

/// {(s, t) in Omega_b : s >= 1/2}; empty when b >= 1/2.
RegionPolygon half_section_region(const Rational& b);

/// A_{m,n} = S_{m,n} intersected with the half-section.
RegionPolygon a_mn_region(const StripSpec& spec);

struct IntersectionMeasure {
  Rational unbounded_area;   // b^2 / |m n' - m' n|, the full-strip parallelogram
  Rational clipped_measure;  // normalized measure of A_{m,n} and A_{m',n'} combined
};

IntersectionMeasure strip_intersection_measure(const StripSpec& first, const StripSpec& second);

/// The parallelogram S_{m,n} and S_{m',n'} before clipping to the half-section.
RegionPolygon strip_parallelogram(const StripSpec& first, const StripSpec& second);

/// True when the parallelogram lies inside the closed half-section.
bool parallelogram_uncut(const StripSpec& first, const StripSpec& second);

/// Integer range [lo, hi] of m' for which S_{m',n'} meets the interior of a
/// nonempty convex region with s > 0 everywhere. Empty optional if none.
std::optional<std::pair<std::int64_t, std::int64_t>> meeting_strip_range(
    const RegionPolygon& region, std::int64_t n2, const Rational& b);

/// 4(n2 - n)/5 <= m2 n - m n2 <= 4(n2 - n). Requires n < n2.
bool neccond_holds(std::int64_t m, std::int64_t n, std::int64_t m2, std::int64_t n2);

/// Number of (m, m') in [0, 2n] x [0, 2n'] with neccond_holds.
std::uint64_t admissible_pair_count(std::int64_t n, std::int64_t n2);

/// Number of coprime (m, n) in (N/6, N/3] x [N/2, N].
std::uint64_t q_set_size(std::int64_t big_n);

}  // namespace bcz
