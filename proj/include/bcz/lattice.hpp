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

// Unimodular lattices attached to points of the Farey triangle, and their
// primitive vectors ordered by slope.

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "bcz/farey.hpp"

namespace bcz {

/// Basis (s, 0), (t, 1/s) of the lattice of an Omega point.
template <class T>
class LatticeBasis {
 public:
  explicit LatticeBasis(const OmegaPoint<T>& p) : s_(p.s()), t_(p.t()) {}

  std::array<T, 2> v1() const { return {s_, T(0)}; }
  std::array<T, 2> v2() const { return {t_, T(1 / s_)}; }
  T determinant() const { return s_ * T(1 / s_); }

  /// n (t, 1/s) - m (s, 0).
  std::array<T, 2> point(std::int64_t m, std::int64_t n) const;

 private:
  T s_;
  T t_;
};

/// The lattice point n v2 - m v1 with gcd(m, n) = 1. slope is y/x and is
/// empty when x == 0.
template <class T>
struct PrimitivePoint {
  std::int64_t m;
  std::int64_t n;
  T x;
  T y;
  std::optional<T> slope;
};

/// (x_lo, x_hi] x [0, y_max].
template <class T>
class BoxSpec {
 public:
  BoxSpec(T x_lo, T x_hi, T y_max);

  const T& x_lo() const { return x_lo_; }
  const T& x_hi() const { return x_hi_; }
  const T& y_max() const { return y_max_; }

 private:
  T x_lo_, x_hi_, y_max_;
};

struct SlopeSearchOptions {
  /// Largest slope ceiling the doubling search may reach.
  double ceiling = 16777216.0;
};

template <class T>
PrimitivePoint<T> primitive_point(const OmegaPoint<T>& p, std::int64_t m, std::int64_t n);

/// All primitive points with x in (x_lo, x_hi], y > 0 and slope <= slope_max,
/// sorted by increasing slope.
template <class T>
std::vector<PrimitivePoint<T>> enumerate_primitive(const OmegaPoint<T>& p, const T& x_lo,
                                                   const T& x_hi, const T& slope_max);

/// The `count` smallest slopes of primitive points with x in (0, x_max],
/// ascending. Throws SearchCeilingExceeded for starved windows.
template <class T>
std::vector<T> first_slopes(const OmegaPoint<T>& p, std::uint64_t count, const T& x_max,
                            const SlopeSearchOptions& opts = {});

/// Slope of the n-th primitive point (by slope) with x in (0, x_max]. This is
/// the flow time to the n-th return to the section {horizontal vector <= x_max}.
template <class T>
T nth_slope(const OmegaPoint<T>& p, std::uint64_t n, const T& x_max,
            const SlopeSearchOptions& opts = {});

/// Number of primitive points in the box (y > 0 only).
template <class T>
std::uint64_t box_count(const OmegaPoint<T>& p, const BoxSpec<T>& box);

/// Number of primitive points with x in (x_lo, x_hi] and slope strictly below
/// `slope_bound`.
template <class T>
std::uint64_t count_below_slope(const OmegaPoint<T>& p, const T& x_lo, const T& x_hi,
                                const T& slope_bound);

/// The canonical representative (s, t) with t = t_raw mod s and t in (1-s, 1].
template <class T>
OmegaPoint<T> normalize_section(const T& s, const T& t_raw);

}  // namespace bcz
