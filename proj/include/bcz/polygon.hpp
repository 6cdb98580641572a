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

// Exact convex polygons over the rationals, clipped by half-planes.

#include <vector>

#include "bcz/numeric.hpp"

namespace bcz {

struct Vec2 {
  Rational s;
  Rational t;
  friend bool operator==(const Vec2& a, const Vec2& b) { return a.s == b.s && a.t == b.t; }
};

/// The closed half-plane a*s + b*t <= c.
struct HalfPlane {
  Rational a;
  Rational b;
  Rational c;

  Rational excess(const Vec2& v) const { return a * v.s + b * v.t - c; }
};

/// Convex polygon with counter-clockwise vertices and its exact area. Open
/// and closed boundaries are not distinguished; only areas matter.
class RegionPolygon {
 public:
  RegionPolygon() = default;
  explicit RegionPolygon(std::vector<Vec2> vertices);

  const std::vector<Vec2>& vertices() const { return vertices_; }
  const Rational& area() const { return area_; }
  bool empty() const { return area_ == 0; }

  /// Area normalized by the area 1/2 of the Farey triangle.
  Rational normalized_measure() const { return 2 * area_; }

  RegionPolygon clipped(const HalfPlane& h) const;

  /// Keeps lo <= a*s + b*t <= hi.
  RegionPolygon clipped_band(const Rational& a, const Rational& b, const Rational& lo,
                             const Rational& hi) const;

  bool contains(const Vec2& v) const;

 private:
  std::vector<Vec2> vertices_;
  Rational area_;
};

Rational shoelace_area(const std::vector<Vec2>& vertices);

}  // namespace bcz
