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

#include "bcz/polygon.hpp"

#include <algorithm>

namespace bcz {

namespace {

Rational signed_double_area(const std::vector<Vec2>& v) {
  Rational twice(0);
  if (v.size() < 3) return twice;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const Vec2& p = v[i];
    const Vec2& q = v[(i + 1) % v.size()];
    twice += p.s * q.t - q.s * p.t;
  }
  return twice;
}

}  // namespace

Rational shoelace_area(const std::vector<Vec2>& v) { return abs(signed_double_area(v)) / 2; }

RegionPolygon::RegionPolygon(std::vector<Vec2> vertices) : vertices_(std::move(vertices)) {
  // Drop repeated consecutive vertices left behind by clipping through a corner.
  auto last = std::unique(vertices_.begin(), vertices_.end());
  vertices_.erase(last, vertices_.end());
  while (vertices_.size() > 1 && vertices_.front() == vertices_.back()) vertices_.pop_back();
  const Rational twice = signed_double_area(vertices_);
  if (twice < 0) std::reverse(vertices_.begin(), vertices_.end());
  area_ = abs(twice) / 2;
  if (area_ == 0) vertices_.clear();
}

RegionPolygon RegionPolygon::clipped(const HalfPlane& h) const {
  if (vertices_.empty()) return {};
  std::vector<Vec2> out;
  out.reserve(vertices_.size() + 1);
  const std::size_t n = vertices_.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Vec2& p = vertices_[i];
    const Vec2& q = vertices_[(i + 1) % n];
    const Rational fp = h.excess(p);
    const Rational fq = h.excess(q);
    if (fp <= 0) out.push_back(p);
    if ((fp < 0 && fq > 0) || (fp > 0 && fq < 0)) {
      const Rational r = fp / (fp - fq);
      out.push_back({Rational(p.s + r * (q.s - p.s)), Rational(p.t + r * (q.t - p.t))});
    }
  }
  return RegionPolygon(std::move(out));
}

RegionPolygon RegionPolygon::clipped_band(const Rational& a, const Rational& b,
                                          const Rational& lo, const Rational& hi) const {
  return clipped({a, b, hi}).clipped({Rational(-a), Rational(-b), Rational(-lo)});
}

bool RegionPolygon::contains(const Vec2& v) const {
  if (vertices_.empty()) return false;
  const std::size_t n = vertices_.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Vec2& p = vertices_[i];
    const Vec2& q = vertices_[(i + 1) % n];
    const Rational cross = (q.s - p.s) * (v.t - p.t) - (q.t - p.t) * (v.s - p.s);
    if (cross < 0) return false;
  }
  return true;
}

}  // namespace bcz
