#include "doctest.h"

#include "bcz/polygon.hpp"
#include "bcz/sampling.hpp"

using bcz::HalfPlane;
using bcz::Rational;
using bcz::RegionPolygon;
using bcz::Vec2;

namespace {

RegionPolygon unit_square() {
  return RegionPolygon({{Rational(0), Rational(0)}, {Rational(1), Rational(0)},
                        {Rational(1), Rational(1)}, {Rational(0), Rational(1)}});
}

Rational small_rational(std::uint64_t seed, std::uint64_t i, std::uint64_t draw) {
  const auto num = static_cast<long>(bcz::uniform01(seed, i, draw) * 41) - 20;
  const auto den = 1 + static_cast<long>(bcz::uniform01(seed, i, draw + 1) * 12);
  return Rational(num, den);
}

}  // namespace

TEST_CASE("shoelace and orientation") {
  const std::vector<Vec2> cw{{Rational(0), Rational(0)}, {Rational(0), Rational(1)}, {Rational(1), Rational(0)}};
  CHECK(bcz::shoelace_area(cw) == Rational(1, 2));
  const RegionPolygon tri(cw);
  CHECK(tri.area() == Rational(1, 2));
  CHECK(tri.contains({Rational(1, 4), Rational(1, 4)}));
  CHECK_FALSE(tri.contains({Rational(3, 4), Rational(3, 4)}));
}

TEST_CASE("degenerate polygons are empty") {
  const RegionPolygon line({{Rational(0), Rational(0)}, {Rational(1), Rational(1)}, {Rational(2), Rational(2)}});
  CHECK(line.empty());
  CHECK(line.vertices().empty());
  CHECK(RegionPolygon().empty());
  const RegionPolygon dup({{Rational(0), Rational(0)}, {Rational(0), Rational(0)},
                           {Rational(1), Rational(0)}, {Rational(0), Rational(1)}});
  CHECK(dup.vertices().size() == 3);
}

TEST_CASE("clipping the unit square") {
  const auto sq = unit_square();
  CHECK(sq.clipped(HalfPlane{Rational(1), Rational(1), Rational(1)}).area() == Rational(1, 2));
  CHECK(sq.clipped(HalfPlane{Rational(1), Rational(0), Rational(2)}).area() == 1);
  CHECK(sq.clipped(HalfPlane{Rational(1), Rational(0), Rational(-1)}).empty());
  CHECK(sq.clipped_band(Rational(0), Rational(1), Rational(1, 4), Rational(1, 2)).area() == Rational(1, 4));
  // Touching along an edge only has zero area.
  CHECK(sq.clipped(HalfPlane{Rational(1), Rational(0), Rational(0)}).empty());
}

TEST_CASE("a half-plane and its complement split the area") {
  const auto sq = unit_square();
  for (std::uint64_t i = 0; i < 500; ++i) {
    const HalfPlane h{small_rational(3, i, 0), small_rational(3, i, 2), small_rational(3, i, 4)};
    const HalfPlane g{-h.a, -h.b, -h.c};
    const auto in = sq.clipped(h);
    const auto out = sq.clipped(g);
    CHECK(in.area() + out.area() == 1);
    CHECK(in.clipped(h).area() == in.area());
  }
}

TEST_CASE("clipped polygons stay convex and counter-clockwise") {
  auto poly = unit_square();
  for (std::uint64_t i = 0; i < 6; ++i) {
    poly = poly.clipped(HalfPlane{small_rational(5, i, 0), small_rational(5, i, 2), Rational(1, 2)});
    if (poly.empty()) break;
    const auto& v = poly.vertices();
    for (std::size_t k = 0; k < v.size(); ++k) {
      const Vec2& a = v[k];
      const Vec2& b = v[(k + 1) % v.size()];
      const Vec2& c = v[(k + 2) % v.size()];
      CHECK((b.s - a.s) * (c.t - a.t) - (b.t - a.t) * (c.s - a.s) > 0);
    }
  }
}
