#include "doctest.h"

#include "bcz/lattice.hpp"
#include "bcz/renormalization.hpp"
#include "bcz/statistics.hpp"

using bcz::OmegaPoint;
using bcz::Rational;
using bcz::SectionConfig;
using P = OmegaPoint<Rational>;

namespace {

P pt(long sn, long sd, long tn, long td) { return P(Rational(sn, sd), Rational(tn, td)); }
P dec(const char* s, const char* t) { return P(bcz::parse_rational(s), bcz::parse_rational(t)); }

P exact_sample(bcz::Region region, double b, std::uint64_t seed, std::uint64_t i) {
  return bcz::convert_point<Rational>(bcz::RegionSampler(region, b, seed)(i));
}

}  // namespace

TEST_CASE("section config validation") {
  CHECK_THROWS_AS(SectionConfig<Rational>(Rational(1)), bcz::DomainError);
  CHECK_THROWS_AS(SectionConfig<double>(-0.1), bcz::DomainError);
  CHECK(SectionConfig<Rational>(Rational(1, 10)).scale() == Rational(9, 10));
}

TEST_CASE("omega_b_contains") {
  CHECK(bcz::omega_b_contains(pt(1, 1, 1, 1), SectionConfig<Rational>(Rational(0))));
  CHECK_FALSE(bcz::omega_b_contains(pt(1, 1, 1, 1), SectionConfig<Rational>(Rational(1, 2))));
  CHECK(bcz::omega_b_contains(dec("0.9", "0.7"), SectionConfig<Rational>(Rational(1, 10))));
}

TEST_CASE("phi examples") {
  const SectionConfig<Rational> tenth(Rational(1, 10));
  const SectionConfig<Rational> half(Rational(1, 2));
  CHECK(bcz::phi(dec("0.95", "0.95"), tenth) == dec("0.855", "0.855"));
  CHECK(bcz::phi(dec("0.9", "0.9"), half) == dec("0.45", "0.9"));
  CHECK(bcz::phi(pt(1, 1, 1, 1), half) == pt(1, 2, 1, 1));
  CHECK(bcz::phi_inverse(dec("0.855", "0.855"), tenth) == dec("0.95", "0.95"));
  CHECK(bcz::phi_inverse(pt(1, 2, 1, 1), half) == pt(1, 1, 1, 1));
  CHECK(bcz::phi_inverse(dec("0.45", "0.9"), half) == dec("0.9", "0.9"));
  CHECK_THROWS_AS(bcz::phi_inverse(pt(1, 1, 1, 1), half), bcz::DomainError);
}

TEST_CASE("float phi agrees with exact phi away from boundaries") {
  const SectionConfig<Rational> ex(Rational(1, 10));
  const SectionConfig<double> fl(0.1);
  for (std::uint64_t i = 0; i < 2000; ++i) {
    const auto pf = bcz::RegionSampler(bcz::Region::Omega, 0.0, 3)(i);
    const auto pe = bcz::convert_point<Rational>(pf);
    if (bcz::on_phi_boundary(pe, ex)) continue;
    const auto qe = bcz::phi(pe, ex);
    const auto qf = bcz::phi(pf, fl);
    CHECK(qf.s() == doctest::Approx(bcz::to_double(qe.s())).epsilon(1e-12));
    CHECK(qf.t() == doctest::Approx(bcz::to_double(qe.t())).epsilon(1e-12));
  }
}

TEST_CASE("return_map_b examples") {
  const SectionConfig<Rational> tenth(Rational(1, 10));
  const auto [q, steps] = bcz::return_map_b(dec("0.2", "0.9"), tenth);
  CHECK(q == dec("0.9", "0.7"));
  CHECK(steps == 1);
  const auto [q2, steps2] = bcz::return_map_b(pt(1, 2, 1, 1), tenth);
  CHECK(q2 == pt(1, 2, 1, 1));
  CHECK(steps2 == 2);
}

TEST_CASE("return_index examples") {
  const SectionConfig<Rational> tenth(Rational(1, 10));
  CHECK(bcz::return_index(pt(1, 2, 1, 1), tenth, 3).total_steps == 6);
  CHECK(bcz::return_index(pt(4, 5, 3, 5), tenth, 2).total_steps == 3);
  const SectionConfig<Rational> zero(Rational(0));
  CHECK(bcz::return_index(pt(2, 3, 3, 4), zero, 7).total_steps == 7);
  CHECK_THROWS_AS(bcz::return_index(pt(1, 1, 1, 1), tenth, 1), bcz::DomainError);
  CHECK_THROWS_AS(bcz::return_index(pt(1, 2, 1, 1), tenth, 3, bcz::IterationOptions{1}),
                  bcz::IterationCeiling);
}

TEST_CASE("plus_one_event examples") {
  const SectionConfig<Rational> tenth(Rational(1, 10));
  CHECK(bcz::plus_one_event(pt(4, 5, 3, 5), tenth, 2));
  CHECK_FALSE(bcz::plus_one_event(pt(1, 2, 1, 1), tenth, 3));
  const SectionConfig<Rational> zero(Rational(0));
  for (std::uint64_t n = 1; n <= 5; ++n) CHECK_FALSE(bcz::plus_one_event(pt(2, 3, 3, 4), zero, n));
}

TEST_CASE("conjugacy and bijectivity on exact samples") {
  for (const Rational& b : {Rational(1, 10), Rational(1, 100)}) {
    const SectionConfig<Rational> cfg(b);
    for (std::uint64_t i = 0; i < 300; ++i) {
      const P p = exact_sample(bcz::Region::Omega, 0.0, 43, i);
      const P q = bcz::bcz_step(p);
      if (bcz::on_phi_boundary(p, cfg) || bcz::on_phi_boundary(q, cfg)) continue;
      CHECK(bcz::phi(q, cfg) == bcz::return_map_b(bcz::phi(p, cfg), cfg).first);
      CHECK(bcz::phi_inverse(bcz::phi(p, cfg), cfg) == p);
    }
    for (std::uint64_t i = 0; i < 300; ++i) {
      const P q = exact_sample(bcz::Region::OmegaB, bcz::to_double(b), 47, i);
      if (!bcz::omega_b_contains(q, cfg)) continue;
      CHECK(bcz::phi(bcz::phi_inverse(q, cfg), cfg) == q);
    }
  }
}

TEST_CASE("return index equals the lattice count below the n-th shrunken slope") {
  const SectionConfig<Rational> cfg(Rational(1, 10));
  for (std::uint64_t i = 0; i < 40; ++i) {
    const P p = exact_sample(bcz::Region::OmegaB, 0.1, 53, i);
    if (!bcz::omega_b_contains(p, cfg)) continue;
    for (std::uint64_t n = 1; n <= 30; n += 7) {
      const auto steps = bcz::return_index(p, cfg, n).total_steps;
      const Rational slope = bcz::nth_slope(p, n, cfg.scale());
      const auto pts = bcz::enumerate_primitive(p, Rational(0), Rational(1), slope);
      CHECK(steps == pts.size());
    }
  }
}

TEST_CASE("plus-one lattice count agrees with iteration") {
  const SectionConfig<Rational> cfg(Rational(1, 100));
  int events = 0;
  for (std::uint64_t i = 0; i < 200; ++i) {
    const P p = exact_sample(bcz::Region::OmegaB, 0.01, 59, i);
    if (!bcz::omega_b_contains(p, cfg)) continue;
    const bool direct = bcz::return_index(p, cfg, 25).total_steps == 26;
    CHECK(direct == (bcz::plus_one_lattice_count(p, cfg, 25) == 1));
    events += direct;
  }
  CHECK(events > 0);
}

TEST_CASE("omega_b area") {
  for (const Rational& b : {Rational(0), Rational(1, 10), Rational(1, 100), Rational(1, 3)}) {
    const auto region = bcz::omega_b_region(b);
    CHECK(region.area() == (1 - b) * (1 - b) / 2);
    CHECK(region.normalized_measure() == (1 - b) * (1 - b));
  }
}

TEST_CASE("displacement beyond sqrt(2) b becomes rarer as b shrinks") {
  double last = 1.0;
  for (const double b : {0.1, 0.01, 0.001}) {
    const SectionConfig<double> cfg(b);
    const bcz::RegionSampler sampler(bcz::Region::Omega, 0.0, 61);
    int far = 0;
    for (std::uint64_t i = 0; i < 50000; ++i) far += bcz::displacement(sampler(i), cfg) > std::sqrt(2.0) * b;
    const double frac = far / 50000.0;
    CHECK(frac < last);
    last = frac;
  }
}
