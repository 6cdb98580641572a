#include "doctest.h"

#include <cmath>
#include <cstdlib>
#include <numbers>

#include "bcz/statistics.hpp"

using bcz::ExperimentSpec;
using bcz::Region;

namespace {

ExperimentSpec make(double a, double b, std::uint64_t samples, std::uint64_t seed, Region region) {
  ExperimentSpec s;
  s.a = a;
  s.b = b;
  s.samples = samples;
  s.seed = seed;
  s.region = region;
  return s;
}

}  // namespace

TEST_CASE("spec validation") {
  CHECK_THROWS_AS(make(0.0, 0.001, 10, 1, Region::Omega).validate(), bcz::ConfigError);
  CHECK_THROWS_AS(make(0.25, 0.3, 10, 1, Region::Omega).validate(), bcz::ConfigError);
  CHECK_THROWS_AS(make(0.25, 0.001, 0, 1, Region::Omega).validate(), bcz::ConfigError);
  CHECK(make(0.25, 0.001, 10, 1, Region::Omega).rank() == 250);
  CHECK(make(0.25, 0.01, 10, 1, Region::Omega).rank() == 25);
}

TEST_CASE("sampler determinism and support") {
  const bcz::RegionSampler omega(Region::Omega, 0.0, 8);
  CHECK(omega(12345) == omega(12345));
  double mean_s = 0.0, mean_s2 = 0.0;
  int upper = 0;
  const int n = 1000000;
  for (int i = 0; i < n; ++i) {
    const auto p = omega(static_cast<std::uint64_t>(i));
    REQUIRE(bcz::contains_omega(p.s(), p.t()));
    mean_s += p.s() / n;
    mean_s2 += p.s() * p.s() / n;
    upper += p.s() > 0.5;
  }
  const double se = std::sqrt((mean_s2 - mean_s * mean_s) / n);
  CHECK(std::abs(mean_s - 2.0 / 3.0) < 3 * se);
  const double f = static_cast<double>(upper) / n;
  CHECK(std::abs(f - 0.75) < 3 * std::sqrt(0.75 * 0.25 / n));

  const bcz::RegionSampler half(Region::HalfSection, 0.1, 8);
  const bcz::RegionSampler shrunk(Region::OmegaB, 0.1, 8);
  for (std::uint64_t i = 0; i < 10000; ++i) {
    const auto p = half(i);
    CHECK(p.s() >= 0.5);
    CHECK(p.s() <= 0.9);
    CHECK(shrunk(i).s() <= 0.9);
  }
}

TEST_CASE("claim 1 and claim 2 at reference parameters") {
  const auto f1 = bcz::claim_integral(bcz::ClaimKind::F1, make(0.25, 0.001, 100000, 7, Region::HalfSection));
  CHECK(f1.pass);
  CHECK(f1.threshold == doctest::Approx(0.0025));
  CHECK(f1.estimate >= 0.0025);

  const auto f2 = bcz::claim_integral(bcz::ClaimKind::F2Excess, make(0.1, 0.001, 50000, 7, Region::HalfSection));
  CHECK(f2.pass);
  CHECK(f2.threshold == doctest::Approx(bcz::kClaimTwoConstant * 0.01));
  // Second moment dominates the excess integral within noise.
  CHECK(f2.extra("second_moment") + 3 * f2.extra("second_moment_stderr") >= f2.estimate);
  CHECK_THROWS_AS(bcz::claim_integral(bcz::ClaimKind::F1, make(0.25, 0.001, 10, 7, Region::Omega)),
                  bcz::ConfigError);
}

TEST_CASE("claim 2 scales quadratically") {
  const auto lo = bcz::claim_integral(bcz::ClaimKind::F2Excess, make(0.1, 0.001, 50000, 11, Region::HalfSection));
  const auto hi = bcz::claim_integral(bcz::ClaimKind::F2Excess, make(0.2, 0.001, 50000, 11, Region::HalfSection));
  const double ratio = hi.estimate / lo.estimate;
  CHECK(ratio > std::pow(2.0, 1.7));
  CHECK(ratio < std::pow(2.0, 2.3));
}

TEST_CASE("g0 and plus-one fractions") {
  const auto g0 = bcz::g0_fraction(make(0.25, 0.001, 4000, 5, Region::OmegaB));
  CHECK(g0.estimate >= 0.9);
  const auto p1 = bcz::plus_one_fraction(make(0.25, 0.01, 4000, 5, Region::OmegaB));
  CHECK(p1.estimate >= 0.005);
  CHECK(p1.pass);
  CHECK(p1.extra("intersection_with_event_fraction") <= p1.extra("intersection_fraction"));
  // On Omega_0 every step returns.
  const auto zero = bcz::plus_one_fraction(make(0.25, 0.0, 2000, 5, Region::OmegaB));
  CHECK(zero.estimate == 0.0);
}

TEST_CASE("reports do not depend on the thread cap") {
  const auto spec = make(0.25, 0.01, 30000, 13, Region::HalfSection);
  setenv("BCZ_LAB_THREADS", "1", 1);
  const auto a = bcz::claim_integral(bcz::ClaimKind::F1, spec);
  unsetenv("BCZ_LAB_THREADS");
  const auto b = bcz::claim_integral(bcz::ClaimKind::F1, spec);
  CHECK(a.estimate == b.estimate);
  CHECK(a.std_error == b.std_error);
}

TEST_CASE("birkhoff slope rate") {
  const double z2 = bcz::birkhoff_slope_rate(bcz::OmegaPoint<double>(1.0, 1.0), 100, 1.0);
  CHECK(z2 == 1.0);  // Z^2 has primitive slopes 1, 2, 3, ... over x = 1
  const auto p = bcz::RegionSampler(Region::Omega, 0.0, 77)(0);
  const double pi2_3 = std::numbers::pi * std::numbers::pi / 3;
  CHECK(bcz::birkhoff_slope_rate(p, 100000, 1.0) == doctest::Approx(pi2_3).epsilon(0.02));
  CHECK(bcz::birkhoff_slope_rate(p, 100000, 0.9) == doctest::Approx(pi2_3 / 0.81).epsilon(0.02));
}

TEST_CASE("coprime density") {
  CHECK(bcz::coprime_density(1) == 1.0);
  CHECK(bcz::coprime_density(4) == 11.0 / 16.0);
  CHECK(bcz::coprime_density(2000) == doctest::Approx(6 / (std::numbers::pi * std::numbers::pi)).epsilon(0.008));
}

TEST_CASE("invariance histogram test") {
  auto spec = make(0.25, 0.001, 1000000, 2, Region::Omega);
  const auto none = bcz::invariance_histogram_test(spec, 16, 0);
  CHECK(none.estimate == 0.0);
  const auto five = bcz::invariance_histogram_test(spec, 16, 5);
  CHECK(five.estimate < 0.01);
  CHECK(five.pass);
  spec.samples = 200000;
  const auto skewed = bcz::invariance_histogram_test(spec, 16, 5, bcz::SamplerKind::SquaredSBiased);
  CHECK_FALSE(skewed.pass);
  CHECK_THROWS_AS(bcz::invariance_histogram_test(spec, 3, 1), bcz::ConfigError);
}
