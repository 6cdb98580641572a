#include "doctest.h"

#include <numeric>

#include "bcz/oracles.hpp"
#include "bcz/statistics.hpp"
#include "bcz/strips.hpp"

using bcz::Rational;
using bcz::StripSpec;
using P = bcz::OmegaPoint<Rational>;

namespace {

P dec(const char* s, const char* t) { return P(bcz::parse_rational(s), bcz::parse_rational(t)); }

}  // namespace

TEST_CASE("strip spec validation") {
  CHECK_THROWS_AS(StripSpec(0, 0, Rational(1, 10)), bcz::DomainError);
  CHECK_THROWS_AS(StripSpec(0, 1, Rational(1)), bcz::DomainError);
}

TEST_CASE("strip_contains") {
  CHECK(bcz::strip_contains(StripSpec(0, 1, Rational(1, 10)), P(Rational(1), Rational(1))));
  CHECK(bcz::strip_contains(StripSpec(1, 2, Rational(1, 10)), dec("1/2", "3/4")));
  CHECK_FALSE(bcz::strip_contains(StripSpec(1, 2, Rational(1, 10)), dec("1/2", "0.7")));
}

TEST_CASE("strip membership is the interval condition on nt - ms") {
  const bcz::RegionSampler sampler(bcz::Region::Omega, 0.0, 71);
  for (std::uint64_t i = 0; i < 100000; ++i) {
    const auto pf = sampler(i);
    const std::int64_t n = 1 + static_cast<std::int64_t>(i % 7);
    const std::int64_t m = static_cast<std::int64_t>(i % (2 * n + 1));
    const StripSpec spec(m, n, Rational(1, 10));
    const P pe = bcz::convert_point<Rational>(pf);
    const Rational x = n * pe.t() - m * pe.s();
    REQUIRE(bcz::strip_contains(spec, pe) == (x > Rational(9, 10) && x <= 1));
  }
  // Exact boundaries: nt - ms = 1 is in, = 1 - b is out.
  CHECK(bcz::strip_contains(StripSpec(1, 2, Rational(1, 10)), dec("0.5", "0.75")));
  CHECK_FALSE(bcz::strip_contains(StripSpec(1, 2, Rational(1, 10)), dec("0.5", "0.7")));
}

TEST_CASE("a_mn_region") {
  const auto a12 = bcz::a_mn_region(StripSpec(1, 2, Rational(1, 10)));
  CHECK(a12.normalized_measure() == Rational(1, 25));
  CHECK(a12.normalized_measure() >= Rational(1, 70));
  CHECK(bcz::a_mn_region(StripSpec(5, 2, Rational(1, 10))).empty());
  // 2 * integral of s over [1/2, 1 - b].
  CHECK(bcz::half_section_region(Rational(1, 10)).normalized_measure() == Rational(81, 100) - Rational(1, 4));
}

TEST_CASE("strip_intersection_measure") {
  const Rational b(1, 10);
  CHECK(bcz::strip_intersection_measure(StripSpec(1, 2, b), StripSpec(1, 3, b)).unbounded_area == Rational(1, 100));
  CHECK(bcz::strip_intersection_measure(StripSpec(1, 2, b), StripSpec(3, 2, b)).clipped_measure == 0);
  const auto m = bcz::strip_intersection_measure(StripSpec(0, 1, b), StripSpec(1, 2, b));
  CHECK(m.unbounded_area == Rational(1, 100));
  CHECK(m.clipped_measure == Rational(1, 200));
  CHECK_THROWS_AS(bcz::strip_intersection_measure(StripSpec(1, 2, b), StripSpec(2, 4, b)), bcz::SlopeCoincidence);
  CHECK_THROWS_AS(bcz::strip_intersection_measure(StripSpec(1, 2, b), StripSpec(1, 3, Rational(1, 20))),
                  bcz::DomainError);
}

TEST_CASE("parallelogram area and uncut pairs") {
  const Rational b(1, 100);
  int uncut = 0;
  for (std::int64_t n = 2; n <= 12; ++n) {
    for (std::int64_t n2 = n + 1; n2 <= 14; ++n2) {
      for (std::int64_t m = 0; m <= 2 * n; ++m) {
        for (std::int64_t m2 = 0; m2 <= 2 * n2; ++m2) {
          const std::int64_t det = m * n2 - m2 * n;
          if (det == 0) continue;
          const StripSpec a(m, n, b), c(m2, n2, b);
          const auto para = bcz::strip_parallelogram(a, c);
          CHECK(para.area() == b * b / Rational(std::abs(det)));
          const auto meas = bcz::strip_intersection_measure(a, c);
          CHECK(meas.clipped_measure <= 2 * meas.unbounded_area);
          if (bcz::parallelogram_uncut(a, c)) {
            ++uncut;
            CHECK(meas.clipped_measure == 2 * meas.unbounded_area);
          }
        }
      }
    }
  }
  CHECK(uncut > 0);
}

TEST_CASE("same-n regions are disjoint") {
  const Rational b(1, 10);
  for (std::int64_t n = 1; n <= 50; ++n) {
    for (std::int64_t m = 0; m <= 2 * n; ++m) {
      for (std::int64_t m2 = m + 1; m2 <= 2 * n; ++m2) {
        REQUIRE(bcz::strip_intersection_measure(StripSpec(m, n, b), StripSpec(m2, n, b)).clipped_measure == 0);
      }
    }
  }
}

TEST_CASE("meeting_strip_range covers every strip that meets a region") {
  const Rational b(1, 20);
  const auto region = bcz::half_section_region(b);
  for (std::int64_t n = 1; n <= 30; ++n) {
    const auto range = bcz::meeting_strip_range(region, n, b);
    for (std::int64_t m = -2; m <= 2 * n + 3; ++m) {
      if (m < 0) continue;
      const bool meets = !bcz::a_mn_region(StripSpec(m, n, b)).empty();
      if (meets) {
        REQUIRE(range.has_value());
        CHECK(m >= range->first);
        CHECK(m <= range->second);
      }
    }
  }
}

TEST_CASE("neccond_holds") {
  CHECK(bcz::neccond_holds(1, 2, 2, 3));
  CHECK_FALSE(bcz::neccond_holds(0, 2, 0, 3));
  CHECK(bcz::neccond_holds(2, 2, 5, 3));
  CHECK_THROWS_AS(bcz::neccond_holds(1, 3, 1, 3), bcz::OrderError);
}

TEST_CASE("neccond is necessary when parallelograms are narrow") {
  // b (n + n2) < 1/4 for all n < n2 <= 24.
  const Rational b(1, 200);
  for (std::int64_t n = 1; n < 24; ++n) {
    for (std::int64_t m = 0; m <= 2 * n; ++m) {
      const auto a = bcz::a_mn_region(StripSpec(m, n, b));
      if (a.empty()) continue;
      for (std::int64_t n2 = n + 1; n2 <= 24; ++n2) {
        for (std::int64_t m2 = 0; m2 <= 2 * n2; ++m2) {
          if (m2 * n == m * n2) continue;
          const auto meas = bcz::strip_intersection_measure(StripSpec(m, n, b), StripSpec(m2, n2, b));
          if (meas.clipped_measure > 0) CHECK(bcz::neccond_holds(m, n, m2, n2));
        }
      }
    }
  }
}

TEST_CASE("admissible_pair_count") {
  CHECK(bcz::admissible_pair_count(2, 3) == 8);
  CHECK(bcz::admissible_pair_count(1, 2) == 6);
  CHECK_THROWS_AS(bcz::admissible_pair_count(3, 3), bcz::OrderError);
  for (std::int64_t n2 = 2; n2 <= 120; ++n2) {
    for (std::int64_t n = 1; n < n2; ++n) {
      REQUIRE(bcz::admissible_pair_count(n, n2) <= static_cast<std::uint64_t>(8 * (n2 - n)));
    }
  }
}

TEST_CASE("q_set_size") {
  CHECK(bcz::q_set_size(12) == 7);
  CHECK(bcz::q_set_size(12) <= 2 * 42);
  CHECK(bcz::q_set_size(60) == 191);
  CHECK(bcz::q_set_size(60) >= 180);
  // Asymptotically N^2 / (2 pi^2); at N = 200 the count is just short of N^2 / 20.
  CHECK(bcz::q_set_size(200) == bcz::oracle::moebius_q_set_size(200));
  CHECK(bcz::q_set_size(2000) >= 2000 * 2000 / 20);
}

TEST_CASE("second-moment inequality on integers") {
  for (long k = 0; k <= 100; ++k) CHECK(k * (k > 1 ? 1 : 0) <= k * k - k);
}

TEST_CASE("Q-set lower bound for F1 exceeds a/100") {
  // Sum of exact m(A_{m,n}) over the Q-set at a = 1/4, N = 25.
  const Rational b(1, 100);
  const std::int64_t big_n = 25;
  Rational total = 0;
  for (std::int64_t m = big_n / 6 + 1; m <= big_n / 3; ++m) {
    for (std::int64_t n = (big_n + 1) / 2; n <= big_n; ++n) {
      if (std::gcd(m, n) != 1) continue;
      total += bcz::a_mn_region(StripSpec(m, n, b)).normalized_measure();
    }
  }
  CHECK(total >= Rational(1, 400));
  const auto rep = bcz::claim_integral(bcz::ClaimKind::F1, {0.25, 0.01, 20000, 3, bcz::Region::HalfSection});
  CHECK(rep.estimate >= bcz::to_double(total));
}
