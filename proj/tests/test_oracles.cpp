#include "doctest.h"

#include "bcz/oracles.hpp"
#include "bcz/strips.hpp"

using bcz::Rational;

TEST_CASE("Stern-Brocot Farey sequence") {
  const auto f5 = bcz::oracle::stern_brocot_farey(5);
  const std::vector<std::pair<std::uint64_t, std::uint64_t>> want{
      {0, 1}, {1, 5}, {1, 4}, {1, 3}, {2, 5}, {1, 2}, {3, 5}, {2, 3}, {3, 4}, {4, 5}, {1, 1}};
  CHECK(f5 == want);
  for (std::uint64_t q = 1; q <= 60; ++q) {
    const auto f = bcz::oracle::stern_brocot_farey(q);
    REQUIRE(f.size() == bcz::oracle::farey_length(q));
    for (std::size_t i = 0; i + 1 < f.size(); ++i) {
      // Neighbours: b c - a d = 1.
      CHECK(f[i + 1].first * f[i].second - f[i].first * f[i + 1].second == 1);
    }
  }
}

TEST_CASE("totient and Farey lengths") {
  CHECK(bcz::oracle::totient(1) == 1);
  CHECK(bcz::oracle::totient(12) == 4);
  CHECK(bcz::oracle::totient(97) == 96);
  CHECK(bcz::oracle::farey_length(5) == 11);
  CHECK(bcz::oracle::farey_length(100) == 3045);
}

TEST_CASE("coprime pair and Q-set oracles agree with the library") {
  CHECK(bcz::oracle::brute_coprime_pairs(4) == 11);
  CHECK(bcz::q_set_size(12) == bcz::oracle::moebius_q_set_size(12));
  CHECK(bcz::q_set_size(12) == 7);
  for (std::int64_t n : {30, 60, 61, 200, 311}) {
    CHECK(bcz::q_set_size(n) == bcz::oracle::moebius_q_set_size(n));
  }
}

TEST_CASE("admissible pair counts agree with brute force") {
  for (std::int64_t n2 = 2; n2 <= 40; ++n2) {
    for (std::int64_t n = 1; n < n2; ++n) {
      REQUIRE(bcz::admissible_pair_count(n, n2) == bcz::oracle::brute_admissible_pairs(n, n2));
    }
  }
}
