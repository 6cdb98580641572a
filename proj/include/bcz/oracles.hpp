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

// Slow, independent reference computations. Nothing in the core library
// depends on these; tests and the verification suite compare against them.

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "bcz/farey.hpp"
#include "bcz/lattice.hpp"

namespace bcz::oracle {

/// Farey fractions of order q in increasing order, generated by Stern-Brocot
/// mediants between 0/1 and 1/1.
std::vector<std::pair<std::uint64_t, std::uint64_t>> stern_brocot_farey(std::uint64_t q);

/// Euler phi by trial division.
std::uint64_t totient(std::uint64_t n);

/// 1 + sum_{k <= q} phi(k).
std::uint64_t farey_length(std::uint64_t q);

/// Orbit of (1/Q, 1) predicted by consecutive Farey denominators.
std::vector<OmegaPoint<Rational>> farey_pairs_orbit(std::uint64_t q);

/// Primitive points with x in (x_lo, x_hi], slope <= slope_max found by a
/// plain double loop over 0 <= m <= m_max, 1 <= n <= n_max, sorted by slope.
template <class T>
std::vector<PrimitivePoint<T>> brute_force_primitive(const OmegaPoint<T>& p, const T& x_lo,
                                                     const T& x_hi, const T& slope_max,
                                                     std::int64_t m_max, std::int64_t n_max);

/// Preimage of q under the BCZ map, by trying every branch 1..max_branch.
std::optional<OmegaPoint<Rational>> brute_force_preimage(const OmegaPoint<Rational>& q,
                                                         std::uint64_t max_branch);

/// #{(m, n) in [1, M]^2 : gcd(m, n) = 1} by direct gcd.
std::uint64_t brute_coprime_pairs(std::int64_t big_m);

/// Coprime pairs in (N/6, N/3] x [N/2, N] by Moebius inversion.
std::uint64_t moebius_q_set_size(std::int64_t big_n);

/// Pairs satisfying the necessary condition, by a double loop.
std::uint64_t brute_admissible_pairs(std::int64_t n, std::int64_t n2);

}  // namespace bcz::oracle
