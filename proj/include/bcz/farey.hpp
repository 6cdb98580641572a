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

// The Farey triangle, the BCZ map and its orbits.

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "bcz/numeric.hpp"

namespace bcz {

/// True iff 0 < s <= 1, 0 < t <= 1 and s + t > 1.
template <class T>
bool contains_omega(const T& s, const T& t) {
  return s > 0 && s <= 1 && t > 0 && t <= 1 && s + t > 1;
}

/// A point (s, t) of the Farey triangle. The constructor enforces membership.
template <class T>
class OmegaPoint {
 public:
  using value_type = T;

  OmegaPoint(T s, T t) : s_(std::move(s)), t_(std::move(t)) {
    if (!contains_omega(s_, t_)) {
      throw DomainError("point (" + to_string(s_) + ", " + to_string(t_) +
                        ") is outside the Farey triangle");
    }
  }

  const T& s() const { return s_; }
  const T& t() const { return t_; }

  friend bool operator==(const OmegaPoint& a, const OmegaPoint& b) {
    return a.s_ == b.s_ && a.t_ == b.t_;
  }

 private:
  T s_;
  T t_;
};

template <class To, class From>
OmegaPoint<To> convert_point(const OmegaPoint<From>& p) {
  return OmegaPoint<To>(convert<To>(p.s()), convert<To>(p.t()));
}

/// Branch index of the map; always >= 1 on the triangle.
struct BranchIndex {
  std::uint64_t j;
  friend bool operator==(BranchIndex, BranchIndex) = default;
};

/// floor((1 + s) / t). Exact in exact mode, including integer quotients.
template <class T>
BranchIndex kappa(const OmegaPoint<T>& p);

/// (s, t) -> (t, -s + kappa * t).
template <class T>
OmegaPoint<T> bcz_step(const OmegaPoint<T>& p);

/// (s, t) -> (t, s). Conjugates the map to its inverse.
template <class T>
OmegaPoint<T> swap_coordinates(const OmegaPoint<T>& p) {
  return OmegaPoint<T>(p.t(), p.s());
}

/// The linear action on the branch kappa = j: (s, t) -> (t, -s + j t).
struct BranchMatrix {
  std::int64_t a, b, c, d;

  static BranchMatrix for_branch(std::int64_t j) { return {0, 1, -1, j}; }
  std::int64_t determinant() const { return a * d - b * c; }
};

template <class T>
struct OrbitRecord {
  std::vector<OmegaPoint<T>> points;
  std::optional<std::uint64_t> period;  // exact mode only
  NumericMode mode = ScalarTraits<T>::mode;
};

/// p, Phi(p), ..., Phi^n(p). In exact mode the period is the first i >= 1
/// with points[i] == points[0].
template <class T>
OrbitRecord<T> bcz_orbit(const OmegaPoint<T>& p, std::uint64_t n);

/// Orbit of (1/Q, 1) up to its first return. Point i is (q_i/Q, q_{i+1}/Q)
/// for consecutive Farey denominators q_i of order Q.
std::vector<OmegaPoint<Rational>> farey_section_orbit(std::uint64_t q);

/// True iff s*Q and t*Q are integers in [1, Q].
bool has_common_denominator(const OmegaPoint<Rational>& p, std::uint64_t q);

}  // namespace bcz
