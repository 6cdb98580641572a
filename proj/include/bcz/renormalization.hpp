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

// Shrunken sections Omega_b = {s <= 1 - b}, the renormalizing conjugacy
// phi_b : Omega -> Omega_b and return times to Omega_b.

#include <cstdint>
#include <utility>

#include "bcz/lattice.hpp"
#include "bcz/polygon.hpp"

namespace bcz {

template <class T>
class SectionConfig {
 public:
  explicit SectionConfig(T b) : b_(std::move(b)) {
    if (!(b_ >= 0 && b_ < 1)) throw DomainError("shrink parameter b must lie in [0, 1)");
  }

  const T& b() const { return b_; }
  /// 1 - b, the largest horizontal vector admitted by the section.
  T scale() const { return T(1 - b_); }

 private:
  T b_;
};

template <class T>
struct ReturnRecord {
  OmegaPoint<T> start;
  std::uint64_t n;
  std::uint64_t total_steps;
  OmegaPoint<T> landing;
};

struct IterationOptions {
  /// Ceiling on the Phi steps of a single return.
  std::uint64_t max_steps = 10'000'000;
};

template <class T>
bool omega_b_contains(const OmegaPoint<T>& p, const SectionConfig<T>& cfg) {
  return p.s() <= cfg.scale();
}

/// Index j = min{n >= 0 : (1-b)((n+1)s + t) > 1} used by phi.
template <class T>
std::int64_t phi_shift(const OmegaPoint<T>& p, const SectionConfig<T>& cfg);

/// ((1-b)s, (1-b)(j s + t)): the action of diag(1-b, 1/(1-b)) on the lattice,
/// written in section coordinates.
template <class T>
OmegaPoint<T> phi(const OmegaPoint<T>& p, const SectionConfig<T>& cfg);

template <class T>
OmegaPoint<T> phi_inverse(const OmegaPoint<T>& q, const SectionConfig<T>& cfg);

/// True when (1-b)((j+1)s + t) == 1 for some j >= 0, i.e. p sits on a branch
/// boundary of phi (measure zero).
template <class T>
bool on_phi_boundary(const OmegaPoint<T>& p, const SectionConfig<T>& cfg);

/// First landing of the orbit of p in Omega_b and the number of steps taken.
template <class T>
std::pair<OmegaPoint<T>, std::uint64_t> return_map_b(const OmegaPoint<T>& p,
                                                     const SectionConfig<T>& cfg,
                                                     const IterationOptions& opts = {});

/// R_b^(n)(p): the step count at the n-th landing in Omega_b.
template <class T>
ReturnRecord<T> return_index(const OmegaPoint<T>& p, const SectionConfig<T>& cfg, std::uint64_t n,
                             const IterationOptions& opts = {});

/// Lattice side of the plus-one event: number of primitive points with x in
/// (1-b, 1] below the n-th slope of the (0, 1-b] window.
template <class T>
std::uint64_t plus_one_lattice_count(const OmegaPoint<T>& p, const SectionConfig<T>& cfg,
                                     std::uint64_t n, const SlopeSearchOptions& opts = {});

/// R_b^(n)(p) == n + 1, computed by direct iteration and by the lattice
/// criterion. Throws CriterionMismatch when they disagree.
template <class T>
bool plus_one_event(const OmegaPoint<T>& p, const SectionConfig<T>& cfg, std::uint64_t n,
                    const SlopeSearchOptions& slope_opts = {},
                    const IterationOptions& iter_opts = {});

/// Euclidean distance between phi(p) and p.
template <class T>
double displacement(const OmegaPoint<T>& p, const SectionConfig<T>& cfg);

/// Exact polygon of Omega_b (closure).
RegionPolygon omega_b_region(const Rational& b);

}  // namespace bcz
