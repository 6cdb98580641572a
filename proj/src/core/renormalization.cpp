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

#include "bcz/renormalization.hpp"

#include <cmath>

namespace bcz {

template <class T>
std::int64_t phi_shift(const OmegaPoint<T>& p, const SectionConfig<T>& cfg) {
  const T scale = cfg.scale();
  const T& s = p.s();
  const T& t = p.t();
  std::int64_t j = ScalarTraits<T>::floor_i64(T((1 / scale - t) / s));
  if (j < 0) j = 0;
  if constexpr (!ScalarTraits<T>::exact) {
    auto exceeds = [&](std::int64_t n) {
      return scale * (static_cast<double>(n + 1) * s + t) > 1.0;
    };
    while (j > 0 && exceeds(j - 1)) --j;
    while (!exceeds(j)) ++j;
  }
  return j;
}

template <class T>
OmegaPoint<T> phi(const OmegaPoint<T>& p, const SectionConfig<T>& cfg) {
  const T scale = cfg.scale();
  const std::int64_t j = phi_shift(p, cfg);
  T s = scale * p.s();
  T t = scale * (ScalarTraits<T>::from_int(j) * p.s() + p.t());
  if constexpr (!ScalarTraits<T>::exact) {
    if (t > 1.0) t = 1.0;
    if (!(s + t > 1.0)) t = std::nextafter(1.0 - s, 2.0);
  }
  return OmegaPoint<T>(std::move(s), std::move(t));
}

template <class T>
OmegaPoint<T> phi_inverse(const OmegaPoint<T>& q, const SectionConfig<T>& cfg) {
  if (!omega_b_contains(q, cfg)) {
    throw DomainError("phi_inverse requires a point of Omega_b");
  }
  const T scale = cfg.scale();
  T s = q.s() / scale;
  if constexpr (!ScalarTraits<T>::exact) {
    if (s > 1.0) s = 1.0;
  }
  return normalize_section(s, T(q.t() / scale));
}

template <class T>
bool on_phi_boundary(const OmegaPoint<T>& p, const SectionConfig<T>& cfg) {
  // (1-b)((j+1)s + t) == 1 for an integer j >= 0.
  const T k = (1 / cfg.scale() - p.t()) / p.s();
  return k >= 1 && ScalarTraits<T>::floor(k) == k;
}

template <class T>
std::pair<OmegaPoint<T>, std::uint64_t> return_map_b(const OmegaPoint<T>& p,
                                                     const SectionConfig<T>& cfg,
                                                     const IterationOptions& opts) {
  OmegaPoint<T> cur = p;
  for (std::uint64_t steps = 1; steps <= opts.max_steps; ++steps) {
    cur = bcz_step(cur);
    if (omega_b_contains(cur, cfg)) return {cur, steps};
  }
  throw IterationCeiling("no return to Omega_b within " + std::to_string(opts.max_steps) +
                         " steps");
}

template <class T>
ReturnRecord<T> return_index(const OmegaPoint<T>& p, const SectionConfig<T>& cfg, std::uint64_t n,
                             const IterationOptions& opts) {
  if (n < 1) throw DomainError("return index n must be at least 1");
  if (!omega_b_contains(p, cfg)) throw DomainError("return index requires a point of Omega_b");
  OmegaPoint<T> cur = p;
  std::uint64_t total = 0;
  for (std::uint64_t k = 0; k < n; ++k) {
    auto [landing, steps] = return_map_b(cur, cfg, opts);
    cur = std::move(landing);
    total += steps;
  }
  return ReturnRecord<T>{p, n, total, cur};
}

template <class T>
std::uint64_t plus_one_lattice_count(const OmegaPoint<T>& p, const SectionConfig<T>& cfg,
                                     std::uint64_t n, const SlopeSearchOptions& opts) {
  if (cfg.b() == 0) return 0;
  const T scale = cfg.scale();
  const T bound = nth_slope(p, n, scale, opts);
  return count_below_slope(p, scale, T(1), bound);
}

template <class T>
bool plus_one_event(const OmegaPoint<T>& p, const SectionConfig<T>& cfg, std::uint64_t n,
                    const SlopeSearchOptions& slope_opts, const IterationOptions& iter_opts) {
  const bool by_iteration = return_index(p, cfg, n, iter_opts).total_steps == n + 1;
  const bool by_lattice = plus_one_lattice_count(p, cfg, n, slope_opts) == 1;
  if (by_iteration != by_lattice) {
    throw CriterionMismatch("plus-one event at (" + to_string(p.s()) + ", " + to_string(p.t()) +
                            "), n = " + std::to_string(n) + ": iteration says " +
                            (by_iteration ? "true" : "false") + ", lattice says " +
                            (by_lattice ? "true" : "false"));
  }
  return by_iteration;
}

template <class T>
double displacement(const OmegaPoint<T>& p, const SectionConfig<T>& cfg) {
  const auto q = phi(p, cfg);
  return std::hypot(to_double(T(q.s() - p.s())), to_double(T(q.t() - p.t())));
}

RegionPolygon omega_b_region(const Rational& b) {
  if (!(b >= 0 && b < 1)) throw DomainError("shrink parameter b must lie in [0, 1)");
  const Rational top = 1 - b;
  return RegionPolygon({{Rational(0), Rational(1)}, {top, Rational(1 - top)}, {top, Rational(1)}});
}

#define BCZ_INSTANTIATE_RENORM(T)                                                               \
  template std::int64_t phi_shift(const OmegaPoint<T>&, const SectionConfig<T>&);               \
  template OmegaPoint<T> phi(const OmegaPoint<T>&, const SectionConfig<T>&);                    \
  template OmegaPoint<T> phi_inverse(const OmegaPoint<T>&, const SectionConfig<T>&);            \
  template bool on_phi_boundary(const OmegaPoint<T>&, const SectionConfig<T>&);                 \
  template std::pair<OmegaPoint<T>, std::uint64_t> return_map_b(                                \
      const OmegaPoint<T>&, const SectionConfig<T>&, const IterationOptions&);                  \
  template ReturnRecord<T> return_index(const OmegaPoint<T>&, const SectionConfig<T>&,          \
                                        std::uint64_t, const IterationOptions&);                \
  template std::uint64_t plus_one_lattice_count(const OmegaPoint<T>&, const SectionConfig<T>&,  \
                                                std::uint64_t, const SlopeSearchOptions&);      \
  template bool plus_one_event(const OmegaPoint<T>&, const SectionConfig<T>&, std::uint64_t,    \
                               const SlopeSearchOptions&, const IterationOptions&);             \
  template double displacement(const OmegaPoint<T>&, const SectionConfig<T>&);

BCZ_INSTANTIATE_RENORM(double)
BCZ_INSTANTIATE_RENORM(Rational)

#undef BCZ_INSTANTIATE_RENORM

}  // namespace bcz
