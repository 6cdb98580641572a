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

#include "bcz/farey.hpp"

namespace bcz {

template <class T>
BranchIndex kappa(const OmegaPoint<T>& p) {
  const T q = (1 + p.s()) / p.t();
  const std::int64_t k = ScalarTraits<T>::floor_i64(q);
  return BranchIndex{static_cast<std::uint64_t>(k)};
}

template <>
OmegaPoint<Rational> bcz_step(const OmegaPoint<Rational>& p) {
  const Rational k = ScalarTraits<Rational>::floor((1 + p.s()) / p.t());
  Rational u = k * p.t() - p.s();
  return OmegaPoint<Rational>(p.t(), std::move(u));
}

template <>
OmegaPoint<double> bcz_step(const OmegaPoint<double>& p) {
  const double s = p.s();
  const double t = p.t();
  const double k = std::floor((1.0 + s) / t);
  double u = k * t - s;
  // Rounding can push u one branch off; move it back into (1 - t, 1].
  if (u > 1.0) u -= t;
  if (!(t + u > 1.0)) u += t;
  if (u > 1.0) u = 1.0;
  return OmegaPoint<double>(t, u);
}

template <class T>
OrbitRecord<T> bcz_orbit(const OmegaPoint<T>& p, std::uint64_t n) {
  if (n < 1) throw DomainError("orbit length must be at least 1");
  OrbitRecord<T> rec;
  rec.points.reserve(n + 1);
  rec.points.push_back(p);
  for (std::uint64_t i = 1; i <= n; ++i) {
    rec.points.push_back(bcz_step(rec.points.back()));
    if constexpr (ScalarTraits<T>::exact) {
      if (!rec.period && rec.points.back() == p) rec.period = i;
    }
  }
  return rec;
}

std::vector<OmegaPoint<Rational>> farey_section_orbit(std::uint64_t q) {
  if (q < 1) throw DomainError("Farey order must be at least 1");
  const OmegaPoint<Rational> start(Rational(1, static_cast<unsigned long>(q)), Rational(1));
  std::vector<OmegaPoint<Rational>> out{start};
  for (;;) {
    auto next = bcz_step(out.back());
    if (next == start) break;
    out.push_back(std::move(next));
  }
  return out;
}

bool has_common_denominator(const OmegaPoint<Rational>& p, std::uint64_t q) {
  const Rational Q(static_cast<unsigned long>(q));
  const Rational a = p.s() * Q;
  const Rational c = p.t() * Q;
  return a.get_den() == 1 && c.get_den() == 1 && a >= 1 && a <= Q && c >= 1 && c <= Q;
}

template BranchIndex kappa(const OmegaPoint<double>&);
template BranchIndex kappa(const OmegaPoint<Rational>&);
template OrbitRecord<double> bcz_orbit(const OmegaPoint<double>&, std::uint64_t);
template OrbitRecord<Rational> bcz_orbit(const OmegaPoint<Rational>&, std::uint64_t);

}  // namespace bcz
