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

#include "bcz/lattice.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace bcz {

namespace {

template <class T>
using Traits = ScalarTraits<T>;

template <class T>
T from_int(std::int64_t v) {
  return Traits<T>::from_int(v);
}

// Visits every primitive (m, n) with 1 <= n <= n_max whose x = n t - m s lies
// in (x_lo, x_hi]. m >= 0 always holds for such points.
template <class T, class Fn>
void scan_window(const OmegaPoint<T>& p, const T& x_lo, const T& x_hi, std::int64_t n_max,
                 Fn&& fn) {
  const T& s = p.s();
  const T& t = p.t();
  for (std::int64_t n = 1; n <= n_max; ++n) {
    const T nt = from_int<T>(n) * t;
    std::int64_t m_lo = Traits<T>::ceil_i64(T((nt - x_hi) / s));
    std::int64_t m_hi = Traits<T>::ceil_i64(T((nt - x_lo) / s)) - 1;
    if constexpr (!Traits<T>::exact) {
      --m_lo;
      ++m_hi;
    }
    m_lo = std::max<std::int64_t>(m_lo, 0);
    for (std::int64_t m = m_lo; m <= m_hi; ++m) {
      T x = nt - from_int<T>(m) * s;
      if (!(x > x_lo && x <= x_hi)) continue;
      if (std::gcd(m, n) != 1) continue;
      fn(m, n, x);
    }
  }
}

template <class T>
std::int64_t n_bound(const T& v) {
  std::int64_t n = Traits<T>::floor_i64(v);
  if constexpr (!Traits<T>::exact) ++n;
  return n;
}

// Slopes of primitive points with x in (0, x_max] and slope <= bound.
template <class T>
std::vector<T> collect_slopes(const OmegaPoint<T>& p, const T& x_max, const T& bound) {
  std::vector<T> out;
  const T zero(0);
  scan_window(p, zero, x_max, n_bound<T>(T(p.s() * bound * x_max)),
              [&](std::int64_t, std::int64_t n, const T& x) {
                T slope = from_int<T>(n) / p.s() / x;
                if (slope <= bound) out.push_back(std::move(slope));
              });
  return out;
}

template <class T>
void check_ties(const std::vector<T>& sorted, std::size_t upto) {
  if constexpr (Traits<T>::exact) {
    for (std::size_t i = 1; i < upto && i < sorted.size(); ++i) {
      if (sorted[i] == sorted[i - 1]) {
        throw std::logic_error("two primitive points share a slope");
      }
    }
  }
}

template <class T>
T initial_bound(std::uint64_t count, const T& x_max, double ceiling) {
  const double xd = to_double(x_max);
  double guess = 4.0 * static_cast<double>(count) / (xd * xd) + 4.0;
  guess = std::min(std::ceil(guess), ceiling);
  return convert<T>(guess);
}

template <class T>
std::vector<T> search_slopes(const OmegaPoint<T>& p, std::uint64_t count, const T& x_max,
                             const SlopeSearchOptions& opts) {
  if (count < 1) throw DomainError("slope rank must be at least 1");
  if (!(x_max > 0 && x_max <= 1)) throw DomainError("x window must lie in (0, 1]");
  T bound = initial_bound(count, x_max, opts.ceiling);
  for (;;) {
    auto slopes = collect_slopes(p, x_max, bound);
    if (slopes.size() >= count) return slopes;
    if (to_double(bound) >= opts.ceiling) {
      throw SearchCeilingExceeded("found " + std::to_string(slopes.size()) + " of " +
                                  std::to_string(count) + " points below slope ceiling " +
                                  to_string(opts.ceiling));
    }
    bound = convert<T>(std::min(2.0 * to_double(bound), opts.ceiling));
  }
}

}  // namespace

template <class T>
std::array<T, 2> LatticeBasis<T>::point(std::int64_t m, std::int64_t n) const {
  return {T(from_int<T>(n) * t_ - from_int<T>(m) * s_), T(from_int<T>(n) / s_)};
}

template <class T>
BoxSpec<T>::BoxSpec(T x_lo, T x_hi, T y_max)
    : x_lo_(std::move(x_lo)), x_hi_(std::move(x_hi)), y_max_(std::move(y_max)) {
  if (!(x_lo_ >= 0 && x_lo_ < x_hi_ && x_hi_ <= 1 && y_max_ > 0)) {
    throw DomainError("box requires 0 <= x_lo < x_hi <= 1 and y_max > 0");
  }
}

template <class T>
PrimitivePoint<T> primitive_point(const OmegaPoint<T>& p, std::int64_t m, std::int64_t n) {
  if (n < 1) throw DomainError("primitive point index n must be at least 1");
  if (m < 0) throw DomainError("primitive point index m must be nonnegative");
  if (std::gcd(m, n) != 1) {
    throw CoprimalityError("gcd(" + std::to_string(m) + ", " + std::to_string(n) + ") != 1");
  }
  const auto xy = LatticeBasis<T>(p).point(m, n);
  PrimitivePoint<T> out{m, n, xy[0], xy[1], std::nullopt};
  if (out.x != 0) out.slope = T(out.y / out.x);
  return out;
}

template <class T>
std::vector<PrimitivePoint<T>> enumerate_primitive(const OmegaPoint<T>& p, const T& x_lo,
                                                   const T& x_hi, const T& slope_max) {
  if (!(x_lo >= 0 && x_lo < x_hi && x_hi <= 1)) {
    throw DomainError("x window must satisfy 0 <= x_lo < x_hi <= 1");
  }
  if (!(slope_max > 0)) throw DomainError("slope_max must be positive");
  std::vector<PrimitivePoint<T>> out;
  scan_window(p, x_lo, x_hi, n_bound<T>(T(p.s() * slope_max * x_hi)),
              [&](std::int64_t m, std::int64_t n, const T& x) {
                T y = from_int<T>(n) / p.s();
                T slope = y / x;
                if (slope <= slope_max) out.push_back({m, n, x, std::move(y), std::move(slope)});
              });
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return *a.slope < *b.slope; });
  if constexpr (Traits<T>::exact) {
    for (std::size_t i = 1; i < out.size(); ++i) {
      if (*out[i].slope == *out[i - 1].slope) {
        throw std::logic_error("two primitive points share a slope");
      }
    }
  }
  return out;
}

template <class T>
std::vector<T> first_slopes(const OmegaPoint<T>& p, std::uint64_t count, const T& x_max,
                            const SlopeSearchOptions& opts) {
  auto slopes = search_slopes(p, count, x_max, opts);
  const auto k = static_cast<std::ptrdiff_t>(count);
  std::partial_sort(slopes.begin(), slopes.begin() + k, slopes.end());
  check_ties(slopes, count);
  slopes.resize(count);
  return slopes;
}

template <class T>
T nth_slope(const OmegaPoint<T>& p, std::uint64_t n, const T& x_max,
            const SlopeSearchOptions& opts) {
  if constexpr (Traits<T>::exact) {
    return first_slopes(p, n, x_max, opts).back();
  } else {
    auto slopes = search_slopes(p, n, x_max, opts);
    auto nth = slopes.begin() + static_cast<std::ptrdiff_t>(n - 1);
    std::nth_element(slopes.begin(), nth, slopes.end());
    return *nth;
  }
}

template <class T>
std::uint64_t box_count(const OmegaPoint<T>& p, const BoxSpec<T>& box) {
  std::uint64_t count = 0;
  scan_window(p, box.x_lo(), box.x_hi(), n_bound<T>(T(p.s() * box.y_max())),
              [&](std::int64_t, std::int64_t n, const T&) {
                if (from_int<T>(n) / p.s() <= box.y_max()) ++count;
              });
  return count;
}

template <class T>
std::uint64_t count_below_slope(const OmegaPoint<T>& p, const T& x_lo, const T& x_hi,
                                const T& slope_bound) {
  if (!(x_lo < x_hi) || !(slope_bound > 0)) return 0;
  std::uint64_t count = 0;
  scan_window(p, x_lo, x_hi, n_bound<T>(T(p.s() * slope_bound * x_hi)),
              [&](std::int64_t, std::int64_t n, const T& x) {
                if (from_int<T>(n) / p.s() / x < slope_bound) ++count;
              });
  return count;
}

template <class T>
OmegaPoint<T> normalize_section(const T& s, const T& t_raw) {
  if (!(s > 0 && s <= 1)) throw DomainError("section length s must lie in (0, 1]");
  const T k = Traits<T>::ceil(T((t_raw - 1) / s));
  T t = t_raw - k * s;
  if constexpr (!Traits<T>::exact) {
    while (t > 1) t -= s;
    while (!(s + t > 1)) t += s;
  }
  return OmegaPoint<T>(s, std::move(t));
}

#define BCZ_INSTANTIATE_LATTICE(T)                                                              \
  template class LatticeBasis<T>;                                                               \
  template class BoxSpec<T>;                                                                    \
  template PrimitivePoint<T> primitive_point(const OmegaPoint<T>&, std::int64_t, std::int64_t); \
  template std::vector<PrimitivePoint<T>> enumerate_primitive(const OmegaPoint<T>&, const T&,   \
                                                              const T&, const T&);              \
  template std::vector<T> first_slopes(const OmegaPoint<T>&, std::uint64_t, const T&,           \
                                       const SlopeSearchOptions&);                              \
  template T nth_slope(const OmegaPoint<T>&, std::uint64_t, const T&, const SlopeSearchOptions&); \
  template std::uint64_t box_count(const OmegaPoint<T>&, const BoxSpec<T>&);                    \
  template std::uint64_t count_below_slope(const OmegaPoint<T>&, const T&, const T&, const T&); \
  template OmegaPoint<T> normalize_section(const T&, const T&);

BCZ_INSTANTIATE_LATTICE(double)
BCZ_INSTANTIATE_LATTICE(Rational)

#undef BCZ_INSTANTIATE_LATTICE

}  // namespace bcz
