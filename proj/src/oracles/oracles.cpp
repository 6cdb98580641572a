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

#include "bcz/oracles.hpp"

#include <algorithm>
#include <numeric>

namespace bcz::oracle {

std::vector<std::pair<std::uint64_t, std::uint64_t>> stern_brocot_farey(std::uint64_t q) {
  using Frac = std::pair<std::uint64_t, std::uint64_t>;
  std::vector<Frac> out{{0, 1}};
  // In-order walk of the Stern-Brocot tree between 0/1 and 1/1; a mediant is
  // kept only while its denominator fits.
  std::vector<std::pair<Frac, Frac>> stack{{{0, 1}, {1, 1}}};
  while (!stack.empty()) {
    auto [left, right] = stack.back();
    const Frac mid{left.first + right.first, left.second + right.second};
    if (mid.second <= q) {
      stack.back() = {mid, right};
      stack.push_back({left, mid});
      continue;
    }
    stack.pop_back();
    out.push_back(right);
  }
  return out;
}

std::uint64_t totient(std::uint64_t n) {
  std::uint64_t result = n;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

std::uint64_t farey_length(std::uint64_t q) {
  std::uint64_t total = 1;
  for (std::uint64_t k = 1; k <= q; ++k) total += totient(k);
  return total;
}

std::vector<OmegaPoint<Rational>> farey_pairs_orbit(std::uint64_t q) {
  const auto fr = stern_brocot_farey(q);
  std::vector<OmegaPoint<Rational>> out;
  const Rational big_q(static_cast<unsigned long>(q));
  for (std::size_t i = 0; i + 1 < fr.size(); ++i) {
    out.emplace_back(Rational(static_cast<unsigned long>(fr[i].second)) / big_q,
                     Rational(static_cast<unsigned long>(fr[i + 1].second)) / big_q);
  }
  return out;
}

template <class T>
std::vector<PrimitivePoint<T>> brute_force_primitive(const OmegaPoint<T>& p, const T& x_lo,
                                                     const T& x_hi, const T& slope_max,
                                                     std::int64_t m_max, std::int64_t n_max) {
  std::vector<PrimitivePoint<T>> out;
  for (std::int64_t n = 1; n <= n_max; ++n) {
    for (std::int64_t m = 0; m <= m_max; ++m) {
      if (std::gcd(m, n) != 1) continue;
      const T x = T(n) * p.t() - T(m) * p.s();
      if (!(x > x_lo && x <= x_hi)) continue;
      const T y = T(n) / p.s();
      const T slope = y / x;
      if (slope <= slope_max) out.push_back({m, n, x, y, slope});
    }
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return *a.slope < *b.slope; });
  return out;
}

template std::vector<PrimitivePoint<double>> brute_force_primitive(const OmegaPoint<double>&,
                                                                   const double&, const double&,
                                                                   const double&, std::int64_t,
                                                                   std::int64_t);
template <>
std::vector<PrimitivePoint<Rational>> brute_force_primitive(const OmegaPoint<Rational>& p,
                                                            const Rational& x_lo,
                                                            const Rational& x_hi,
                                                            const Rational& slope_max,
                                                            std::int64_t m_max,
                                                            std::int64_t n_max) {
  std::vector<PrimitivePoint<Rational>> out;
  for (std::int64_t n = 1; n <= n_max; ++n) {
    for (std::int64_t m = 0; m <= m_max; ++m) {
      if (std::gcd(m, n) != 1) continue;
      const Rational x = Rational(static_cast<long>(n)) * p.t() - Rational(static_cast<long>(m)) * p.s();
      if (!(x > x_lo && x <= x_hi)) continue;
      const Rational y = Rational(static_cast<long>(n)) / p.s();
      const Rational slope = y / x;
      if (slope <= slope_max) out.push_back({m, n, x, y, slope});
    }
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return *a.slope < *b.slope; });
  return out;
}

std::optional<OmegaPoint<Rational>> brute_force_preimage(const OmegaPoint<Rational>& q,
                                                         std::uint64_t max_branch) {
  // Phi(s, t) = (t, k t - s): t = q.s and s = k q.s - q.t for the right k.
  std::optional<OmegaPoint<Rational>> found;
  for (std::uint64_t k = 1; k <= max_branch; ++k) {
    const Rational s = Rational(static_cast<unsigned long>(k)) * q.s() - q.t();
    if (!contains_omega(s, q.s())) continue;
    OmegaPoint<Rational> cand(s, q.s());
    if (bcz_step(cand) == q) {
      if (found) return std::nullopt;  // not unique
      found = cand;
    }
  }
  return found;
}

std::uint64_t brute_coprime_pairs(std::int64_t big_m) {
  std::uint64_t count = 0;
  for (std::int64_t m = 1; m <= big_m; ++m) {
    for (std::int64_t n = 1; n <= big_m; ++n) {
      if (std::gcd(m, n) == 1) ++count;
    }
  }
  return count;
}

std::uint64_t moebius_q_set_size(std::int64_t big_n) {
  const std::int64_t m_lo = big_n / 6 + 1, m_hi = big_n / 3;
  const std::int64_t n_lo = (big_n + 1) / 2, n_hi = big_n;
  auto multiples = [](std::int64_t lo, std::int64_t hi, std::int64_t d) {
    if (hi < lo) return std::int64_t{0};
    return hi / d - (lo - 1) / d;
  };
  auto moebius = [](std::int64_t d) {
    int sign = 1;
    for (std::int64_t p = 2; p * p <= d; ++p) {
      if (d % p != 0) continue;
      d /= p;
      if (d % p == 0) return 0;
      sign = -sign;
    }
    if (d > 1) sign = -sign;
    return sign;
  };
  std::int64_t total = 0;
  for (std::int64_t d = 1; d <= big_n; ++d) {
    const int mu = moebius(d);
    if (mu == 0) continue;
    total += mu * multiples(m_lo, m_hi, d) * multiples(n_lo, n_hi, d);
  }
  return static_cast<std::uint64_t>(total);
}

std::uint64_t brute_admissible_pairs(std::int64_t n, std::int64_t n2) {
  std::uint64_t count = 0;
  for (std::int64_t m = 0; m <= 2 * n; ++m) {
    for (std::int64_t m2 = 0; m2 <= 2 * n2; ++m2) {
      const std::int64_t v = m2 * n - m * n2;
      // 4(n2 - n)/5 <= v <= 4(n2 - n)
      const double lo = 4.0 * static_cast<double>(n2 - n) / 5.0;
      if (static_cast<double>(v) >= lo && v <= 4 * (n2 - n)) ++count;
    }
  }
  return count;
}

}  // namespace bcz::oracle
