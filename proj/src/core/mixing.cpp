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

#include "bcz/mixing.hpp"

#include <fftw3.h>

#include <cmath>
#include <mutex>
#include <numbers>

namespace bcz {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

std::mutex& fftw_planner_mutex() {
  static std::mutex m;
  return m;
}

// Owns an fftw buffer and two plans (forward, backward) of one length.
class FftWorkspace {
 public:
  explicit FftWorkspace(std::size_t len) : len_(len) {
    buf_ = static_cast<fftw_complex*>(fftw_malloc(sizeof(fftw_complex) * len));
    if (buf_ == nullptr) throw std::bad_alloc();
    std::lock_guard lock(fftw_planner_mutex());
    fwd_ = fftw_plan_dft_1d(static_cast<int>(len), buf_, buf_, FFTW_FORWARD, FFTW_ESTIMATE);
    bwd_ = fftw_plan_dft_1d(static_cast<int>(len), buf_, buf_, FFTW_BACKWARD, FFTW_ESTIMATE);
  }
  ~FftWorkspace() {
    std::lock_guard lock(fftw_planner_mutex());
    fftw_destroy_plan(fwd_);
    fftw_destroy_plan(bwd_);
    fftw_free(buf_);
  }
  FftWorkspace(const FftWorkspace&) = delete;
  FftWorkspace& operator=(const FftWorkspace&) = delete;

  std::complex<double>* data() { return reinterpret_cast<std::complex<double>*>(buf_); }
  void forward() { fftw_execute(fwd_); }
  void backward() { fftw_execute(bwd_); }
  std::size_t size() const { return len_; }

 private:
  std::size_t len_;
  fftw_complex* buf_ = nullptr;
  fftw_plan fwd_ = nullptr;
  fftw_plan bwd_ = nullptr;
};

std::size_t next_pow2(std::size_t v) {
  std::size_t p = 1;
  while (p < v) p <<= 1;
  return p;
}

std::complex<double> phase(double turns) {
  const double frac = turns - std::floor(turns);
  return std::polar(1.0, -kTwoPi * frac);
}

}  // namespace

std::complex<double> observe(Observable f, double s, double t) {
  switch (f) {
    case Observable::Zero: return {0.0, 0.0};
    case Observable::One: return {1.0, 0.0};
    case Observable::ExpS: return std::polar(1.0, kTwoPi * s);
    case Observable::ExpST: return std::polar(1.0, kTwoPi * (s + t));
    case Observable::IndHalf: return {(s > 0.5 ? 1.0 : 0.0) - 0.75, 0.0};
  }
  return {0.0, 0.0};
}

std::complex<double> observable_mean(Observable f) {
  // The s-marginal of m has density 2s; s + t has density 2(2 - w) on (1, 2].
  switch (f) {
    case Observable::Zero: return {0.0, 0.0};
    case Observable::One: return {1.0, 0.0};
    case Observable::ExpS: return {0.0, -1.0 / std::numbers::pi};
    case Observable::ExpST: return {0.0, 1.0 / std::numbers::pi};
    case Observable::IndHalf: return {0.0, 0.0};
  }
  return {0.0, 0.0};
}

template <class T>
std::vector<std::pair<double, double>> orbit_coordinates(const OmegaPoint<T>& p,
                                                         std::size_t count) {
  std::vector<std::pair<double, double>> out;
  out.reserve(count);
  OmegaPoint<T> cur = p;
  std::size_t period = 0;
  for (std::size_t i = 0; i < count; ++i) {
    if (period != 0) {
      out.push_back(out[i - period]);
      continue;
    }
    out.emplace_back(to_double(cur.s()), to_double(cur.t()));
    cur = bcz_step(cur);
    if constexpr (ScalarTraits<T>::exact) {
      if (cur == p) period = i + 1;
    }
  }
  return out;
}

std::vector<std::complex<double>> cross_correlation(const std::vector<std::complex<double>>& a,
                                                    const std::vector<std::complex<double>>& c,
                                                    std::size_t n, std::size_t h) {
  if (n < 1 || h < 1 || a.size() + 1 < n + h || c.size() < n) {
    throw DomainError("cross_correlation needs |a| >= N + H - 1 and |c| >= N");
  }
  const std::size_t len = next_pow2(n + h);
  FftWorkspace fa(len), fc(len);
  std::fill(fa.data(), fa.data() + len, std::complex<double>{});
  std::fill(fc.data(), fc.data() + len, std::complex<double>{});
  std::copy(a.begin(), a.begin() + static_cast<std::ptrdiff_t>(n + h - 1), fa.data());
  std::copy(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(n), fc.data());
  fa.forward();
  fc.forward();
  for (std::size_t k = 0; k < len; ++k) fa.data()[k] *= std::conj(fc.data()[k]);
  fa.backward();
  std::vector<std::complex<double>> out(h);
  const double scale = 1.0 / (static_cast<double>(len) * static_cast<double>(n));
  for (std::size_t k = 0; k < h; ++k) out[k] = fa.data()[k] * scale;
  return out;
}

template <class T>
CesaroResult correlation_cesaro(Observable f, Observable g, const OmegaPoint<T>& p,
                                std::uint64_t n, std::uint64_t h) {
  if (!(h >= 1 && n >= h)) throw DomainError("correlation_cesaro requires N >= H >= 1");
  const auto orbit = orbit_coordinates(p, n + h - 1);
  std::vector<std::complex<double>> a(orbit.size()), c(n);
  for (std::size_t i = 0; i < orbit.size(); ++i) a[i] = observe(f, orbit[i].first, orbit[i].second);
  std::complex<double> mean_f{}, mean_g{};
  for (std::size_t i = 0; i < n; ++i) {
    c[i] = observe(g, orbit[i].first, orbit[i].second);
    mean_f += a[i];
    mean_g += c[i];
  }
  mean_f /= static_cast<double>(n);
  mean_g /= static_cast<double>(n);
  const auto raw = cross_correlation(a, c, n, h);
  const std::complex<double> offset = mean_f * std::conj(mean_g);

  CesaroResult out;
  out.averages.resize(h);
  double running = 0.0;
  for (std::size_t k = 0; k < h; ++k) {
    running += std::abs(raw[k] - offset);
    out.averages[k] = running / static_cast<double>(k + 1);
  }
  if (h > 100) out.decaying = out.averages[h - 1] < 0.5 * out.averages[99];
  return out;
}

std::vector<double> uniform_theta_grid(std::size_t count) {
  std::vector<double> out(count);
  for (std::size_t k = 0; k < count; ++k) out[k] = static_cast<double>(k) / static_cast<double>(count);
  return out;
}

WeylResult weyl_scan_series(const std::vector<std::complex<double>>& values,
                            const std::vector<double>& thetas) {
  if (values.empty()) throw DomainError("weyl_scan needs at least one value");
  const std::size_t n = values.size();
  const std::size_t grid = thetas.size();
  std::vector<std::complex<double>> sums(grid);

  bool uniform = grid > 0 && grid <= n;
  for (std::size_t k = 0; uniform && k < grid; ++k) {
    uniform = std::abs(thetas[k] * static_cast<double>(grid) - static_cast<double>(k)) < 1e-9;
  }
  if (uniform) {
    // theta = k/M: fold the series modulo M, then a direct length-M DFT.
    std::vector<std::complex<double>> folded(grid);
    for (std::size_t i = 0; i < n; ++i) folded[i % grid] += values[i];
    std::vector<std::complex<double>> roots(grid);
    for (std::size_t r = 0; r < grid; ++r) {
      roots[r] = phase(static_cast<double>(r) / static_cast<double>(grid));
    }
    for (std::size_t k = 0; k < grid; ++k) {
      std::complex<double> acc{};
      for (std::size_t r = 0; r < grid; ++r) acc += folded[r] * roots[(r * k) % grid];
      sums[k] = acc;
    }
  } else {
    for (std::size_t k = 0; k < grid; ++k) {
      const std::complex<double> step = phase(thetas[k]);
      std::complex<double> z{1.0, 0.0}, acc{};
      for (std::size_t i = 0; i < n; ++i) {
        if ((i & 1023) == 0) z = phase(thetas[k] * static_cast<double>(i));
        acc += z * values[i];
        z *= step;
      }
      sums[k] = acc;
    }
  }

  WeylResult out;
  for (std::size_t k = 0; k < grid; ++k) {
    const double mag = std::abs(sums[k]) / static_cast<double>(n);
    if (k == 0 || mag > out.max_magnitude) {
      out.max_magnitude = mag;
      out.argmax_theta = thetas[k];
    }
  }
  return out;
}

template <class T>
WeylResult weyl_scan(const ObservableSpec& f, const OmegaPoint<T>& p, std::uint64_t n,
                     const std::vector<double>& thetas) {
  if (n < 1) throw DomainError("weyl_scan requires N >= 1");
  const auto orbit = orbit_coordinates(p, n);
  std::vector<std::complex<double>> values(orbit.size());
  for (std::size_t i = 0; i < orbit.size(); ++i) values[i] = f(orbit[i].first, orbit[i].second);
  return weyl_scan_series(values, thetas);
}

#define BCZ_INSTANTIATE_MIXING(T)                                                             \
  template std::vector<std::pair<double, double>> orbit_coordinates(const OmegaPoint<T>&,     \
                                                                    std::size_t);             \
  template CesaroResult correlation_cesaro(Observable, Observable, const OmegaPoint<T>&,      \
                                           std::uint64_t, std::uint64_t);                     \
  template WeylResult weyl_scan(const ObservableSpec&, const OmegaPoint<T>&, std::uint64_t,   \
                                const std::vector<double>&);

BCZ_INSTANTIATE_MIXING(double)
BCZ_INSTANTIATE_MIXING(Rational)

#undef BCZ_INSTANTIATE_MIXING

}  // namespace bcz
