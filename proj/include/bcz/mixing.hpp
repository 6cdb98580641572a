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

// Correlation and Weyl-sum diagnostics along orbits of the BCZ map.

#include <complex>
#include <cstdint>
#include <vector>

#include "bcz/farey.hpp"

namespace bcz {

/// Test functions on the triangle.
///   ExpS    exp(2 pi i s)
///   ExpST   exp(2 pi i (s + t))
///   IndHalf 1{s > 1/2} - 3/4 (already mean-zero)
enum class Observable { Zero, One, ExpS, ExpST, IndHalf };

std::complex<double> observe(Observable f, double s, double t);

/// Closed-form integral of f against the normalized area measure.
std::complex<double> observable_mean(Observable f);

/// An observable, optionally with its closed-form mean subtracted.
struct ObservableSpec {
  Observable id = Observable::ExpS;
  bool centered = false;

  std::complex<double> operator()(double s, double t) const {
    const auto v = observe(id, s, t);
    return centered ? v - observable_mean(id) : v;
  }
};

/// First `count` points of the orbit of p, as doubles. Exact orbits are
/// iterated exactly and tiled once they close up.
template <class T>
std::vector<std::pair<double, double>> orbit_coordinates(const OmegaPoint<T>& p,
                                                         std::size_t count);

/// r_n = (1/N) sum_{i<N} a[i+n] conj(c[i]) for n < H, by FFT. Requires
/// a.size() >= N + H - 1 and c.size() >= N.
std::vector<std::complex<double>> cross_correlation(const std::vector<std::complex<double>>& a,
                                                    const std::vector<std::complex<double>>& c,
                                                    std::size_t n, std::size_t h);

struct CesaroResult {
  /// averages[h-1] = (1/h) sum_{k<h} |C_k|.
  std::vector<double> averages;
  /// averages at H fell below half of the average at min(H, 100). Only
  /// meaningful for H > 100.
  bool decaying = false;
};

template <class T>
CesaroResult correlation_cesaro(Observable f, Observable g, const OmegaPoint<T>& p,
                                std::uint64_t n, std::uint64_t h);

struct WeylResult {
  double max_magnitude = 0.0;
  double argmax_theta = 0.0;
};

/// max over theta of (1/N)|sum_{i<N} exp(-2 pi i i theta) v_i|.
WeylResult weyl_scan_series(const std::vector<std::complex<double>>& values,
                            const std::vector<double>& thetas);

template <class T>
WeylResult weyl_scan(const ObservableSpec& f, const OmegaPoint<T>& p, std::uint64_t n,
                     const std::vector<double>& thetas);

/// {k / count : k < count}.
std::vector<double> uniform_theta_grid(std::size_t count);

}  // namespace bcz
