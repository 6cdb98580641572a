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

#include <gmpxx.h>

#include <cmath>
#include <cstdint>
#include <limits>
#include <string>
#include <string_view>
#include <type_traits>

#include "bcz/errors.hpp"

namespace bcz {

// Arbitrary-precision rational; GMP keeps it reduced with a positive
// denominator after every arithmetic operation.
using Rational = mpq_class;

enum class NumericMode { Float, Exact };

template <class T>
struct ScalarTraits;

template <>
struct ScalarTraits<double> {
  static constexpr NumericMode mode = NumericMode::Float;
  static constexpr bool exact = false;

  static double from_int(std::int64_t v) { return static_cast<double>(v); }
  static double floor(double v) { return std::floor(v); }
  static double ceil(double v) { return std::ceil(v); }
  static double to_double(double v) { return v; }
  static std::int64_t floor_i64(double v) {
    const double f = std::floor(v);
    if (!(f >= -9.2e18 && f <= 9.2e18)) {
      throw DomainError("floor value outside the 64-bit integer range");
    }
    return static_cast<std::int64_t>(f);
  }
  static std::int64_t ceil_i64(double v) { return -floor_i64(-v); }
};

template <>
struct ScalarTraits<Rational> {
  static constexpr NumericMode mode = NumericMode::Exact;
  static constexpr bool exact = true;

  static Rational from_int(std::int64_t v) { return Rational(static_cast<long>(v)); }
  static Rational floor(const Rational& v) {
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), v.get_num_mpz_t(), v.get_den_mpz_t());
    return Rational(q);
  }
  static Rational ceil(const Rational& v) {
    mpz_class q;
    mpz_cdiv_q(q.get_mpz_t(), v.get_num_mpz_t(), v.get_den_mpz_t());
    return Rational(q);
  }
  // mpq_get_d truncates; with both parts below 2^53 the quotient of the two
  // exact doubles is correctly rounded.
  static double to_double(const Rational& v) {
    if (mpz_sizeinbase(v.get_num_mpz_t(), 2) <= 53 && mpz_sizeinbase(v.get_den_mpz_t(), 2) <= 53) {
      return v.get_num().get_d() / v.get_den().get_d();
    }
    return v.get_d();
  }
  static std::int64_t floor_i64(const Rational& v) {
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), v.get_num_mpz_t(), v.get_den_mpz_t());
    if (!q.fits_slong_p()) throw DomainError("floor value outside the 64-bit integer range");
    return q.get_si();
  }
  static std::int64_t ceil_i64(const Rational& v) {
    mpz_class q;
    mpz_cdiv_q(q.get_mpz_t(), v.get_num_mpz_t(), v.get_den_mpz_t());
    if (!q.fits_slong_p()) throw DomainError("ceil value outside the 64-bit integer range");
    return q.get_si();
  }
};

template <class T>
inline double to_double(const T& v) {
  return ScalarTraits<T>::to_double(v);
}

/// Parses "p/q", an integer, or a plain decimal ("0.855", "-1.25") into an
/// exact rational. Throws ConfigError on malformed input or a zero denominator.
Rational parse_rational(std::string_view text);

/// Parses the same grammar as parse_rational, or anything std::strtod accepts.
double parse_double(std::string_view text);

/// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& v);

/// Shortest round-trip decimal form of a double.
std::string to_string(double v);

/// Converts between numeric kinds. Double to rational is exact (dyadic).
template <class To, class From>
To convert(const From& v) {
  if constexpr (std::is_same_v<To, From>) {
    return v;
  } else if constexpr (std::is_same_v<To, double>) {
    return to_double(v);
  } else {
    if (!std::isfinite(v)) throw DomainError("non-finite value has no rational form");
    return Rational(v);
  }
}

}  // namespace bcz
