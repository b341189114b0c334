// Copyright 2026 The nestpulse Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef NESTPULSE_SCALAR_HPP
#define NESTPULSE_SCALAR_HPP

#include <cmath>
#include <limits>
#include <string>
#include <type_traits>

#include <boost/math/constants/constants.hpp>
#include <boost/multiprecision/mpfr.hpp>

namespace nestpulse {

/// Runtime-configurable multiprecision real. Expression templates are off so
/// that `auto` in generic code always yields a concrete value.
using HighPrecision =
    boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<0>,
                                  boost::multiprecision::et_off>;

template <class T>
concept Real = std::is_same_v<T, double> || std::is_same_v<T, HighPrecision>;

/// Default digit count for high-precision work.
inline constexpr int kDefaultHighPrecisionDigits = 60;

/// Largest digit count served by machine doubles.
inline constexpr int kDoubleDigits = std::numeric_limits<double>::digits10;

/// Sets the working precision of newly created HighPrecision values for the
/// lifetime of the scope. Boost keeps this default process-wide, so scopes
/// with different digit counts must not run concurrently.
class PrecisionScope {
 public:
  explicit PrecisionScope(int digits)
      : previous_(HighPrecision::default_precision()) {
    HighPrecision::default_precision(static_cast<unsigned>(digits));
  }
  ~PrecisionScope() { HighPrecision::default_precision(previous_); }
  PrecisionScope(const PrecisionScope&) = delete;
  PrecisionScope& operator=(const PrecisionScope&) = delete;

 private:
  unsigned previous_;
};

/// Significant decimal digits carried by `T` at the current setting.
template <Real T>
int working_digits() {
  if constexpr (std::is_same_v<T, double>) {
    return kDoubleDigits;
  } else {
    return static_cast<int>(HighPrecision::default_precision());
  }
}

/// Unit roundoff of `T` at the current setting.
template <Real T>
T working_epsilon() {
  if constexpr (std::is_same_v<T, double>) {
    return std::numeric_limits<double>::epsilon();
  } else {
    return std::numeric_limits<HighPrecision>::epsilon();
  }
}

template <Real T>
T pi() {
  if constexpr (std::is_same_v<T, double>) {
    return boost::math::constants::pi<double>();
  } else {
    HighPrecision value;
    mpfr_const_pi(value.backend().data(), MPFR_RNDN);
    return value;
  }
}

template <Real T>
bool is_finite(const T& x) {
  using std::isfinite;
  using boost::multiprecision::isfinite;
  return isfinite(x);
}

template <Real T>
double to_double(const T& x) {
  return static_cast<double>(x);
}

/// Decimal rendering with `digits` significant digits (at least 17).
template <Real T>
std::string to_decimal(const T& x, int digits);

/// Parses a decimal string at the current working precision.
template <Real T>
T from_decimal(const std::string& text);

}  // namespace nestpulse

#endif  // NESTPULSE_SCALAR_HPP
