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

#ifndef NESTPULSE_COMPLEX_HPP
#define NESTPULSE_COMPLEX_HPP

#include "nestpulse/scalar.hpp"

namespace nestpulse {

// std::complex is only specified for the built-in floating types, so the
// multiprecision path needs its own minimal complex number.
template <Real T>
struct Complex {
  T re{0};
  T im{0};

  Complex() = default;
  Complex(T real) : re(std::move(real)) {}  // NOLINT(google-explicit-constructor)
  Complex(T real, T imag) : re(std::move(real)), im(std::move(imag)) {}

  Complex conj() const { return {re, -im}; }
  T norm() const { return re * re + im * im; }
  T abs() const {
    using std::hypot;
    using boost::multiprecision::hypot;
    return hypot(re, im);
  }

  Complex& operator+=(const Complex& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  Complex& operator-=(const Complex& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }

  friend Complex operator+(Complex a, const Complex& b) { return a += b; }
  friend Complex operator-(Complex a, const Complex& b) { return a -= b; }
  friend Complex operator-(const Complex& a) { return {-a.re, -a.im}; }
  friend Complex operator*(const Complex& a, const Complex& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend Complex operator*(const T& s, const Complex& a) { return {s * a.re, s * a.im}; }
  friend Complex operator/(const Complex& a, const T& s) { return {a.re / s, a.im / s}; }
  friend Complex operator/(const Complex& a, const Complex& b) {
    T d = b.norm();
    return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
  }
  friend bool operator==(const Complex& a, const Complex& b) { return a.re == b.re && a.im == b.im; }

  /// Principal square root.
  Complex sqrt() const {
    using std::sqrt;
    using boost::multiprecision::sqrt;
    T r = abs();
    if (r == 0) return {};
    // Stable half-angle form: avoids cancellation when re < 0.
    if (re >= 0) {
      T s = sqrt((r + re) / 2);
      return {s, im / (2 * s)};
    }
    T s = sqrt((r - re) / 2);
    return {abs_of(im) / (2 * s), im < 0 ? -s : s};
  }

 private:
  static T abs_of(const T& x) { return x < 0 ? T(-x) : x; }
};

}  // namespace nestpulse

#endif  // NESTPULSE_COMPLEX_HPP
