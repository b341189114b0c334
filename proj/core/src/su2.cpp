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

#include "nestpulse/su2.hpp"

#include <algorithm>
#include <cmath>

namespace nestpulse {
namespace {

template <Real T>
T abs_of(const T& x) {
  return x < 0 ? T(-x) : x;
}

template <Real T>
void require_finite(const T& x, const char* what) {
  if (!is_finite(x)) throw InvalidArgument(std::string(what) + " must be finite");
}

// Divides out a square root of the determinant, leaving a matrix of the form
// a I - i b.sigma up to an overall sign.
template <Real T>
Unitary2<T> to_special_unitary(const Unitary2<T>& u) {
  Complex<T> root = u.determinant().sqrt();
  if (root.norm() == 0) throw InvalidArgument("singular matrix");
  Complex<T> inv = root.conj() / root.norm();
  return inv * u;
}

}  // namespace

template <Real T>
T AxisAngle<T>::angle() const {
  using std::sqrt;
  return sqrt(nx * nx + ny * ny + nz * nz);
}

template <Real T>
T AxisAngle<T>::xy_norm() const {
  using std::sqrt;
  return sqrt(nx * nx + ny * ny);
}

template <Real T>
T Unitary2<T>::max_abs_diff(const Unitary2& other) const {
  T worst{0};
  for (size_t i = 0; i < 4; ++i) worst = std::max(worst, (m_[i] - other.m_[i]).abs());
  return worst;
}

template <Real T>
T Unitary2<T>::unitarity_defect() const {
  return (adjoint() * *this).max_abs_diff(Unitary2{});
}

template <Real T>
Unitary2<T> make_rotation(const T& theta, const T& phi) {
  using std::cos;
  using std::sin;
  require_finite(theta, "rotation angle");
  require_finite(phi, "pulse phase");
  T c = cos(theta / 2);
  T s = sin(theta / 2);
  T sc = s * cos(phi);
  T ss = s * sin(phi);
  return {Complex<T>(c), Complex<T>(-ss, -sc), Complex<T>(ss, -sc), Complex<T>(c)};
}

template <Real T>
Unitary2<T> exp_generator(const AxisAngle<T>& n) {
  using std::cos;
  using std::sin;
  require_finite(n.nx, "generator component");
  require_finite(n.ny, "generator component");
  require_finite(n.nz, "generator component");
  T theta = n.angle();
  T c = cos(theta / 2);
  if (theta == 0) return Unitary2<T>{};
  T s = sin(theta / 2) / theta;
  return {Complex<T>(c, -s * n.nz), Complex<T>(-s * n.ny, -s * n.nx), Complex<T>(s * n.ny, -s * n.nx),
          Complex<T>(c, s * n.nz)};
}

template <Real T>
Unitary2<T> make_pulse(const T& theta, const T& phi, const ErrorModel<T>& err) {
  using std::cos;
  using std::sin;
  require_finite(err.epsilon, "amplitude error");
  require_finite(err.f, "off-resonance error");
  if (err.f == 0) return make_rotation<T>(theta * (1 + err.epsilon), phi);
  require_finite(theta, "rotation angle");
  require_finite(phi, "pulse phase");
  T scale = theta * (1 + err.epsilon);
  return exp_generator(AxisAngle<T>{scale * cos(phi), scale * sin(phi), theta * err.f});
}

template <Real T>
Unitary2<T> compose(std::span<const Unitary2<T>> pulses) {
  if (pulses.empty()) throw InvalidArgument("compose needs at least one pulse");
  Unitary2<T> total = pulses.front();
  for (const auto& p : pulses.subspan(1)) total = p * total;
  return total;
}

template <Real T>
T fidelity(const Unitary2<T>& u, const Unitary2<T>& v) {
  T f = (u.adjoint() * v).trace().abs() / 2;
  return std::min(f, T(1));
}

template <Real T>
T infidelity(const Unitary2<T>& u, const Unitary2<T>& v) {
  Unitary2<T> w = to_special_unitary(u.adjoint() * v);
  // w = a I - i b.sigma with a^2 + |b|^2 = 1, so 1 - |a| = |b|^2 / (1 + |a|).
  T a = abs_of(T((w(0, 0).re + w(1, 1).re) / 2));
  T bz = (w(1, 1).im - w(0, 0).im) / 2;
  T bxy2 = (w(0, 1).norm() + w(1, 0).norm()) / 2;
  return std::min((bz * bz + bxy2) / (1 + std::min(a, T(1))), T(1));
}

template <Real T>
AxisAngle<T> principal_log(const Unitary2<T>& u) {
  using std::atan2;
  using std::sqrt;
  Unitary2<T> w = to_special_unitary(u);
  T a = (w(0, 0).re + w(1, 1).re) / 2;
  T bx = -(w(0, 1).im + w(1, 0).im) / 2;
  T by = (w(1, 0).re - w(0, 1).re) / 2;
  T bz = (w(1, 1).im - w(0, 0).im) / 2;
  if (a < 0) {
    a = -a;
    bx = -bx;
    by = -by;
    bz = -bz;
  }
  if (a <= 16 * working_epsilon<T>()) {
    throw AmbiguousLogarithm("rotation angle is pi: generator sign is undetermined");
  }
  T b = sqrt(bx * bx + by * by + bz * bz);
  if (b == 0) return {};
  T scale = 2 * atan2(b, a) / b;
  return {scale * bx, scale * by, scale * bz};
}

#define NESTPULSE_INSTANTIATE(T)                                                          \
  template struct AxisAngle<T>;                                                           \
  template class Unitary2<T>;                                                             \
  template Unitary2<T> make_rotation<T>(const T&, const T&);                              \
  template Unitary2<T> make_pulse<T>(const T&, const T&, const ErrorModel<T>&);           \
  template Unitary2<T> exp_generator<T>(const AxisAngle<T>&);                             \
  template Unitary2<T> compose<T>(std::span<const Unitary2<T>>);                          \
  template T fidelity<T>(const Unitary2<T>&, const Unitary2<T>&);                         \
  template T infidelity<T>(const Unitary2<T>&, const Unitary2<T>&);                       \
  template AxisAngle<T> principal_log<T>(const Unitary2<T>&);

NESTPULSE_INSTANTIATE(double)
NESTPULSE_INSTANTIATE(HighPrecision)

#undef NESTPULSE_INSTANTIATE

}  // namespace nestpulse
