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

#ifndef NESTPULSE_SU2_HPP
#define NESTPULSE_SU2_HPP

#include <array>
#include <span>

#include "nestpulse/complex.hpp"
#include "nestpulse/errors.hpp"
#include "nestpulse/scalar.hpp"

namespace nestpulse {

/// Systematic control error on a single pulse: the field amplitude is scaled
/// by (1 + epsilon) and a detuning of f (in units of the nominal amplitude)
/// adds a sigma_z component to the generator.
template <Real T>
struct ErrorModel {
  T epsilon{0};
  T f{0};

  bool is_error_free() const { return epsilon == 0 && f == 0; }
};

/// Rotation vector n of exp(-i n.sigma / 2). |n| is the rotation angle.
template <Real T>
struct AxisAngle {
  T nx{0};
  T ny{0};
  T nz{0};

  T angle() const;
  T xy_norm() const;
  friend AxisAngle operator+(const AxisAngle& a, const AxisAngle& b) {
    return {a.nx + b.nx, a.ny + b.ny, a.nz + b.nz};
  }
  friend AxisAngle operator-(const AxisAngle& a, const AxisAngle& b) {
    return {a.nx - b.nx, a.ny - b.ny, a.nz - b.nz};
  }
  friend AxisAngle operator*(const T& s, const AxisAngle& a) { return {s * a.nx, s * a.ny, s * a.nz}; }
};

/// 2x2 complex matrix, row major. Constructed through the factory functions
/// below, which only ever produce unitaries.
template <Real T>
class Unitary2 {
 public:
  using Entry = Complex<T>;

  Unitary2() : m_{Entry(T(1)), Entry(), Entry(), Entry(T(1))} {}
  Unitary2(Entry a, Entry b, Entry c, Entry d) : m_{std::move(a), std::move(b), std::move(c), std::move(d)} {}

  static Unitary2 identity() { return {}; }

  const Entry& operator()(int row, int col) const { return m_[static_cast<size_t>(2 * row + col)]; }

  Unitary2 adjoint() const { return {m_[0].conj(), m_[2].conj(), m_[1].conj(), m_[3].conj()}; }
  Entry trace() const { return m_[0] + m_[3]; }
  Entry determinant() const { return m_[0] * m_[3] - m_[1] * m_[2]; }

  /// Largest entrywise modulus of this - other.
  T max_abs_diff(const Unitary2& other) const;
  /// Largest entrywise modulus of U^dagger U - I.
  T unitarity_defect() const;

  friend Unitary2 operator*(const Unitary2& a, const Unitary2& b) {
    return {a.m_[0] * b.m_[0] + a.m_[1] * b.m_[2], a.m_[0] * b.m_[1] + a.m_[1] * b.m_[3],
            a.m_[2] * b.m_[0] + a.m_[3] * b.m_[2], a.m_[2] * b.m_[1] + a.m_[3] * b.m_[3]};
  }
  friend Unitary2 operator*(const Entry& s, const Unitary2& a) {
    return {s * a.m_[0], s * a.m_[1], s * a.m_[2], s * a.m_[3]};
  }

 private:
  std::array<Entry, 4> m_;
};

/// theta_phi = cos(theta/2) I - i sin(theta/2) (cos phi sigma_x + sin phi sigma_y).
template <Real T>
Unitary2<T> make_rotation(const T& theta, const T& phi);

/// Error-prone pulse exp(-i (theta/2) [(1+eps) sigma_phi + f sigma_z]).
/// With f == 0 this is literally make_rotation(theta (1+eps), phi).
template <Real T>
Unitary2<T> make_pulse(const T& theta, const T& phi, const ErrorModel<T>& err);

/// exp(-i n.sigma / 2).
template <Real T>
Unitary2<T> exp_generator(const AxisAngle<T>& n);

/// Product of `pulses` given in application order: U_N ... U_2 U_1.
template <Real T>
Unitary2<T> compose(std::span<const Unitary2<T>> pulses);

/// |tr(U^dagger V)| / 2.
template <Real T>
T fidelity(const Unitary2<T>& u, const Unitary2<T>& v);

/// 1 - fidelity(u, v), evaluated without the cancellation of the direct
/// difference so it keeps relative accuracy far below the unit roundoff.
template <Real T>
T infidelity(const Unitary2<T>& u, const Unitary2<T>& v);

/// The n with |n| < pi and U = +-exp(-i n.sigma / 2). Throws
/// AmbiguousLogarithm when the rotation angle is pi to working precision.
template <Real T>
AxisAngle<T> principal_log(const Unitary2<T>& u);

}  // namespace nestpulse

#endif  // NESTPULSE_SU2_HPP
