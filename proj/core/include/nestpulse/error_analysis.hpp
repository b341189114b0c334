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

#ifndef NESTPULSE_ERROR_ANALYSIS_HPP
#define NESTPULSE_ERROR_ANALYSIS_HPP

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "nestpulse/scalar.hpp"
#include "nestpulse/sequences.hpp"
#include "nestpulse/su2.hpp"

namespace nestpulse {

enum class ErrorKind { kAmplitude, kOffResonance };

std::string_view to_string(ErrorKind kind);
ErrorKind parse_error_kind(std::string_view text);

/// Error model with `size` placed on the parameter selected by `kind`.
template <Real T>
ErrorModel<T> error_model(ErrorKind kind, const T& size);

/// Coefficients of sigma_x, sigma_y, sigma_z in an error term Delta = v.sigma.
/// The matching rotation vector (AxisAngle) is 2v.
template <Real T>
struct PauliVector {
  T x{0};
  T y{0};
  T z{0};
};

/// Product of ideal pi pulses at the applied phases.
template <Real T>
Unitary2<T> ideal_propagator(const PhaseSequence<T>& seq);

/// Error factor built in the toggling frame: rotations by delta = eps*pi about
/// each toggling phase, first pulse rightmost. Amplitude errors only.
template <Real T>
Unitary2<T> toggling_error_propagator(const PhaseSequence<T>& seq, const T& epsilon);

/// ideal^dagger * V for the error-prone sequence. Valid for any error model.
template <Real T>
Unitary2<T> direct_error_propagator(const PhaseSequence<T>& seq, const ErrorModel<T>& err);

/// Residual unitary multiplying the ideal evolution. For pure amplitude
/// errors both constructions are evaluated and must agree entrywise, else
/// ConsistencyError; with f != 0 only the direct route applies.
template <Real T>
Unitary2<T> error_propagator(const PhaseSequence<T>& seq, const ErrorModel<T>& err);

/// Delta_1 = (delta/2) sum_j sigma_{phi'_j}.
template <Real T>
PauliVector<T> delta1(const PhaseSequence<T>& seq, const T& delta);

/// Coefficient of sigma_z in Delta_2 = -(delta^2/4) sum_j sum_{k<j} sin(phi'_j - phi'_k) sigma_z.
template <Real T>
T delta2(const PhaseSequence<T>& seq, const T& delta);

/// Taylor coefficients c_k of the error generator n(eps) = sum_k c_k eps^k,
/// where the error propagator is +-exp(-i n.sigma / 2).
template <Real T>
struct GeneratorSeries {
  std::vector<AxisAngle<T>> terms;  // terms[k - 1] = c_k
  std::vector<double> noise;        // roundoff estimate for |c_k|
  double condition{1};              // of the scaled stencil system
  T step{0};
  int digits{0};

  int max_order() const { return static_cast<int>(terms.size()); }
  const AxisAngle<T>& coefficient(int k) const { return terms.at(static_cast<size_t>(k - 1)); }
  /// |c_k| stands well clear of the roundoff estimate.
  bool resolvable(int k) const;
  AxisAngle<T> evaluate(const T& epsilon) const;
};

/// Central-difference extraction on eps in {+-h, ..., +-m h}, solving the odd
/// and even orders separately, with h = 10^(-digits / (2 K)).
template <Real T>
GeneratorSeries<T> generator_taylor(const PhaseSequence<T>& seq, ErrorKind kind, int max_order);

struct OrderOptions {
  int points_per_decade{20};
  int fit_points{20};
  int min_points{10};
  double upper_infidelity{1e-4};
  double residual_gate{0.05};
};

struct OrderEstimate {
  double exponent{0};
  std::optional<int> rounded_order;  // set only when the residual gate passes
  double coefficient{0};
  double eps_min{0};
  double eps_max{0};
  double residual{0};
  int precision{0};
  int points{0};
  double floor{0};

  bool gate_passed() const { return rounded_order.has_value(); }
};

/// Fits log10(1 - F) against log10(eps) on a geometric ladder, F measured
/// against pi_0. The fit uses the smallest-eps run of points whose infidelity
/// lies in [10^(2(6 - digits)), upper_infidelity], at most fit_points of them.
template <Real T>
OrderEstimate infidelity_order(const PhaseSequence<T>& seq, ErrorKind kind, const OrderOptions& options = {});

template <Real T>
struct SweepRow {
  T epsilon;
  T f;
  T fidelity;
  T infidelity;
};

template <Real T>
struct SweepResult {
  std::string sequence_label;
  std::vector<SweepRow<T>> rows;
};

/// One row per (eps, f) pair, eps major, fidelity against pi_0.
template <Real T>
SweepResult<T> fidelity_sweep(const PhaseSequence<T>& seq, std::span<const T> eps_grid, std::span<const T> f_grid);

}  // namespace nestpulse

#endif  // NESTPULSE_ERROR_ANALYSIS_HPP
