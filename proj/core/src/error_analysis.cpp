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

#include "nestpulse/error_analysis.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include "nestpulse/errors.hpp"

namespace nestpulse {
namespace {

template <Real T>
T abs_of(const T& x) {
  return x < 0 ? T(-x) : x;
}

template <Real T>
using Matrix = std::vector<std::vector<T>>;

// Gauss-Jordan with partial pivoting; the stencil systems are at most 4x4.
template <Real T>
Matrix<T> inverse(Matrix<T> a) {
  const size_t n = a.size();
  Matrix<T> inv(n, std::vector<T>(n, T(0)));
  for (size_t i = 0; i < n; ++i) inv[i][i] = 1;
  for (size_t col = 0; col < n; ++col) {
    size_t pivot = col;
    for (size_t r = col + 1; r < n; ++r) {
      if (abs_of(a[r][col]) > abs_of(a[pivot][col])) pivot = r;
    }
    if (a[pivot][col] == 0) throw ConditioningError("singular stencil matrix", INFINITY);
    std::swap(a[col], a[pivot]);
    std::swap(inv[col], inv[pivot]);
    const T scale = a[col][col];
    for (size_t c = 0; c < n; ++c) {
      a[col][c] /= scale;
      inv[col][c] /= scale;
    }
    for (size_t r = 0; r < n; ++r) {
      if (r == col) continue;
      const T factor = a[r][col];
      if (factor == 0) continue;
      for (size_t c = 0; c < n; ++c) {
        a[r][c] -= factor * a[col][c];
        inv[r][c] -= factor * inv[col][c];
      }
    }
  }
  return inv;
}

template <Real T>
double infinity_norm(const Matrix<T>& a) {
  double worst = 0;
  for (const auto& row : a) {
    double sum = 0;
    for (const T& x : row) sum += std::abs(to_double(x));
    worst = std::max(worst, sum);
  }
  return worst;
}

// Fits sum_k d_k j^k = rhs_j for the given orders and points j = 1..|orders|.
template <Real T>
struct StencilSolve {
  Matrix<T> inverse;
  double condition;
};

template <Real T>
StencilSolve<T> stencil_for(const std::vector<int>& orders) {
  const size_t n = orders.size();
  Matrix<T> m(n, std::vector<T>(n));
  for (size_t j = 0; j < n; ++j) {
    for (size_t k = 0; k < n; ++k) {
      using std::pow;
      m[j][k] = pow(T(static_cast<int>(j + 1)), orders[k]);
    }
  }
  Matrix<T> inv = inverse(m);
  return {inv, infinity_norm(m) * infinity_norm(inv)};
}

template <Real T>
AxisAngle<T> generator_at(const PhaseSequence<T>& seq, ErrorKind kind, const T& size) {
  return principal_log(error_propagator(seq, error_model(kind, size)));
}

}  // namespace

std::string_view to_string(ErrorKind kind) {
  return kind == ErrorKind::kAmplitude ? "amplitude" : "offresonance";
}

ErrorKind parse_error_kind(std::string_view text) {
  if (text == "amplitude") return ErrorKind::kAmplitude;
  if (text == "offresonance" || text == "off-resonance") return ErrorKind::kOffResonance;
  throw InvalidArgument("unknown error kind '" + std::string(text) + "'");
}

template <Real T>
ErrorModel<T> error_model(ErrorKind kind, const T& size) {
  if (kind == ErrorKind::kAmplitude) return {size, T(0)};
  return {T(0), size};
}

template <Real T>
Unitary2<T> ideal_propagator(const PhaseSequence<T>& seq) {
  return sequence_propagator(seq, ErrorModel<T>{});
}

template <Real T>
Unitary2<T> toggling_error_propagator(const PhaseSequence<T>& seq, const T& epsilon) {
  const auto toggling = in_frame(seq, Frame::kToggling);
  const T delta = epsilon * pi<T>();
  Unitary2<T> total;
  for (const T& phase : toggling.phases()) total = make_rotation<T>(delta, phase) * total;
  return total;
}

template <Real T>
Unitary2<T> direct_error_propagator(const PhaseSequence<T>& seq, const ErrorModel<T>& err) {
  const auto applied = in_frame(seq, Frame::kApplied);
  return ideal_propagator(applied).adjoint() * sequence_propagator(applied, err);
}

template <Real T>
Unitary2<T> error_propagator(const PhaseSequence<T>& seq, const ErrorModel<T>& err) {
  Unitary2<T> direct = direct_error_propagator(seq, err);
  if (err.f != 0) return direct;
  Unitary2<T> toggled = toggling_error_propagator(seq, err.epsilon);
  const T tolerance = 100 * T(static_cast<int>(seq.size() + 1)) * working_epsilon<T>();
  const T gap = toggled.max_abs_diff(direct);
  if (gap > tolerance) {
    throw ConsistencyError("toggling-frame and direct error propagators differ by " +
                           to_decimal(gap, 6) + " (tolerance " + to_decimal(tolerance, 6) + ")");
  }
  return toggled;
}

template <Real T>
PauliVector<T> delta1(const PhaseSequence<T>& seq, const T& delta) {
  using std::cos;
  using std::sin;
  const auto toggling = in_frame(seq, Frame::kToggling);
  T sx{0};
  T sy{0};
  for (const T& phase : toggling.phases()) {
    sx += cos(phase);
    sy += sin(phase);
  }
  return {delta / 2 * sx, delta / 2 * sy, T(0)};
}

template <Real T>
T delta2(const PhaseSequence<T>& seq, const T& delta) {
  using std::sin;
  const auto toggling = in_frame(seq, Frame::kToggling);
  const auto phases = toggling.phases();
  T sum{0};
  for (size_t j = 0; j < phases.size(); ++j) {
    for (size_t k = 0; k < j; ++k) sum += sin(phases[j] - phases[k]);
  }
  return -(delta * delta / 4) * sum;
}

template <Real T>
bool GeneratorSeries<T>::resolvable(int k) const {
  return to_double(coefficient(k).angle()) > 100 * noise.at(static_cast<size_t>(k - 1));
}

template <Real T>
AxisAngle<T> GeneratorSeries<T>::evaluate(const T& epsilon) const {
  AxisAngle<T> total;
  T power = epsilon;
  for (const auto& c : terms) {
    total = total + power * c;
    power *= epsilon;
  }
  return total;
}

template <Real T>
GeneratorSeries<T> generator_taylor(const PhaseSequence<T>& seq, ErrorKind kind, int max_order) {
  using std::pow;
  if (max_order < 1 || max_order > 12) throw InvalidArgument("generator order must lie in 1..12");
  const int digits = working_digits<T>();
  std::vector<int> odd;
  std::vector<int> even;
  for (int k = 1; k <= max_order; ++k) (k % 2 ? odd : even).push_back(k);

  const auto odd_stencil = stencil_for<T>(odd);
  const auto even_stencil = even.empty() ? StencilSolve<T>{{}, 1.0} : stencil_for<T>(even);
  const double condition = std::max(odd_stencil.condition, even_stencil.condition);
  const double unit = to_double(working_epsilon<T>());
  if (condition * unit >= 1e-3) {
    throw ConditioningError("stencil condition " + std::to_string(condition) + " too large for " +
                                std::to_string(digits) + " digits",
                            condition);
  }

  const T step = pow(T(10), T(-digits) / (2 * max_order));
  const AxisAngle<T> origin = generator_at(seq, kind, T(0));
  auto extract = [&](const T& h) {
    std::vector<AxisAngle<T>> odd_rhs;
    std::vector<AxisAngle<T>> even_rhs;
    for (size_t j = 1; j <= odd.size(); ++j) {
      const T e = T(static_cast<int>(j)) * h;
      const AxisAngle<T> plus = generator_at(seq, kind, e);
      const AxisAngle<T> minus = generator_at(seq, kind, T(-e));
      odd_rhs.push_back(T(0.5) * (plus - minus));
      even_rhs.push_back(T(0.5) * (plus + minus) - origin);
    }
    std::vector<AxisAngle<T>> terms(static_cast<size_t>(max_order));
    auto solve = [&](const std::vector<int>& orders, const StencilSolve<T>& stencil,
                     const std::vector<AxisAngle<T>>& rhs) {
      for (size_t r = 0; r < orders.size(); ++r) {
        AxisAngle<T> scaled;
        for (size_t j = 0; j < orders.size(); ++j) scaled = scaled + stencil.inverse[r][j] * rhs[j];
        terms[static_cast<size_t>(orders[r] - 1)] = (T(1) / pow(h, orders[r])) * scaled;
      }
    };
    solve(odd, odd_stencil, odd_rhs);
    if (!even.empty()) solve(even, even_stencil, even_rhs);
    return terms;
  };

  GeneratorSeries<T> series;
  series.terms = extract(step);
  series.condition = condition;
  series.step = step;
  series.digits = digits;
  // Truncation is estimated by repeating the solve at half the step.
  const auto refined = extract(T(step / 2));
  const double pulses = static_cast<double>(seq.size() + 1);
  for (int k = 1; k <= max_order; ++k) {
    const auto index = static_cast<size_t>(k - 1);
    const double roundoff = condition * 4 * pulses * unit / to_double(T(pow(step / 2, k)));
    const double truncation = to_double((series.terms[index] - refined[index]).angle());
    series.noise.push_back(std::max(roundoff, truncation));
  }
  return series;
}

template <Real T>
OrderEstimate infidelity_order(const PhaseSequence<T>& seq, ErrorKind kind, const OrderOptions& options) {
  using std::log10;
  using std::pow;
  const int digits = working_digits<T>();
  const auto applied = in_frame(seq, Frame::kApplied);
  const Unitary2<T> target = target_not<T>();
  const T floor = pow(T(10), T(2 * (6 - digits)));
  const T upper(options.upper_infidelity);

  if (infidelity(target, sequence_propagator(applied, ErrorModel<T>{})) > floor) {
    throw InvalidArgument("sequence '" + seq.label() + "' does not implement pi_0 when error-free");
  }

  struct Sample {
    double log_eps;
    double log_infidelity;
  };
  std::vector<Sample> run;
  const int max_steps = options.points_per_decade * (2 * digits + 4);
  for (int k = 0; k <= max_steps; ++k) {
    const T eps = pow(T(10), T(-k) / options.points_per_decade);
    const T value = infidelity(target, sequence_propagator(applied, error_model(kind, eps)));
    if (value > upper) {
      run.clear();
      continue;
    }
    if (value < floor) {
      if (eps <= T(0.1)) break;
      run.clear();
      continue;
    }
    run.push_back({to_double(log10(eps)), to_double(log10(value))});
  }

  if (static_cast<int>(run.size()) < options.min_points) {
    throw PrecisionTooLow("only " + std::to_string(run.size()) + " ladder points of '" + seq.label() +
                          "' fall inside the fit window at " + std::to_string(digits) +
                          " digits (need " + std::to_string(options.min_points) +
                          "); increase --precision");
  }
  if (static_cast<int>(run.size()) > options.fit_points) {
    run.erase(run.begin(), run.end() - options.fit_points);
  }

  double mean_x = 0;
  double mean_y = 0;
  for (const auto& s : run) {
    mean_x += s.log_eps;
    mean_y += s.log_infidelity;
  }
  mean_x /= static_cast<double>(run.size());
  mean_y /= static_cast<double>(run.size());
  double sxy = 0;
  double sxx = 0;
  for (const auto& s : run) {
    sxy += (s.log_eps - mean_x) * (s.log_infidelity - mean_y);
    sxx += (s.log_eps - mean_x) * (s.log_eps - mean_x);
  }
  const double slope = sxy / sxx;
  const double intercept = mean_y - slope * mean_x;
  double residual = 0;
  for (const auto& s : run) {
    residual = std::max(residual, std::abs(s.log_infidelity - (slope * s.log_eps + intercept)));
  }

  OrderEstimate estimate;
  estimate.exponent = slope;
  estimate.coefficient = std::pow(10.0, intercept);
  estimate.eps_min = std::pow(10.0, run.back().log_eps);
  estimate.eps_max = std::pow(10.0, run.front().log_eps);
  estimate.residual = residual;
  estimate.precision = digits;
  estimate.points = static_cast<int>(run.size());
  estimate.floor = to_double(floor);
  if (residual < options.residual_gate) estimate.rounded_order = static_cast<int>(std::lround(slope));
  return estimate;
}

template <Real T>
SweepResult<T> fidelity_sweep(const PhaseSequence<T>& seq, std::span<const T> eps_grid, std::span<const T> f_grid) {
  if (eps_grid.empty() || f_grid.empty()) throw InvalidArgument("sweep grids must be non-empty");
  const auto applied = in_frame(seq, Frame::kApplied);
  const Unitary2<T> target = target_not<T>();
  SweepResult<T> result;
  result.sequence_label = seq.label();
  result.rows.reserve(eps_grid.size() * f_grid.size());
  for (const T& eps : eps_grid) {
    for (const T& f : f_grid) {
      const Unitary2<T> v = sequence_propagator(applied, ErrorModel<T>{eps, f});
      result.rows.push_back({eps, f, fidelity(target, v), infidelity(target, v)});
    }
  }
  return result;
}

#define NESTPULSE_INSTANTIATE(T)                                                                       \
  template ErrorModel<T> error_model<T>(ErrorKind, const T&);                                          \
  template Unitary2<T> ideal_propagator<T>(const PhaseSequence<T>&);                                   \
  template Unitary2<T> toggling_error_propagator<T>(const PhaseSequence<T>&, const T&);                \
  template Unitary2<T> direct_error_propagator<T>(const PhaseSequence<T>&, const ErrorModel<T>&);      \
  template Unitary2<T> error_propagator<T>(const PhaseSequence<T>&, const ErrorModel<T>&);             \
  template PauliVector<T> delta1<T>(const PhaseSequence<T>&, const T&);                                \
  template T delta2<T>(const PhaseSequence<T>&, const T&);                                             \
  template struct GeneratorSeries<T>;                                                                  \
  template GeneratorSeries<T> generator_taylor<T>(const PhaseSequence<T>&, ErrorKind, int);            \
  template OrderEstimate infidelity_order<T>(const PhaseSequence<T>&, ErrorKind, const OrderOptions&); \
  template SweepResult<T> fidelity_sweep<T>(const PhaseSequence<T>&, std::span<const T>, std::span<const T>);

NESTPULSE_INSTANTIATE(double)
NESTPULSE_INSTANTIATE(HighPrecision)

#undef NESTPULSE_INSTANTIATE

}  // namespace nestpulse
