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

#include "checks.hpp"

#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>

#include "nestpulse/error_analysis.hpp"
#include "nestpulse/errors.hpp"
#include "nestpulse/sequences.hpp"
#include "nestpulse/su2.hpp"

namespace nestpulse::cli {
namespace {

using Seq = PhaseSequence<double>;

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", x);
  return buf;
}

std::vector<double> uniform_phases(std::mt19937_64& rng, size_t n) {
  std::uniform_real_distribution<double> angle(-M_PI, M_PI);
  std::vector<double> out(n);
  for (auto& p : out) p = angle(rng);
  return out;
}

std::vector<double> antisymmetric_phases(std::mt19937_64& rng, size_t n) {
  auto out = uniform_phases(rng, n);
  for (size_t j = 0; j < n / 2; ++j) out[n - 1 - j] = -out[j];
  if (n % 2) out[n / 2] = 0;
  return out;
}

CheckResult pass_if(std::string name, bool ok, std::string detail) {
  return {std::move(name), ok ? CheckStatus::kPass : CheckStatus::kFail, std::move(detail)};
}

CheckResult pi_reflection(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> angle(-M_PI, M_PI);
  double worst = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    const double theta = 2 * angle(rng), alpha = angle(rng), beta = angle(rng);
    const auto lhs = make_rotation(theta, beta) * make_rotation(M_PI, alpha);
    const auto rhs = make_rotation(M_PI, alpha) * make_rotation(theta, 2 * alpha - beta);
    worst = std::max(worst, lhs.max_abs_diff(rhs));
  }
  return pass_if("pi_reflection_identity", worst <= 1e-12, "max entry gap " + fmt(worst) + " over 1000 triples");
}

CheckResult toggling_roundtrip(std::mt19937_64& rng) {
  double worst = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const Seq seq(uniform_phases(rng, 9), Frame::kApplied);
    const auto back = from_toggling(to_toggling(seq));
    for (size_t i = 0; i < seq.size(); ++i) worst = std::max(worst, std::abs(back[i] - seq[i]));
  }
  return pass_if("toggling_roundtrip", worst <= 1e-12, "max phase gap " + fmt(worst) + " over 100 sequences");
}

CheckResult antisymmetric_sequences(std::mt19937_64& rng) {
  const auto target = target_not<double>();
  int bad_symmetry = 0;
  double worst = 0;
  for (int trial = 0; trial < 500; ++trial) {
    const Seq seq(antisymmetric_phases(rng, 3 + 2 * static_cast<size_t>(trial % 5)), Frame::kApplied);
    if (!is_antisymmetric(seq) || !is_symmetric(to_toggling(seq))) ++bad_symmetry;
    worst = std::max(worst, std::abs(1 - fidelity(target, sequence_propagator(seq, ErrorModel<double>{}))));
  }
  return pass_if("antisymmetric_implies_symmetric_toggling_and_pi0", bad_symmetry == 0 && worst <= 1e-12,
                 std::to_string(bad_symmetry) + " symmetry violations, max |1-F| " + fmt(worst));
}

CheckResult delta1_f1(double perturbation) {
  const double psi = std::acos(-0.25) + perturbation;
  const Seq f1({3 * psi, psi, 0, -psi, -3 * psi}, Frame::kApplied);
  const auto d = delta1(f1, 1.0);
  const double size = std::hypot(d.x, d.y);
  return pass_if("delta1_cancels_for_F1", size < 1e-12, "|Delta1| per unit delta = " + fmt(size));
}

CheckResult delta2_symmetric(std::mt19937_64& rng) {
  double worst = 0;
  for (int trial = 0; trial < 500; ++trial) {
    const size_t n = 2 + static_cast<size_t>(trial % 10);
    auto phases = uniform_phases(rng, n);
    for (size_t j = 0; j < n / 2; ++j) phases[n - 1 - j] = phases[j];
    worst = std::max(worst, std::abs(delta2(Seq(phases, Frame::kToggling), 1.0)));
  }
  return pass_if("delta2_vanishes_for_symmetric_toggling", worst <= 1e-12, "max |Delta2| " + fmt(worst));
}

CheckResult deltas_match_series(std::mt19937_64& rng) {
  PrecisionScope scope(40);
  using HP = HighPrecision;
  double worst = 0;
  for (int trial = 0; trial < 20; ++trial) {
    const auto raw = uniform_phases(rng, 1 + static_cast<size_t>(trial % 7));
    const PhaseSequence<HP> seq(std::vector<HP>(raw.begin(), raw.end()), Frame::kApplied);
    const auto series = generator_taylor(seq, ErrorKind::kAmplitude, 6);
    const auto d1 = delta1(seq, pi<HP>());
    const HP d2 = delta2(seq, pi<HP>());
    const auto& c1 = series.coefficient(1);
    const auto& c2 = series.coefficient(2);
    // Rotation vector = 2 x Pauli coefficients, delta = eps pi.
    const double gap1 = to_double(AxisAngle<HP>{c1.nx - 2 * d1.x, c1.ny - 2 * d1.y, c1.nz}.angle());
    const double gap2 = to_double(AxisAngle<HP>{c2.nx, c2.ny, c2.nz - 2 * d2}.angle());
    const double scale = 1 + to_double(c1.angle()) + to_double(c2.angle());
    worst = std::max(worst, std::max(gap1, gap2) / scale);
  }
  return pass_if("delta1_delta2_match_generator_series", worst <= 1e-8, "max relative gap " + fmt(worst));
}

CheckResult route_equivalence(std::mt19937_64& rng) {
  double worst = 0;
  try {
    for (int trial = 0; trial < 100; ++trial) {
      const Seq seq(uniform_phases(rng, 1 + static_cast<size_t>(trial % 9)), Frame::kApplied);
      for (double eps : {-0.5, -0.1, 0.1, 0.5}) {
        const auto a = toggling_error_propagator(seq, eps);
        const auto b = direct_error_propagator(seq, ErrorModel<double>{eps, 0});
        worst = std::max(worst, a.max_abs_diff(b));
      }
    }
  } catch (const Error& e) {
    return {"error_propagator_route_equivalence", CheckStatus::kFail, e.what()};
  }
  return pass_if("error_propagator_route_equivalence", worst <= 1e-12, "max entry gap " + fmt(worst));
}

int recommended_digits(int depth) {
  if (depth >= 3) return 60;
  if (depth == 2) return 30;
  return 0;
}

template <Real T>
OrderEstimate fn_order(int depth, double perturbation) {
  auto seq = fn_phases<T>(depth);
  if (perturbation != 0) {
    // Rebuild with a shifted psi so the corruption propagates through nesting.
    const T psi = fn_psi<T>(Branch::kPlus) + T(perturbation);
    std::vector<T> current{T(0)};
    for (int level = 0; level < depth; ++level) {
      std::vector<T> next;
      for (const T& p : current) next.push_back(3 * psi + p);
      for (const T& p : current) next.push_back(psi - p);
      for (const T& p : current) next.push_back(p);
      for (const T& p : current) next.push_back(-psi - p);
      for (const T& p : current) next.push_back(-3 * psi + p);
      current = std::move(next);
    }
    seq = PhaseSequence<T>(std::move(current), Frame::kApplied, seq.label());
  }
  return infidelity_order(seq, ErrorKind::kAmplitude);
}

CheckResult fn_order_check(int depth, int precision, double perturbation) {
  const std::string name = "F" + std::to_string(depth) + "_infidelity_order";
  const int expected = 2 * static_cast<int>(std::lround(std::pow(3, depth)));
  if (precision < recommended_digits(depth)) {
    return {name, CheckStatus::kSkip,
            "needs at least " + std::to_string(recommended_digits(depth)) + " digits, have " +
                std::to_string(precision)};
  }
  const double tolerance = depth <= 1 ? 0.1 : depth == 2 ? 0.3 : 1.0;
  try {
    OrderEstimate est;
    if (precision <= kDoubleDigits) {
      est = fn_order<double>(depth, perturbation);
    } else {
      PrecisionScope scope(precision);
      est = fn_order<HighPrecision>(depth, perturbation);
    }
    const bool ok = est.gate_passed() && std::abs(est.exponent - expected) <= tolerance;
    return pass_if(name, ok,
                   "exponent " + fmt(est.exponent) + " (expected " + std::to_string(expected) + " +- " +
                       fmt(tolerance) + "), residual " + fmt(est.residual));
  } catch (const PrecisionTooLow& e) {
    return {name, CheckStatus::kSkip, e.what()};
  }
}

}  // namespace

const char* to_string(CheckStatus status) {
  switch (status) {
    case CheckStatus::kPass:
      return "PASS";
    case CheckStatus::kFail:
      return "FAIL";
    case CheckStatus::kSkip:
      return "SKIP";
  }
  return "FAIL";
}

std::vector<CheckResult> run_checks(const CheckOptions& options) {
  std::mt19937_64 rng(options.seed);
  std::vector<CheckResult> results;
  results.push_back(pi_reflection(rng));
  results.push_back(toggling_roundtrip(rng));
  results.push_back(antisymmetric_sequences(rng));
  results.push_back(delta1_f1(options.psi_perturbation));
  results.push_back(delta2_symmetric(rng));
  results.push_back(deltas_match_series(rng));
  results.push_back(route_equivalence(rng));
  for (int depth : options.order_depths) {
    results.push_back(fn_order_check(depth, options.precision, options.psi_perturbation));
  }
  return results;
}

}  // namespace nestpulse::cli
