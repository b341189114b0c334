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

#include <cmath>
#include <random>
#include <vector>

#include <doctest.h>

#include "nestpulse/errors.hpp"
#include "oracles.hpp"

using nestpulse::ErrorKind;
using nestpulse::ErrorModel;
using nestpulse::Frame;
using nestpulse::HighPrecision;
using HP = HighPrecision;
using Seq = nestpulse::PhaseSequence<double>;

namespace {

double hp_abs(const HP& x) { return std::abs(nestpulse::to_double(x)); }

}  // namespace

TEST_CASE("error_propagator") {
  const auto f1 = nestpulse::fn_phases<double>(1);
  CHECK(nestpulse::error_propagator(f1, ErrorModel<double>{}).max_abs_diff(nestpulse::Unitary2<double>{}) < 1e-15);

  const Seq single({0.0}, Frame::kApplied);
  for (double eps : {0.1, -0.3}) {
    const auto e = nestpulse::error_propagator(single, ErrorModel<double>{eps, 0.0});
    CHECK(e.max_abs_diff(nestpulse::make_rotation(eps * M_PI, 0.0)) < 1e-15);
  }

  const auto a = nestpulse::toggling_error_propagator(f1, 0.3);
  const auto b = nestpulse::direct_error_propagator(f1, ErrorModel<double>{0.3, 0.0});
  CHECK(a.max_abs_diff(b) < 1e-12);
  CHECK_NOTHROW(nestpulse::error_propagator(f1, ErrorModel<double>{0.3, 0.0}));

  // Off-resonance: only the direct route, and it must differ from the ideal.
  const auto off = nestpulse::error_propagator(f1, ErrorModel<double>{0.0, 0.05});
  CHECK(off.max_abs_diff(nestpulse::direct_error_propagator(f1, ErrorModel<double>{0.0, 0.05})) == 0.0);
  CHECK(nestpulse::infidelity(nestpulse::Unitary2<double>{}, off) > 1e-6);
}

TEST_CASE("toggling and direct error propagators agree on random sequences") {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 100; ++trial) {
    const Seq seq(oracle::random_phases(rng, 1 + trial % 9), Frame::kApplied);
    for (double eps : {-0.5, -0.1, 0.1, 0.5}) {
      const auto a = nestpulse::toggling_error_propagator(seq, eps);
      const auto b = nestpulse::direct_error_propagator(seq, ErrorModel<double>{eps, 0.0});
      REQUIRE(std::abs(nestpulse::fidelity(a, b) - 1) < 1e-12);
      REQUIRE(a.max_abs_diff(b) < 1e-12);
    }
  }
}

TEST_CASE("delta1") {
  const auto d = nestpulse::delta1(nestpulse::fn_phases<double>(1), 0.7);
  CHECK(std::hypot(d.x, d.y) < 1e-12);
  CHECK(d.z == 0.0);

  const auto single = nestpulse::delta1(Seq({0.0}, Frame::kApplied), 0.4);
  CHECK(single.x == doctest::Approx(0.2));
  CHECK(single.y == doctest::Approx(0.0));

  const auto opposite = nestpulse::delta1(Seq({0.0, M_PI}, Frame::kToggling), 1.0);
  CHECK(std::hypot(opposite.x, opposite.y) < 1e-15);

  // A corrupted psi leaves a first-order error growing linearly with the shift.
  const double psi = std::acos(-0.25);
  double previous = 0;
  for (double shift : {1e-5, 1e-4, 1e-3}) {
    const double p = psi + shift;
    const auto bad = nestpulse::delta1(Seq({3 * p, p, 0, -p, -3 * p}, Frame::kApplied), 1.0);
    const double size = std::hypot(bad.x, bad.y);
    CHECK(size > 1e-12);
    if (previous > 0) CHECK(size / previous == doctest::Approx(10.0).epsilon(0.01));
    previous = size;
  }
}

TEST_CASE("delta2") {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 500; ++trial) {
    const size_t n = 2 + trial % 10;
    auto phases = oracle::random_phases(rng, n);
    for (size_t j = 0; j < n / 2; ++j) phases[n - 1 - j] = phases[j];
    REQUIRE(std::abs(nestpulse::delta2(Seq(phases, Frame::kToggling), 1.0)) < 1e-12);
  }
  const double delta = 0.3;
  CHECK(nestpulse::delta2(Seq({0.0, M_PI / 2}, Frame::kToggling), delta) ==
        doctest::Approx(-delta * delta / 4).epsilon(1e-15));
  CHECK(nestpulse::delta2(Seq({1.1}, Frame::kToggling), delta) == 0.0);
}

TEST_CASE("generator_taylor on a single pulse recovers the exact first-order generator") {
  nestpulse::PrecisionScope scope(40);
  const nestpulse::PhaseSequence<HP> single({HP(0)}, Frame::kApplied);
  const auto series = nestpulse::generator_taylor(single, ErrorKind::kAmplitude, 6);
  CHECK(series.max_order() == 6);
  CHECK(hp_abs(series.coefficient(1).nx - nestpulse::pi<HP>()) < 1e-25);
  CHECK(hp_abs(series.coefficient(1).ny) < 1e-25);
  CHECK(hp_abs(series.coefficient(1).nz) < 1e-25);
  for (int k = 2; k <= 6; ++k) {
    CHECK_FALSE(series.resolvable(k));
    CHECK(nestpulse::to_double(series.coefficient(k).angle()) < 1e-10);
  }
  CHECK(series.resolvable(1));
  // Reconstruction tracks the numerical generator.
  const HP eps("0.001");
  const auto direct = nestpulse::principal_log(nestpulse::error_propagator(single, ErrorModel<HP>{eps, HP(0)}));
  CHECK(nestpulse::to_double((series.evaluate(eps) - direct).angle()) < 1e-20);
}

TEST_CASE("generator_taylor: F1 and symmetric5 cancel first and second order") {
  nestpulse::PrecisionScope scope(40);
  for (const auto& seq : {nestpulse::fn_phases<HP>(1), nestpulse::symmetric5_phases<HP>()}) {
    CAPTURE(seq.label());
    const auto series = nestpulse::generator_taylor(seq, ErrorKind::kAmplitude, 6);
    CHECK_FALSE(series.resolvable(1));
    CHECK_FALSE(series.resolvable(2));
    CHECK(nestpulse::to_double(series.coefficient(1).angle()) < 1e-10);
    CHECK(nestpulse::to_double(series.coefficient(2).angle()) < 1e-10);
    REQUIRE(series.resolvable(3));
    const auto& c3 = series.coefficient(3);
    CHECK(nestpulse::to_double(c3.angle()) > 1.0);
    CHECK(hp_abs(c3.nz) < 1e-10 * nestpulse::to_double(c3.angle()));
  }
  // The symmetric sequence keeps a fourth-order sigma_z term; F1 does not.
  const auto f1 = nestpulse::generator_taylor(nestpulse::fn_phases<HP>(1), ErrorKind::kAmplitude, 6);
  const auto s5 = nestpulse::generator_taylor(nestpulse::symmetric5_phases<HP>(), ErrorKind::kAmplitude, 6);
  CHECK_FALSE(f1.resolvable(4));
  CHECK(s5.resolvable(4));
  CHECK(hp_abs(s5.coefficient(4).nz) > 1.0);
}

TEST_CASE("generator_taylor agrees with delta1 and delta2") {
  nestpulse::PrecisionScope scope(40);
  std::mt19937_64 rng(1234);
  for (int trial = 0; trial < 100; ++trial) {
    const auto raw = oracle::random_phases(rng, 1 + trial % 7);
    const nestpulse::PhaseSequence<HP> seq(std::vector<HP>(raw.begin(), raw.end()), Frame::kApplied);
    const auto series = nestpulse::generator_taylor(seq, ErrorKind::kAmplitude, 6);
    const auto d1 = nestpulse::delta1(seq, nestpulse::pi<HP>());
    const HP d2 = nestpulse::delta2(seq, nestpulse::pi<HP>());
    const auto& c1 = series.coefficient(1);
    const auto& c2 = series.coefficient(2);
    const double scale = 1 + nestpulse::to_double(c1.angle()) + nestpulse::to_double(c2.angle());
    REQUIRE(hp_abs(c1.nx - 2 * d1.x) / scale < 1e-8);
    REQUIRE(hp_abs(c1.ny - 2 * d1.y) / scale < 1e-8);
    REQUIRE(hp_abs(c1.nz) / scale < 1e-8);
    REQUIRE(hp_abs(c2.nz - 2 * d2) / scale < 1e-8);
    REQUIRE(hp_abs(c2.nx) / scale < 1e-8);
    REQUIRE(hp_abs(c2.ny) / scale < 1e-8);
  }
}

TEST_CASE("antisymmetric sequences have no second-order generator") {
  nestpulse::PrecisionScope scope(40);
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 40; ++trial) {
    const auto raw = oracle::random_antisymmetric(rng, 3 + 2 * (trial % 4));
    const nestpulse::PhaseSequence<HP> seq(std::vector<HP>(raw.begin(), raw.end()), Frame::kApplied);
    const auto series = nestpulse::generator_taylor(seq, ErrorKind::kAmplitude, 4);
    REQUIRE(hp_abs(series.coefficient(2).nz) < 1e-15);
    REQUIRE(hp_abs(series.coefficient(4).nz) < 1e-10);
  }
}

TEST_CASE("F_n error generators stay in the xy-plane") {
  nestpulse::PrecisionScope scope(60);
  for (int n = 1; n <= 2; ++n) {
    const auto seq = nestpulse::fn_phases<HP>(n);
    const auto series = nestpulse::generator_taylor(seq, ErrorKind::kAmplitude, 12);
    int resolvable = 0;
    for (int k = 1; k <= 12; ++k) {
      const auto& c = series.coefficient(k);
      if (series.resolvable(k)) {
        ++resolvable;
        CHECK(hp_abs(c.nz) <= 1e-10 * nestpulse::to_double(c.angle()));
      }
    }
    CHECK(resolvable == (n == 1 ? 5 : 2));  // odd orders from c3 for F1, c9 and c11 for F2
    // The full generator at finite eps has no sigma_z part either.
    for (const char* eps : {"0.01", "0.05", "0.2"}) {
      const auto g = nestpulse::principal_log(nestpulse::error_propagator(seq, ErrorModel<HP>{HP(eps), HP(0)}));
      CHECK(hp_abs(g.nz) <= 1e-10 * nestpulse::to_double(g.angle()));
    }
  }
}

TEST_CASE("off-resonance generator of a single pulse alternates perpendicular and parallel") {
  nestpulse::PrecisionScope scope(40);
  const nestpulse::PhaseSequence<HP> single({HP(0)}, Frame::kApplied);
  const auto series = nestpulse::generator_taylor(single, ErrorKind::kOffResonance, 8);
  for (int k = 1; k <= 7; ++k) {
    const auto& c = series.coefficient(k);
    CAPTURE(k);
    REQUIRE(series.resolvable(k));
    CHECK(hp_abs(c.nz) < 1e-12 * nestpulse::to_double(c.angle()));
    if (k % 2) {
      CHECK(hp_abs(c.nx) < 1e-12 * nestpulse::to_double(c.angle()));  // odd: along y, perpendicular to the pulse
    } else {
      CHECK(hp_abs(c.ny) < 1e-12 * nestpulse::to_double(c.angle()));  // even: along x, parallel
    }
  }
  CHECK(nestpulse::to_double(series.coefficient(1).ny) == doctest::Approx(2.0).epsilon(1e-15));
  CHECK(nestpulse::to_double(series.coefficient(2).nx) == doctest::Approx(M_PI / 2).epsilon(1e-15));
}

TEST_CASE("generator_taylor rejects unsupported orders") {
  const auto f1 = nestpulse::fn_phases<double>(1);
  CHECK_THROWS_AS(nestpulse::generator_taylor(f1, ErrorKind::kAmplitude, 0), nestpulse::InvalidArgument);
  CHECK_THROWS_AS(nestpulse::generator_taylor(f1, ErrorKind::kAmplitude, 13), nestpulse::InvalidArgument);
}

TEST_CASE("infidelity_order") {
  const auto single = nestpulse::infidelity_order(Seq({0.0}, Frame::kApplied), ErrorKind::kAmplitude);
  REQUIRE(single.gate_passed());
  CHECK(*single.rounded_order == 2);
  CHECK(single.exponent == doctest::Approx(2.0).epsilon(1e-3));
  // 1 - |cos(eps pi / 2)| ~ pi^2 eps^2 / 8.
  CHECK(single.coefficient == doctest::Approx(M_PI * M_PI / 8).epsilon(1e-3));

  const auto f1 = nestpulse::infidelity_order(nestpulse::fn_phases<double>(1), ErrorKind::kAmplitude);
  REQUIRE(f1.gate_passed());
  CHECK(*f1.rounded_order == 6);
  CHECK(f1.eps_min < f1.eps_max);
  CHECK(f1.points >= 10);

  {
    nestpulse::PrecisionScope scope(40);
    const auto f2 = nestpulse::infidelity_order(nestpulse::fn_phases<HP>(2), ErrorKind::kAmplitude);
    REQUIRE(f2.gate_passed());
    CHECK(*f2.rounded_order == 18);
    CHECK(f2.precision == 40);
  }

  CHECK_THROWS_AS(nestpulse::infidelity_order(nestpulse::fn_phases<double>(3), ErrorKind::kAmplitude),
                  nestpulse::PrecisionTooLow);
  // A sequence that is not a NOT gate when error-free.
  CHECK_THROWS_AS(nestpulse::infidelity_order(Seq({0.0, 0.0}, Frame::kApplied), ErrorKind::kAmplitude),
                  nestpulse::InvalidArgument);

  // F1 gives no protection against detuning.
  const auto off = nestpulse::infidelity_order(nestpulse::fn_phases<double>(1), ErrorKind::kOffResonance);
  REQUIRE(off.gate_passed());
  CHECK(*off.rounded_order == 2);
}

TEST_CASE("fidelity_sweep") {
  const Seq single({0.0}, Frame::kApplied);
  const std::vector<double> eps{0.0, 0.5};
  const std::vector<double> f{0.0};
  const auto result = nestpulse::fidelity_sweep<double>(single, eps, f);
  REQUIRE(result.rows.size() == 2);
  CHECK(result.rows[0].fidelity == doctest::Approx(1.0));
  CHECK(result.rows[1].fidelity == doctest::Approx(std::cos(0.25 * M_PI)).epsilon(1e-14));
  for (const auto& row : result.rows) {
    CHECK(row.fidelity >= 0);
    CHECK(row.fidelity <= 1);
    CHECK(row.infidelity == doctest::Approx(1 - row.fidelity).epsilon(1e-14));
  }

  const std::vector<double> at{0.2};
  const auto f1 = nestpulse::fidelity_sweep<double>(nestpulse::fn_phases<double>(1), at, f);
  const auto one = nestpulse::fidelity_sweep<double>(single, at, f);
  CHECK(f1.rows[0].fidelity > one.rows[0].fidelity);

  const std::vector<double> zero{0.0};
  CHECK(nestpulse::fidelity_sweep<double>(nestpulse::fn_phases<double>(1), zero, zero).rows[0].fidelity ==
        doctest::Approx(1.0));

  // Grid order: eps major.
  const std::vector<double> fs{0.0, 0.1};
  const auto grid = nestpulse::fidelity_sweep<double>(single, eps, fs);
  REQUIRE(grid.rows.size() == 4);
  CHECK(grid.rows[1].epsilon == 0.0);
  CHECK(grid.rows[1].f == 0.1);
  CHECK(grid.rows[2].epsilon == 0.5);

  CHECK_THROWS_AS(nestpulse::fidelity_sweep<double>(single, std::vector<double>{}, f), nestpulse::InvalidArgument);
}
