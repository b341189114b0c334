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

#include "nestpulse/sequences.hpp"

#include <cmath>
#include <random>
#include <vector>

#include <doctest.h>

#include "nestpulse/errors.hpp"
#include "oracles.hpp"

using nestpulse::Branch;
using nestpulse::Frame;
using nestpulse::HighPrecision;
using Seq = nestpulse::PhaseSequence<double>;

namespace {

const double kPsi = std::acos(-0.25);

void check_phases(const Seq& seq, const std::vector<double>& expected, double tol) {
  REQUIRE(seq.size() == expected.size());
  for (size_t i = 0; i < expected.size(); ++i) CHECK(std::abs(seq[i] - expected[i]) <= tol);
}

double max_phase_gap(const Seq& a, const Seq& b) {
  REQUIRE(a.size() == b.size());
  double worst = 0;
  for (size_t i = 0; i < a.size(); ++i) worst = std::max(worst, std::abs(a[i] - b[i]));
  return worst;
}

}  // namespace

TEST_CASE("PhaseSequence rejects empty and non-finite input") {
  CHECK_THROWS_AS(Seq({}, Frame::kApplied), nestpulse::InvalidArgument);
  CHECK_THROWS_AS(Seq({0.0, NAN}, Frame::kApplied), nestpulse::InvalidArgument);
}

TEST_CASE("fn_phases") {
  check_phases(nestpulse::fn_phases<double>(0), {0.0}, 0.0);

  CHECK(kPsi == doctest::Approx(1.8234765819).epsilon(1e-10));
  check_phases(nestpulse::fn_phases<double>(1), {3 * kPsi, kPsi, 0, -kPsi, -3 * kPsi}, 1e-15);
  check_phases(nestpulse::fn_phases<double>(1, Branch::kMinus), {-3 * kPsi, -kPsi, 0, kPsi, 3 * kPsi}, 1e-15);

  size_t expected = 1;
  for (int n = 0; n <= 4; ++n) {
    CHECK(nestpulse::fn_phases<double>(n).size() == expected);
    expected *= 5;
  }
  CHECK(nestpulse::fn_phases<double>(2).size() == 25);
  CHECK_THROWS_AS(nestpulse::fn_phases<double>(-1), nestpulse::InvalidArgument);
}

TEST_CASE("fn_phases agrees with the toggling-frame recursion") {
  for (int n = 0; n <= 3; ++n) {
    const auto toggling = nestpulse::to_toggling(nestpulse::fn_phases<double>(n));
    check_phases(toggling, oracle::fn_toggling(n, kPsi), 1e-12);
  }
}

TEST_CASE("toggling transform") {
  const auto f1 = nestpulse::fn_phases<double>(1);
  const auto t = nestpulse::to_toggling(f1);
  CHECK(t.frame() == Frame::kToggling);
  check_phases(t, {3 * kPsi, 5 * kPsi, 4 * kPsi, 5 * kPsi, 3 * kPsi}, 1e-14);

  check_phases(nestpulse::to_toggling(Seq({0, 0, 0, 0, 0}, Frame::kApplied)), {0, 0, 0, 0, 0}, 0.0);
  check_phases(nestpulse::to_toggling(Seq({0.4, -1.1}, Frame::kApplied)), {0.4, 2 * 0.4 + 1.1}, 1e-15);

  const auto back = nestpulse::from_toggling(t);
  CHECK(back.frame() == Frame::kApplied);
  check_phases(back, {3 * kPsi, kPsi, 0, -kPsi, -3 * kPsi}, 1e-14);
  check_phases(nestpulse::from_toggling(Seq({0.0}, Frame::kToggling)), {0.0}, 0.0);

  CHECK_THROWS_AS(nestpulse::to_toggling(t), nestpulse::InvalidArgument);
  CHECK_THROWS_AS(nestpulse::from_toggling(f1), nestpulse::InvalidArgument);
}

TEST_CASE("toggling roundtrip is the identity") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    const Seq seq(oracle::random_phases(rng, 9), Frame::kApplied);
    CHECK(max_phase_gap(nestpulse::from_toggling(nestpulse::to_toggling(seq)), seq) < 1e-12);
    const Seq tog(oracle::random_phases(rng, 9), Frame::kToggling);
    CHECK(max_phase_gap(nestpulse::to_toggling(nestpulse::from_toggling(tog)), tog) < 1e-12);
  }
}

TEST_CASE("nest") {
  const auto f1 = nestpulse::fn_phases<double>(1);
  const Seq unit({0.0}, Frame::kApplied);
  CHECK(nestpulse::nest(f1, f1).size() == 25);
  CHECK(max_phase_gap(nestpulse::nest(f1, f1), nestpulse::fn_phases<double>(2)) < 1e-12);
  CHECK(max_phase_gap(nestpulse::nest(unit, f1), f1) < 1e-14);
  CHECK(max_phase_gap(nestpulse::nest(f1, unit), f1) < 1e-14);
  for (int n = 0; n <= 2; ++n) {
    CHECK(max_phase_gap(nestpulse::nest(f1, nestpulse::fn_phases<double>(n)), nestpulse::fn_phases<double>(n + 1)) <
          1e-12);
  }
  // Toggling-frame inputs are accepted directly.
  CHECK(max_phase_gap(nestpulse::nest(nestpulse::to_toggling(f1), f1), nestpulse::fn_phases<double>(2)) < 1e-12);
}

TEST_CASE("nest is associative") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 50; ++trial) {
    const Seq a(oracle::random_phases(rng, 3), Frame::kApplied);
    const Seq b(oracle::random_phases(rng, 2), Frame::kApplied);
    const Seq c(oracle::random_phases(rng, 3), Frame::kApplied);
    CHECK(max_phase_gap(nestpulse::nest(a, nestpulse::nest(b, c)), nestpulse::nest(nestpulse::nest(a, b), c)) < 1e-12);
  }
}

TEST_CASE("symmetric5_phases") {
  const auto upper = nestpulse::symmetric5_phases<double>(Branch::kPlus);
  const double alpha = -2 * std::asin(std::pow(5.0 / 32, 0.25));
  CHECK(alpha == doctest::Approx(-1.3598037324418160).epsilon(1e-14));
  const double beta = 2 * alpha + std::acos(-(1 + 2 * std::cos(alpha)) / 2);
  check_phases(upper, {alpha, beta, 2 * beta - 2 * alpha, beta, alpha}, 1e-15);
  CHECK(upper[0] == upper[4]);
  CHECK(upper[1] == upper[3]);
  CHECK(nestpulse::is_symmetric(upper));

  const auto lower = nestpulse::symmetric5_phases<double>(Branch::kMinus);
  CHECK(lower[0] == doctest::Approx(-alpha));
  CHECK(lower[1] == doctest::Approx(-beta));

  for (const auto& s : {upper, lower}) {
    const auto t = nestpulse::to_toggling(s);
    for (size_t j = 0; j < 5; ++j) CHECK(std::abs(t[j] + t[4 - j]) < 1e-14);
    CHECK(nestpulse::is_antisymmetric(t));
  }
}

TEST_CASE("symmetry predicates") {
  const auto f1 = nestpulse::fn_phases<double>(1);
  CHECK(nestpulse::is_antisymmetric(f1));
  CHECK_FALSE(nestpulse::is_symmetric(f1));
  CHECK(nestpulse::is_symmetric(nestpulse::to_toggling(f1)));
  const Seq pair({0.0, M_PI / 3}, Frame::kApplied);
  CHECK_FALSE(nestpulse::is_antisymmetric(pair));
  CHECK_FALSE(nestpulse::is_symmetric(pair));
  // Comparison is modulo 2 pi.
  CHECK(nestpulse::is_symmetric(Seq({0.3, 1.0, 0.3 + 2 * M_PI}, Frame::kApplied)));
  CHECK(nestpulse::is_antisymmetric(Seq({M_PI, 0.0, M_PI}, Frame::kApplied)));
}

TEST_CASE("antisymmetric sequences have symmetric toggling phases and implement pi_0") {
  std::mt19937_64 rng(42);
  const auto target = nestpulse::target_not<double>();
  for (int trial = 0; trial < 500; ++trial) {
    const size_t length = 3 + 2 * (trial % 5);
    const Seq seq(oracle::random_antisymmetric(rng, length), Frame::kApplied);
    REQUIRE(nestpulse::is_antisymmetric(seq));
    REQUIRE(nestpulse::is_symmetric(nestpulse::to_toggling(seq)));
    const auto v = nestpulse::sequence_propagator(seq, nestpulse::ErrorModel<double>{});
    REQUIRE(std::abs(nestpulse::fidelity(target, v) - 1) < 1e-12);
  }
}

TEST_CASE("sequence_propagator") {
  const auto target = nestpulse::target_not<double>();
  const auto f1 = nestpulse::fn_phases<double>(1);
  CHECK(nestpulse::fidelity(target, nestpulse::sequence_propagator(f1, {})) == doctest::Approx(1.0).epsilon(1e-15));

  const Seq single({0.0}, Frame::kApplied);
  const double f_single = nestpulse::fidelity(target, nestpulse::sequence_propagator(single, {0.2, 0.0}));
  CHECK(f_single == doctest::Approx(std::cos(0.1 * M_PI)).epsilon(1e-14));

  // F1 against a brute-force product of exponentials.
  std::vector<double> phases(f1.phases().begin(), f1.phases().end());
  const double brute = oracle::fidelity(oracle::pulse(M_PI, 0, 0, 0), oracle::train(phases, 0.2, 0.0));
  const double f_f1 = nestpulse::fidelity(target, nestpulse::sequence_propagator(f1, {0.2, 0.0}));
  CHECK(f_f1 == doctest::Approx(brute).epsilon(1e-12));
  // Sixth-order regime: (1 - F) / 0.2^6 is an O(1) coefficient.
  const double ratio = (1 - f_f1) / std::pow(0.2, 6);
  CHECK(ratio > 1);
  CHECK(ratio < 10);
  CHECK(f_f1 > f_single);

  CHECK_THROWS_AS(nestpulse::sequence_propagator(nestpulse::to_toggling(f1), {}), nestpulse::InvalidArgument);
}

TEST_CASE("normalized reduces into (-pi, pi]") {
  const auto f2 = nestpulse::normalized(nestpulse::fn_phases<double>(2));
  for (double p : f2.phases()) {
    CHECK(p > -M_PI);
    CHECK(p <= M_PI);
  }
  const auto raw = nestpulse::fn_phases<double>(2);
  CHECK(nestpulse::fidelity(nestpulse::sequence_propagator(raw, {0.3, 0.0}),
                            nestpulse::sequence_propagator(f2, {0.3, 0.0})) == doctest::Approx(1.0).epsilon(1e-13));
  CHECK(nestpulse::normalized(Seq({-M_PI}, Frame::kApplied))[0] == doctest::Approx(M_PI));
}

TEST_CASE("high-precision F_n phases agree with doubles") {
  nestpulse::PrecisionScope scope(60);
  const auto hp = nestpulse::fn_phases<HighPrecision>(2);
  const auto lo = nestpulse::fn_phases<double>(2);
  for (size_t i = 0; i < hp.size(); ++i) CHECK(std::abs(nestpulse::to_double(hp[i]) - lo[i]) < 1e-14);
  const auto nested = nestpulse::nest(nestpulse::fn_phases<HighPrecision>(1), nestpulse::fn_phases<HighPrecision>(1));
  for (size_t i = 0; i < hp.size(); ++i) {
    CHECK(boost::multiprecision::abs(nested[i] - hp[i]) < HighPrecision("1e-55"));
  }
}
