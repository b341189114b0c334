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
#include <utility>

#include "nestpulse/errors.hpp"

namespace nestpulse {
namespace {

template <Real T>
T wrap_to_pi(const T& x) {
  using std::floor;
  const T two_pi = 2 * pi<T>();
  T r = x - two_pi * floor((x + pi<T>()) / two_pi);
  if (r <= -pi<T>()) r += two_pi;
  return r;
}

template <Real T>
bool equal_mod_two_pi(const T& a, const T& b, double tol) {
  T d = wrap_to_pi<T>(a - b);
  return (d < 0 ? T(-d) : d) <= tol;
}

template <Real T>
void require_frame(const PhaseSequence<T>& seq, Frame frame, const char* op) {
  if (seq.frame() != frame) {
    throw InvalidArgument(std::string(op) + " expects a sequence in the " + std::string(to_string(frame)) +
                          " frame, got " + std::string(to_string(seq.frame())));
  }
}

}  // namespace

std::string_view to_string(Frame frame) { return frame == Frame::kApplied ? "applied" : "toggling"; }

std::string_view to_string(Family family) {
  switch (family) {
    case Family::kFn:
      return "fn";
    case Family::kSymmetric5:
      return "symmetric5";
    case Family::kCustom:
      return "custom";
  }
  return "custom";
}

std::string_view to_string(Branch branch) { return branch == Branch::kPlus ? "+" : "-"; }

Frame parse_frame(std::string_view text) {
  if (text == "applied") return Frame::kApplied;
  if (text == "toggling") return Frame::kToggling;
  throw InvalidArgument("unknown frame '" + std::string(text) + "'");
}

Family parse_family(std::string_view text) {
  if (text == "fn") return Family::kFn;
  if (text == "symmetric5") return Family::kSymmetric5;
  if (text == "custom") return Family::kCustom;
  throw InvalidArgument("unknown family '" + std::string(text) + "'");
}

Branch parse_branch(std::string_view text) {
  if (text == "+" || text == "plus" || text == "upper") return Branch::kPlus;
  if (text == "-" || text == "minus" || text == "lower") return Branch::kMinus;
  throw InvalidArgument("unknown sign/branch '" + std::string(text) + "'");
}

template <Real T>
PhaseSequence<T>::PhaseSequence(std::vector<T> phases, Frame frame, std::string label)
    : phases_(std::move(phases)), frame_(frame), label_(std::move(label)) {
  if (phases_.empty()) throw InvalidArgument("phase sequence must be non-empty");
  for (const T& p : phases_) {
    if (!is_finite(p)) throw InvalidArgument("phase sequence contains a non-finite phase");
  }
}

template <Real T>
T fn_psi(Branch sign) {
  using std::acos;
  T psi = acos(T(-1) / 4);
  return sign == Branch::kPlus ? psi : T(-psi);
}

template <Real T>
PhaseSequence<T> fn_phases(int n, Branch sign) {
  if (n < 0) throw InvalidArgument("nesting depth must be non-negative");
  const T psi = fn_psi<T>(sign);
  std::vector<T> current{T(0)};
  for (int level = 0; level < n; ++level) {
    std::vector<T> next;
    next.reserve(current.size() * 5);
    for (const T& p : current) next.push_back(3 * psi + p);
    for (const T& p : current) next.push_back(psi - p);
    for (const T& p : current) next.push_back(p);
    for (const T& p : current) next.push_back(-psi - p);
    for (const T& p : current) next.push_back(-3 * psi + p);
    current = std::move(next);
  }
  return {std::move(current), Frame::kApplied, "F" + std::to_string(n) + " (psi " + std::string(to_string(sign)) + ")"};
}

template <Real T>
PhaseSequence<T> symmetric5_phases(Branch branch) {
  using std::acos;
  using std::asin;
  using std::cos;
  using std::sqrt;
  const T root = sqrt(sqrt(T(5) / 32));
  const T magnitude = 2 * asin(root);
  const T alpha = branch == Branch::kPlus ? T(-magnitude) : magnitude;
  const T offset = acos(-(1 + 2 * cos(alpha)) / 2);
  const T beta = branch == Branch::kPlus ? T(2 * alpha + offset) : T(2 * alpha - offset);
  const T middle = 2 * beta - 2 * alpha;
  return {{alpha, beta, middle, beta, alpha},
          Frame::kApplied,
          std::string("symmetric5 (") + (branch == Branch::kPlus ? "upper" : "lower") + ")"};
}

template <Real T>
PhaseSequence<T> family_phases(const FamilySpec& spec) {
  switch (spec.family) {
    case Family::kFn:
      return fn_phases<T>(spec.n, spec.sign);
    case Family::kSymmetric5:
      return symmetric5_phases<T>(spec.sign);
    case Family::kCustom:
      break;
  }
  throw InvalidArgument("custom sequences have no generator; supply a phase file");
}

template <Real T>
PhaseSequence<T> to_toggling(const PhaseSequence<T>& seq) {
  require_frame(seq, Frame::kApplied, "to_toggling");
  std::vector<T> out;
  out.reserve(seq.size());
  T shift{0};
  for (size_t j = 0; j < seq.size(); ++j) {
    const T signed_phase = (j % 2 == 0) ? seq[j] : T(-seq[j]);
    out.push_back(signed_phase + shift);
    shift += 2 * signed_phase;
  }
  return {std::move(out), Frame::kToggling, seq.label()};
}

template <Real T>
PhaseSequence<T> from_toggling(const PhaseSequence<T>& seq) {
  require_frame(seq, Frame::kToggling, "from_toggling");
  std::vector<T> out;
  out.reserve(seq.size());
  T shift{0};
  for (size_t j = 0; j < seq.size(); ++j) {
    const T signed_phase = seq[j] - shift;
    out.push_back((j % 2 == 0) ? signed_phase : T(-signed_phase));
    shift += 2 * signed_phase;
  }
  return {std::move(out), Frame::kApplied, seq.label()};
}

template <Real T>
PhaseSequence<T> in_frame(const PhaseSequence<T>& seq, Frame frame) {
  if (seq.frame() == frame) return seq;
  return frame == Frame::kToggling ? to_toggling(seq) : from_toggling(seq);
}

template <Real T>
PhaseSequence<T> nest(const PhaseSequence<T>& outer, const PhaseSequence<T>& inner) {
  const auto outer_t = in_frame(outer, Frame::kToggling);
  const auto inner_t = in_frame(inner, Frame::kToggling);
  std::vector<T> sums;
  sums.reserve(outer_t.size() * inner_t.size());
  for (const T& o : outer_t.phases()) {
    for (const T& i : inner_t.phases()) sums.push_back(o + i);
  }
  PhaseSequence<T> nested(std::move(sums), Frame::kToggling, "nest(" + outer.label() + ", " + inner.label() + ")");
  return from_toggling(nested);
}

template <Real T>
PhaseSequence<T> normalized(const PhaseSequence<T>& seq) {
  std::vector<T> out;
  out.reserve(seq.size());
  for (const T& p : seq.phases()) out.push_back(wrap_to_pi(p));
  return {std::move(out), seq.frame(), seq.label()};
}

template <Real T>
bool is_antisymmetric(const PhaseSequence<T>& seq, double tol) {
  const size_t n = seq.size();
  for (size_t j = 0; j < (n + 1) / 2; ++j) {
    if (!equal_mod_two_pi<T>(seq[j], T(-seq[n - 1 - j]), tol)) return false;
  }
  return true;
}

template <Real T>
bool is_symmetric(const PhaseSequence<T>& seq, double tol) {
  const size_t n = seq.size();
  for (size_t j = 0; j < n / 2; ++j) {
    if (!equal_mod_two_pi<T>(seq[j], seq[n - 1 - j], tol)) return false;
  }
  return true;
}

template <Real T>
Unitary2<T> sequence_propagator(const PhaseSequence<T>& seq, const ErrorModel<T>& err) {
  require_frame(seq, Frame::kApplied, "sequence_propagator");
  const T half_turn = pi<T>();
  Unitary2<T> total;
  for (const T& phase : seq.phases()) total = make_pulse<T>(half_turn, phase, err) * total;
  return total;
}

template <Real T>
Unitary2<T> target_not() {
  return make_rotation<T>(pi<T>(), T(0));
}

#define NESTPULSE_INSTANTIATE(T)                                                 \
  template class PhaseSequence<T>;                                               \
  template T fn_psi<T>(Branch);                                                  \
  template PhaseSequence<T> fn_phases<T>(int, Branch);                           \
  template PhaseSequence<T> symmetric5_phases<T>(Branch);                        \
  template PhaseSequence<T> family_phases<T>(const FamilySpec&);                 \
  template PhaseSequence<T> to_toggling<T>(const PhaseSequence<T>&);             \
  template PhaseSequence<T> from_toggling<T>(const PhaseSequence<T>&);           \
  template PhaseSequence<T> in_frame<T>(const PhaseSequence<T>&, Frame);         \
  template PhaseSequence<T> nest<T>(const PhaseSequence<T>&, const PhaseSequence<T>&); \
  template PhaseSequence<T> normalized<T>(const PhaseSequence<T>&);              \
  template bool is_antisymmetric<T>(const PhaseSequence<T>&, double);            \
  template bool is_symmetric<T>(const PhaseSequence<T>&, double);                \
  template Unitary2<T> sequence_propagator<T>(const PhaseSequence<T>&, const ErrorModel<T>&); \
  template Unitary2<T> target_not<T>();

NESTPULSE_INSTANTIATE(double)
NESTPULSE_INSTANTIATE(HighPrecision)

#undef NESTPULSE_INSTANTIATE

}  // namespace nestpulse
