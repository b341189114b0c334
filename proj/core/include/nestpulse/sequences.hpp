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

#ifndef NESTPULSE_SEQUENCES_HPP
#define NESTPULSE_SEQUENCES_HPP

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "nestpulse/scalar.hpp"
#include "nestpulse/su2.hpp"

namespace nestpulse {

/// Which frame the phases of a sequence are expressed in. Applied phases are
/// the ones programmed into the hardware; toggling-frame phases are the axes
/// the error rotations acquire once the ideal pi pulses are commuted out.
enum class Frame { kApplied, kToggling };

enum class Family { kFn, kSymmetric5, kCustom };

/// Sign of psi for the F_n family; for the symmetric five-pulse sequence
/// kPlus selects the upper signs of both alpha and beta.
enum class Branch { kPlus, kMinus };

struct FamilySpec {
  Family family{Family::kFn};
  int n{1};
  Branch sign{Branch::kPlus};
};

std::string_view to_string(Frame frame);
std::string_view to_string(Family family);
std::string_view to_string(Branch branch);
Frame parse_frame(std::string_view text);
Family parse_family(std::string_view text);
Branch parse_branch(std::string_view text);

/// Ordered phases (radians, first applied first) of a train of pi pulses.
/// Phases are kept as exact unreduced values; see normalized().
template <Real T>
class PhaseSequence {
 public:
  PhaseSequence(std::vector<T> phases, Frame frame, std::string label = {});

  std::span<const T> phases() const { return phases_; }
  const T& operator[](size_t i) const { return phases_[i]; }
  size_t size() const { return phases_.size(); }
  Frame frame() const { return frame_; }
  const std::string& label() const { return label_; }

  PhaseSequence with_label(std::string label) const { return {phases_, frame_, std::move(label)}; }

 private:
  std::vector<T> phases_;
  Frame frame_;
  std::string label_;
};

/// psi = +-arccos(-1/4).
template <Real T>
T fn_psi(Branch sign);

/// F_n phases: (3psi + p, psi - p, p, -psi - p, -3psi + p) applied blockwise
/// to p = F_{n-1}, starting from F_0 = (0). Length 5^n.
template <Real T>
PhaseSequence<T> fn_phases(int n, Branch sign = Branch::kPlus);

/// (alpha, beta, 2 beta - 2 alpha, beta, alpha) with
/// alpha = -+2 arcsin((5/32)^(1/4)) and beta = 2 alpha +- arccos(-(1 + 2 cos alpha) / 2).
template <Real T>
PhaseSequence<T> symmetric5_phases(Branch branch = Branch::kPlus);

/// Generates a named family member. Custom families have no generator.
template <Real T>
PhaseSequence<T> family_phases(const FamilySpec& spec);

/// phi'_j = (-1)^(j+1) phi_j + sum_{k<j} (-1)^(k+1) 2 phi_k (1-based j).
template <Real T>
PhaseSequence<T> to_toggling(const PhaseSequence<T>& seq);

template <Real T>
PhaseSequence<T> from_toggling(const PhaseSequence<T>& seq);

/// Converts to the requested frame, passing through if already there.
template <Real T>
PhaseSequence<T> in_frame(const PhaseSequence<T>& seq, Frame frame);

/// Applies the outer pattern to the inner sequence in the toggling frame:
/// toggling phases outer'_i + inner'_j, outer index major. Result is applied.
template <Real T>
PhaseSequence<T> nest(const PhaseSequence<T>& outer, const PhaseSequence<T>& inner);

/// Reduces every phase into (-pi, pi]. Not used internally.
template <Real T>
PhaseSequence<T> normalized(const PhaseSequence<T>& seq);

/// phi_{N+1-j} = -phi_j modulo 2 pi.
template <Real T>
bool is_antisymmetric(const PhaseSequence<T>& seq, double tol = 1e-9);

/// phi_{N+1-j} = phi_j modulo 2 pi.
template <Real T>
bool is_symmetric(const PhaseSequence<T>& seq, double tol = 1e-9);

/// Product of error-prone pi pulses at the applied phases.
template <Real T>
Unitary2<T> sequence_propagator(const PhaseSequence<T>& seq, const ErrorModel<T>& err);

/// The pi_0 pulse every antisymmetric sequence implements.
template <Real T>
Unitary2<T> target_not();

}  // namespace nestpulse

#endif  // NESTPULSE_SEQUENCES_HPP
