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

#ifndef NESTPULSE_TOOLS_CHECKS_HPP
#define NESTPULSE_TOOLS_CHECKS_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace nestpulse::cli {

enum class CheckStatus { kPass, kFail, kSkip };

struct CheckResult {
  std::string name;
  CheckStatus status{CheckStatus::kPass};
  std::string detail;
};

struct CheckOptions {
  int precision{60};
  double psi_perturbation{0};
  std::vector<int> order_depths{1, 2};
  std::uint64_t seed{20130924};
};

/// Cross-module invariant suite behind `nestpulse check`.
std::vector<CheckResult> run_checks(const CheckOptions& options);

const char* to_string(CheckStatus status);

}  // namespace nestpulse::cli

#endif  // NESTPULSE_TOOLS_CHECKS_HPP
