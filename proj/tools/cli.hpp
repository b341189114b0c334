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

#ifndef NESTPULSE_TOOLS_CLI_HPP
#define NESTPULSE_TOOLS_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace nestpulse::cli {

enum ExitCode : int {
  kSuccess = 0,
  kUsageError = 1,
  kGateFailure = 2,
  kIoError = 3,
};

/// Runs one command line (without the program name). All console output goes
/// to `out`; diagnostics and warnings go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace nestpulse::cli

#endif  // NESTPULSE_TOOLS_CLI_HPP
