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

#include "nestpulse/scalar.hpp"

#include <algorithm>
#include <cstdio>
#include <ios>
#include <string>

namespace nestpulse {

template <>
std::string to_decimal<double>(const double& x, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", std::clamp(digits, 17, 40), x);
  return buf;
}

template <>
std::string to_decimal<HighPrecision>(const HighPrecision& x, int digits) {
  return x.str(static_cast<std::streamsize>(std::max(digits, 17)), std::ios_base::fmtflags{});
}

template <>
double from_decimal<double>(const std::string& text) {
  return std::stod(text);
}

template <>
HighPrecision from_decimal<HighPrecision>(const std::string& text) {
  return HighPrecision(text);
}

}  // namespace nestpulse
