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

#ifndef NESTPULSE_ERRORS_HPP
#define NESTPULSE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace nestpulse {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Non-finite numbers, empty lists, wrong frame tags, malformed files.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// Logarithm requested for a rotation by exactly pi, where the sign of the
/// generator is undetermined.
class AmbiguousLogarithm : public Error {
 public:
  using Error::Error;
};

/// Two independent construction routes disagree beyond tolerance.
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

/// The finite-difference stencil is too ill-conditioned at this precision.
class ConditioningError : public Error {
 public:
  ConditioningError(const std::string& what, double condition)
      : Error(what), condition_(condition) {}
  double condition() const { return condition_; }

 private:
  double condition_;
};

/// Working precision cannot resolve the infidelity scaling of a sequence.
class PrecisionTooLow : public Error {
 public:
  using Error::Error;
};

}  // namespace nestpulse

#endif  // NESTPULSE_ERRORS_HPP
