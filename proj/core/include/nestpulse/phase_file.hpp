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

#ifndef NESTPULSE_PHASE_FILE_HPP
#define NESTPULSE_PHASE_FILE_HPP

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "nestpulse/scalar.hpp"
#include "nestpulse/sequences.hpp"

namespace nestpulse {

// Phase file layout:
//
//   {
//     "label": "F1 (psi +)",
//     "frame": "applied" | "toggling",
//     "phases_radians": [5.4704297458109258, ...],
//     "family": {"name": "fn", "n": 1, "sign": "+"},    (optional)
//     "config": {...}                                  (optional, ignored on read)
//   }
//
// When "family" is present the reader regenerates the phases at the working
// precision, after checking them against the stored doubles.

struct PhaseDocument {
  std::string label;
  Frame frame{Frame::kApplied};
  std::vector<double> phases;
  std::optional<FamilySpec> family;
  nlohmann::ordered_json config = nlohmann::ordered_json::object();
};

PhaseDocument parse_phase_document(const std::string& text);
PhaseDocument read_phase_document(const std::filesystem::path& path);

/// Deterministic rendering; phases carry 17 significant digits.
std::string render_phase_document(const PhaseDocument& doc);
void write_phase_document(const std::filesystem::path& path, const PhaseDocument& doc);

/// The document's sequence at working precision `T`.
template <Real T>
PhaseSequence<T> materialize(const PhaseDocument& doc);

/// Snapshot of a sequence for writing.
template <Real T>
PhaseDocument make_document(const PhaseSequence<T>& seq, std::optional<FamilySpec> family = std::nullopt);

}  // namespace nestpulse

#endif  // NESTPULSE_PHASE_FILE_HPP
