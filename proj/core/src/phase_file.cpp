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

#include "nestpulse/phase_file.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "nestpulse/errors.hpp"

namespace nestpulse {
namespace {

using nlohmann::ordered_json;

constexpr double kRecipeTolerance = 1e-9;

FamilySpec parse_family_spec(const ordered_json& j) {
  if (!j.is_object()) throw InvalidArgument("phase file: 'family' must be an object");
  FamilySpec spec;
  spec.family = parse_family(j.at("name").get<std::string>());
  if (j.contains("n")) spec.n = j.at("n").get<int>();
  if (j.contains("sign")) spec.sign = parse_branch(j.at("sign").get<std::string>());
  return spec;
}

std::string indent(const std::string& block, const std::string& pad) {
  std::string out;
  std::istringstream lines(block);
  std::string line;
  bool first = true;
  while (std::getline(lines, line)) {
    if (!first) out += "\n" + pad;
    out += line;
    first = false;
  }
  return out;
}

}  // namespace

PhaseDocument parse_phase_document(const std::string& text) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const ordered_json::parse_error& e) {
    throw InvalidArgument(std::string("phase file is not valid JSON: ") + e.what());
  }
  if (!j.is_object()) throw InvalidArgument("phase file must hold a JSON object");
  PhaseDocument doc;
  try {
    doc.label = j.value("label", std::string{});
    doc.frame = parse_frame(j.at("frame").get<std::string>());
    const auto& phases = j.at("phases_radians");
    if (!phases.is_array() || phases.empty()) {
      throw InvalidArgument("phase file: 'phases_radians' must be a non-empty array");
    }
    for (const auto& p : phases) {
      if (!p.is_number()) throw InvalidArgument("phase file: phases must be numbers");
      const double value = p.get<double>();
      if (!std::isfinite(value)) throw InvalidArgument("phase file: phases must be finite");
      doc.phases.push_back(value);
    }
    if (j.contains("family")) doc.family = parse_family_spec(j.at("family"));
    if (j.contains("config")) doc.config = j.at("config");
  } catch (const ordered_json::exception& e) {
    throw InvalidArgument(std::string("malformed phase file: ") + e.what());
  }
  return doc;
}

PhaseDocument read_phase_document(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::ios_base::failure("cannot open phase file " + path.string());
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_phase_document(buffer.str());
}

std::string render_phase_document(const PhaseDocument& doc) {
  std::string out = "{\n";
  out += "  \"label\": " + ordered_json(doc.label).dump() + ",\n";
  out += "  \"frame\": \"" + std::string(to_string(doc.frame)) + "\",\n";
  out += "  \"phases_radians\": [";
  for (size_t i = 0; i < doc.phases.size(); ++i) {
    out += (i % 4 == 0) ? "\n    " : " ";
    out += to_decimal(doc.phases[i], 17);
    if (i + 1 < doc.phases.size()) out += ",";
  }
  out += "\n  ]";
  if (doc.family) {
    ordered_json family = {{"name", std::string(to_string(doc.family->family))},
                           {"n", doc.family->n},
                           {"sign", std::string(to_string(doc.family->sign))}};
    out += ",\n  \"family\": " + family.dump();
  }
  if (!doc.config.empty()) out += ",\n  \"config\": " + indent(doc.config.dump(2), "  ");
  out += "\n}\n";
  return out;
}

void write_phase_document(const std::filesystem::path& path, const PhaseDocument& doc) {
  std::ofstream out(path);
  if (!out) throw std::ios_base::failure("cannot write phase file " + path.string());
  out << render_phase_document(doc);
  if (!out) throw std::ios_base::failure("write failed for " + path.string());
}

template <Real T>
PhaseSequence<T> materialize(const PhaseDocument& doc) {
  if (!doc.family || doc.family->family == Family::kCustom) {
    std::vector<T> phases(doc.phases.begin(), doc.phases.end());
    return {std::move(phases), doc.frame, doc.label};
  }
  PhaseSequence<T> generated = in_frame(family_phases<T>(*doc.family), doc.frame);
  if (generated.size() != doc.phases.size()) {
    throw InvalidArgument("phase file: stored phases do not match the declared family (length " +
                          std::to_string(doc.phases.size()) + " vs " + std::to_string(generated.size()) + ")");
  }
  for (size_t i = 0; i < generated.size(); ++i) {
    const double stored = doc.phases[i];
    if (std::abs(to_double(generated[i]) - stored) > kRecipeTolerance * std::max(1.0, std::abs(stored))) {
      throw InvalidArgument("phase file: phase " + std::to_string(i) + " does not match the declared family");
    }
  }
  return generated.with_label(doc.label);
}

template <Real T>
PhaseDocument make_document(const PhaseSequence<T>& seq, std::optional<FamilySpec> family) {
  PhaseDocument doc;
  doc.label = seq.label();
  doc.frame = seq.frame();
  for (const T& p : seq.phases()) doc.phases.push_back(to_double(p));
  doc.family = family;
  return doc;
}

template PhaseSequence<double> materialize<double>(const PhaseDocument&);
template PhaseSequence<HighPrecision> materialize<HighPrecision>(const PhaseDocument&);
template PhaseDocument make_document<double>(const PhaseSequence<double>&, std::optional<FamilySpec>);
template PhaseDocument make_document<HighPrecision>(const PhaseSequence<HighPrecision>&, std::optional<FamilySpec>);

}  // namespace nestpulse
