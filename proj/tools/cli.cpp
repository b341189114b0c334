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

#include "cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "checks.hpp"
#include "nestpulse/error_analysis.hpp"
#include "nestpulse/errors.hpp"
#include "nestpulse/phase_file.hpp"
#include "nestpulse/scalar.hpp"
#include "nestpulse/sequences.hpp"

namespace nestpulse::cli {
namespace {

using nlohmann::ordered_json;

constexpr const char* kVersion = "0.1.0";

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Runs `fn` with doubles up to machine precision, otherwise with
// HighPrecision at the requested digit count.
template <class Fn>
decltype(auto) at_precision(int digits, Fn&& fn) {
  if (digits <= kDoubleDigits) return fn.template operator()<double>();
  PrecisionScope scope(digits);
  return fn.template operator()<HighPrecision>();
}

ordered_json base_config(const std::string& command) {
  return {{"tool", "nestpulse"}, {"version", kVersion}, {"command", command}};
}

std::string fmt_fixed(double x, int decimals) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", decimals, x);
  return buf;
}

std::string fmt_general(double x, int digits = 6) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, x);
  return buf;
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  out << text;
  if (!out) throw IoError("write to '" + path + "' failed");
}

PhaseDocument load_document(const std::string& path) {
  try {
    return read_phase_document(path);
  } catch (const std::ios_base::failure& e) {
    throw IoError(e.what());
  } catch (const InvalidArgument& e) {
    throw IoError(path + ": " + e.what());
  }
}

template <Real T>
PhaseSequence<T> materialize_or_io(const PhaseDocument& doc, const std::string& path) {
  try {
    return materialize<T>(doc);
  } catch (const InvalidArgument& e) {
    throw IoError(path + ": " + e.what());
  }
}

struct FamilyOptions {
  std::string family;
  int n{1};
  std::string sign{"+"};
  std::string branch{"upper"};

  void attach(CLI::App* cmd, bool required) {
    auto* opt = cmd->add_option("--family", family, "fn | symmetric5");
    if (required) opt->required();
    cmd->add_option("--n", n, "nesting depth for the fn family")->capture_default_str();
    cmd->add_option("--sign", sign, "branch of psi for fn: + or -")->capture_default_str();
    cmd->add_option("--branch", branch, "symmetric5 sign pair: upper or lower")->capture_default_str();
  }

  FamilySpec resolve() const {
    FamilySpec spec;
    try {
      spec.family = parse_family(family);
      if (spec.family == Family::kCustom) throw UsageError("--family custom has no generator; use a phase file");
      if (spec.family == Family::kFn) {
        if (n < 0) throw UsageError("--n must be non-negative");
        spec.n = n;
        spec.sign = parse_branch(sign);
      } else {
        spec.n = 1;
        spec.sign = parse_branch(branch);
      }
    } catch (const InvalidArgument& e) {
      throw UsageError(e.what());
    }
    return spec;
  }

  void echo(ordered_json& config, const FamilySpec& spec) const {
    config["family"] = std::string(to_string(spec.family));
    if (spec.family == Family::kFn) {
      config["n"] = spec.n;
      config["sign"] = std::string(to_string(spec.sign));
    } else {
      config["branch"] = spec.sign == Branch::kPlus ? "upper" : "lower";
    }
  }
};

// ---------------------------------------------------------------- sequence

struct SequenceCommand {
  FamilyOptions family;
  std::string frame{"applied"};
  std::string out_path;
  bool degrees{false};

  int run(std::ostream& out) const {
    const FamilySpec spec = family.resolve();
    Frame target_frame;
    try {
      target_frame = parse_frame(frame);
    } catch (const InvalidArgument& e) {
      throw UsageError(e.what());
    }
    ordered_json config = base_config("sequence");
    family.echo(config, spec);
    config["frame"] = std::string(to_string(target_frame));
    if (!out_path.empty()) config["output"] = out_path;

    const auto seq = in_frame(family_phases<double>(spec), target_frame);
    PhaseDocument doc = make_document(seq, spec);
    doc.config = config;
    const std::string text = render_phase_document(doc);
    if (out_path.empty()) {
      out << text;
      return kSuccess;
    }
    write_text(out_path, text);
    out << "wrote " << seq.size() << " phases (" << to_string(target_frame) << " frame) of " << seq.label()
        << " to " << out_path << "\n";
    for (size_t i = 0; i < seq.size() && i < 25; ++i) {
      const double value = degrees ? seq[i] * 180.0 / M_PI : seq[i];
      out << "  [" << i + 1 << "] " << fmt_fixed(value, degrees ? 6 : 10) << (degrees ? " deg" : " rad") << "\n";
    }
    if (seq.size() > 25) out << "  ... " << seq.size() - 25 << " more\n";
    return kSuccess;
  }
};

// ---------------------------------------------------------------- toggling

struct TogglingCommand {
  std::string in_path;
  std::string out_path;
  std::string to;

  int run(std::ostream& out) const {
    const PhaseDocument doc = load_document(in_path);
    Frame target = doc.frame == Frame::kApplied ? Frame::kToggling : Frame::kApplied;
    if (!to.empty()) {
      try {
        target = parse_frame(to);
      } catch (const InvalidArgument& e) {
        throw UsageError(e.what());
      }
    }
    const auto seq = in_frame(materialize_or_io<double>(doc, in_path), target);
    PhaseDocument converted = make_document(seq, doc.family);
    ordered_json config = base_config("toggling");
    config["input"] = in_path;
    config["from"] = std::string(to_string(doc.frame));
    config["to"] = std::string(to_string(target));
    if (!out_path.empty()) config["output"] = out_path;
    converted.config = config;
    const std::string text = render_phase_document(converted);
    if (out_path.empty()) {
      out << text;
    } else {
      write_text(out_path, text);
      out << "wrote " << seq.size() << " " << to_string(target) << "-frame phases to " << out_path << "\n";
    }
    return kSuccess;
  }
};

// ---------------------------------------------------------------- sweep

struct SweepCommand {
  std::string in_path;
  double eps_min{-1};
  double eps_max{1};
  int steps{401};
  double f{0};
  int precision{kDoubleDigits};
  std::string out_path;

  int run(std::ostream& out) const {
    if (steps < 2) throw UsageError("--steps must be at least 2");
    if (!std::isfinite(eps_min) || !std::isfinite(eps_max) || !std::isfinite(f)) {
      throw UsageError("sweep bounds must be finite");
    }
    if (precision < 1) throw UsageError("--precision must be positive");
    const PhaseDocument doc = load_document(in_path);

    ordered_json config = base_config("sweep");
    config["input"] = in_path;
    config["eps_min"] = eps_min;
    config["eps_max"] = eps_max;
    config["steps"] = steps;
    config["f"] = f;
    config["precision"] = precision;
    if (!out_path.empty()) config["output"] = out_path;

    std::string csv = at_precision(precision, [&]<Real T>() {
      const auto seq = materialize_or_io<T>(doc, in_path);
      std::vector<T> eps_grid;
      const T lo(eps_min);
      const T span = T(eps_max) - lo;
      for (int i = 0; i < steps; ++i) eps_grid.push_back(lo + span * T(i) / T(steps - 1));
      const std::vector<T> f_grid{T(f)};
      const auto result = fidelity_sweep<T>(seq, eps_grid, f_grid);
      const int digits = std::max(17, working_digits<T>() + 2);
      std::string text = "# nestpulse sweep of " + result.sequence_label + "\n";
      text += "# config: " + config.dump() + "\n";
      text += "epsilon,f,fidelity,infidelity\n";
      for (const auto& row : result.rows) {
        text += to_decimal(row.epsilon, digits) + "," + to_decimal(row.f, digits) + "," +
                to_decimal(row.fidelity, digits) + "," + to_decimal(row.infidelity, digits) + "\n";
      }
      return text;
    });
    if (out_path.empty()) {
      out << csv;
    } else {
      write_text(out_path, csv);
      out << "wrote " << steps << " rows to " << out_path << "\n";
    }
    return kSuccess;
  }
};

// ---------------------------------------------------------------- order

struct OrderCommand {
  std::string in_path;
  FamilyOptions family;
  std::string error_kind{"amplitude"};
  int precision{kDoubleDigits};
  std::string json_path;

  int run(std::ostream& out, std::ostream& err) const {
    if (in_path.empty() == family.family.empty()) {
      throw UsageError("order needs exactly one of --in or --family");
    }
    if (precision < 1) throw UsageError("--precision must be positive");
    ErrorKind kind;
    try {
      kind = parse_error_kind(error_kind);
    } catch (const InvalidArgument& e) {
      throw UsageError(e.what());
    }

    ordered_json config = base_config("order");
    std::optional<PhaseDocument> doc;
    std::optional<FamilySpec> spec;
    if (!in_path.empty()) {
      doc = load_document(in_path);
      config["input"] = in_path;
      spec = doc->family;
    } else {
      spec = family.resolve();
      family.echo(config, *spec);
    }
    config["error"] = std::string(to_string(kind));
    config["precision"] = precision;
    if (!json_path.empty()) config["json"] = json_path;

    if (spec && spec->family == Family::kFn) {
      const int recommended = spec->n >= 3 ? 60 : spec->n == 2 ? 30 : 0;
      if (precision < recommended) {
        err << "warning: F" << spec->n << " needs about " << recommended << " digits for a clean fit; running at "
            << precision << "\n";
      }
    }
    if (doc && !doc->family && precision > 17) {
      err << "warning: phases come from doubles; they limit the attainable order at " << precision << " digits\n";
    }

    std::string label;
    size_t pulses = 0;
    OrderEstimate est;
    try {
      est = at_precision(precision, [&]<Real T>() {
        const auto seq = doc ? materialize_or_io<T>(*doc, in_path) : family_phases<T>(*spec);
        label = seq.label();
        pulses = seq.size();
        return infidelity_order(seq, kind);
      });
    } catch (const PrecisionTooLow& e) {
      err << "error: " << e.what() << "\n";
      return kGateFailure;
    } catch (const InvalidArgument& e) {
      err << "error: " << e.what() << "\n";
      return kGateFailure;
    }

    ordered_json report;
    report["exponent"] = est.exponent;
    report["rounded_order"] = est.rounded_order ? ordered_json(*est.rounded_order) : ordered_json(nullptr);
    report["coefficient"] = est.coefficient;
    report["window"] = {est.eps_min, est.eps_max};
    report["residual"] = est.residual;
    report["precision"] = est.precision;
    report["points"] = est.points;
    report["sequence"] = label;
    report["pulses"] = pulses;
    report["config"] = config;

    if (json_path == "-") {
      out << report.dump(2) << "\n";
    } else {
      out << "# config: " << config.dump() << "\n";
      out << "sequence       " << label << " (" << pulses << " pulses)\n";
      out << "error          " << to_string(kind) << "\n";
      out << "exponent       " << fmt_fixed(est.exponent, 4) << "\n";
      out << "rounded order  " << (est.rounded_order ? std::to_string(*est.rounded_order) : "n/a") << "\n";
      out << "coefficient    " << fmt_general(est.coefficient) << "\n";
      out << "window         [" << fmt_general(est.eps_min) << ", " << fmt_general(est.eps_max) << "] ("
          << est.points << " points)\n";
      out << "residual       " << fmt_general(est.residual, 3) << " (gate < 0.05: "
          << (est.gate_passed() ? "pass" : "FAIL") << ")\n";
      out << "precision      " << est.precision << " digits\n";
      if (!json_path.empty()) write_text(json_path, report.dump(2) + "\n");
    }
    return est.gate_passed() ? kSuccess : kGateFailure;
  }
};

// ---------------------------------------------------------------- check

struct CheckCommand {
  CheckOptions options;

  int run(std::ostream& out) const {
    ordered_json config = base_config("check");
    config["precision"] = options.precision;
    config["psi_perturbation"] = options.psi_perturbation;
    config["orders"] = options.order_depths;
    config["seed"] = options.seed;
    out << "# config: " << config.dump() << "\n";
    const auto results = run_checks(options);
    int failures = 0;
    for (const auto& r : results) {
      out << to_string(r.status) << "  " << r.name << ": " << r.detail << "\n";
      if (r.status == CheckStatus::kFail) ++failures;
    }
    out << (failures == 0 ? "all checks passed" : std::to_string(failures) + " check(s) failed") << "\n";
    return failures == 0 ? kSuccess : kGateFailure;
  }
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Nested composite pi pulses: generation, frame transforms and error analysis", "nestpulse"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kVersion);

  SequenceCommand sequence;
  auto* seq_cmd = app.add_subcommand("sequence", "write the phases of a named family");
  sequence.family.attach(seq_cmd, true);
  seq_cmd->add_option("--frame", sequence.frame, "applied | toggling")->capture_default_str();
  seq_cmd->add_option("--out", sequence.out_path, "phase file to write (stdout if omitted)");
  seq_cmd->add_flag("--degrees", sequence.degrees, "show console phases in degrees");

  TogglingCommand toggling;
  auto* tog_cmd = app.add_subcommand("toggling", "convert a phase file between applied and toggling frames");
  tog_cmd->add_option("--in", toggling.in_path, "input phase file")->required();
  tog_cmd->add_option("--out", toggling.out_path, "output phase file (stdout if omitted)");
  tog_cmd->add_option("--to", toggling.to, "target frame (default: the other one)");

  SweepCommand sweep;
  auto* sweep_cmd = app.add_subcommand("sweep", "tabulate fidelity against pi_0 over an amplitude-error grid");
  sweep_cmd->add_option("--in", sweep.in_path, "input phase file")->required();
  sweep_cmd->add_option("--eps-min", sweep.eps_min)->capture_default_str();
  sweep_cmd->add_option("--eps-max", sweep.eps_max)->capture_default_str();
  sweep_cmd->add_option("--steps", sweep.steps)->capture_default_str();
  sweep_cmd->add_option("--f", sweep.f, "off-resonance fraction")->capture_default_str();
  sweep_cmd->add_option("--precision", sweep.precision, "significant digits")->capture_default_str();
  sweep_cmd->add_option("--out", sweep.out_path, "CSV file (stdout if omitted)");

  OrderCommand order;
  auto* order_cmd = app.add_subcommand("order", "fit the infidelity scaling exponent");
  order_cmd->add_option("--in", order.in_path, "input phase file");
  order.family.attach(order_cmd, false);
  order_cmd->add_option("--error", order.error_kind, "amplitude | offresonance")->capture_default_str();
  order_cmd->add_option("--precision", order.precision, "significant digits")->capture_default_str();
  order_cmd->add_option("--json", order.json_path, "write the JSON report here ('-' for stdout only)");

  CheckCommand check;
  auto* check_cmd = app.add_subcommand("check", "run the invariant suite");
  check_cmd->add_option("--precision", check.options.precision, "digits for order checks")->capture_default_str();
  check_cmd->add_option("--psi-perturbation", check.options.psi_perturbation, "shift psi (fault injection)");
  check_cmd->add_option("--orders", check.options.order_depths, "F_n depths to order-check")
      ->delimiter(',')
      ->capture_default_str();
  check_cmd->add_option("--seed", check.options.seed)->capture_default_str();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kUsageError;
  }

  try {
    if (*seq_cmd) return sequence.run(out);
    if (*tog_cmd) return toggling.run(out);
    if (*sweep_cmd) return sweep.run(out);
    if (*order_cmd) return order.run(out, err);
    if (*check_cmd) return check.run(out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsageError;
  } catch (const IoError& e) {
    err << "i/o error: " << e.what() << "\n";
    return kIoError;
  } catch (const ConsistencyError& e) {
    err << "numerical failure: " << e.what() << "\n";
    return kGateFailure;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  }
  return kUsageError;
}

}  // namespace nestpulse::cli
