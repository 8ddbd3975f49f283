// Copyright 2026 The qlc Authors
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

#include "qlc/config.hpp"

#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>

#include "qlc/errors.hpp"

namespace qlc {

namespace {

struct KeyValue {
  std::string value;
  int line = 0;
};

std::string trim(const std::string& s) {
  std::size_t begin = s.find_first_not_of(" \t\r");
  if (begin == std::string::npos) return "";
  std::size_t end = s.find_last_not_of(" \t\r");
  return s.substr(begin, end - begin + 1);
}

std::vector<std::string> split_list(const std::string& value) {
  std::vector<std::string> items;
  std::string current;
  std::istringstream in(value);
  while (std::getline(in, current, ',')) {
    items.push_back(trim(current));
  }
  return items;
}

// Everything below reports failures as "<source> line <n>: ..." so a bad
// experiment file pinpoints itself.
class ConfigReader {
 public:
  ConfigReader(std::istream& in, std::string source) : source_(std::move(source)) {
    std::string line;
    int line_number = 0;
    while (std::getline(in, line)) {
      ++line_number;
      const std::size_t comment = line.find('#');
      if (comment != std::string::npos) line.resize(comment);
      const std::string content = trim(line);
      if (content.empty()) continue;
      const std::size_t eq = content.find('=');
      if (eq == std::string::npos) {
        fail(line_number, "expected `key = value`");
      }
      const std::string key = trim(content.substr(0, eq));
      const std::string value = trim(content.substr(eq + 1));
      if (key.empty()) fail(line_number, "missing key before '='");
      if (value.empty()) fail(line_number, "missing value for key '" + key + "'");
      if (entries_.count(key)) {
        fail(line_number, "duplicate key '" + key + "' (first on line " +
                              std::to_string(entries_[key].line) + ")");
      }
      if (!kKnownKeys.count(key)) {
        fail(line_number, "unknown key '" + key + "'");
      }
      entries_[key] = KeyValue{value, line_number};
    }
  }

  bool has(const std::string& key) const { return entries_.count(key) > 0; }

  const KeyValue& require(const std::string& key) const {
    auto it = entries_.find(key);
    if (it == entries_.end()) {
      throw ValidationError(source_ + ": missing required key '" + key + "'");
    }
    return it->second;
  }

  double require_double(const std::string& key) const {
    const KeyValue& kv = require(key);
    return parse_double(kv.value, kv.line, key);
  }

  int require_int(const std::string& key) const {
    const KeyValue& kv = require(key);
    char* end = nullptr;
    const long long value = std::strtoll(kv.value.c_str(), &end, 10);
    if (end != kv.value.c_str() + kv.value.size()) {
      fail(kv.line, "invalid integer '" + kv.value + "' for key '" + key + "'");
    }
    if (value < INT32_MIN || value > INT32_MAX) {
      fail(kv.line, "value for key '" + key + "' out of range");
    }
    return static_cast<int>(value);
  }

  std::vector<double> require_double_list(const std::string& key) const {
    const KeyValue& kv = require(key);
    std::vector<double> values;
    for (const std::string& item : split_list(kv.value)) {
      values.push_back(parse_double(item, kv.line, key));
    }
    if (values.empty()) fail(kv.line, "empty list for key '" + key + "'");
    return values;
  }

  double parse_double(const std::string& token, int line,
                      const std::string& key) const {
    char* end = nullptr;
    const double value = std::strtod(token.c_str(), &end);
    if (token.empty() || end != token.c_str() + token.size() ||
        !std::isfinite(value)) {
      fail(line, "invalid number '" + token + "' for key '" + key + "'");
    }
    return value;
  }

  [[noreturn]] void fail(int line, const std::string& message) const {
    throw ValidationError(source_ + " line " + std::to_string(line) + ": " +
                          message);
  }

  const std::string& source() const { return source_; }

 private:
  static const std::map<std::string, bool> kKnownKeys;
  std::string source_;
  std::map<std::string, KeyValue> entries_;
};

const std::map<std::string, bool> ConfigReader::kKnownKeys = {
    {"mode", true},    {"model", true},      {"controls", true},
    {"depth", true},   {"dt", true},         {"weights", true},
    {"initial", true}, {"gains", true},      {"alpha_init", true},
    {"seed", true},
};

FeedbackMode parse_mode(const ConfigReader& reader) {
  const KeyValue& kv = reader.require("mode");
  if (kv.value == "falqon") return FeedbackMode::kFalqon;
  if (kv.value == "weighted_full") return FeedbackMode::kWeightedFull;
  if (kv.value == "weighted_pth_only") return FeedbackMode::kWeightedPthOnly;
  reader.fail(kv.line, "unknown mode '" + kv.value +
                           "' (expected falqon, weighted_full, or "
                           "weighted_pth_only)");
}

struct ModelSpec {
  enum class Kind { kPreset, kFile, kRandom } kind;
  std::string name;      // preset name or file path
  int n_qubits = 0;      // random
  int n_terms = 0;       // random
};

ModelSpec parse_model_spec(const std::string& spec) {
  ModelSpec out{ModelSpec::Kind::kPreset, "", 0, 0};
  if (spec.rfind("preset:", 0) == 0) {
    out.kind = ModelSpec::Kind::kPreset;
    out.name = spec.substr(7);
    if (out.name.empty()) throw ValidationError("empty preset name in model spec");
    return out;
  }
  if (spec.rfind("file:", 0) == 0) {
    out.kind = ModelSpec::Kind::kFile;
    out.name = spec.substr(5);
    if (out.name.empty()) throw ValidationError("empty file path in model spec");
    return out;
  }
  if (spec.rfind("random:", 0) == 0) {
    out.kind = ModelSpec::Kind::kRandom;
    const std::string rest = spec.substr(7);
    const std::size_t colon = rest.find(':');
    if (colon == std::string::npos) {
      throw ValidationError("random model spec must be random:<qubits>:<terms>");
    }
    char* end = nullptr;
    const std::string qubits_str = rest.substr(0, colon);
    const std::string terms_str = rest.substr(colon + 1);
    out.n_qubits = static_cast<int>(std::strtol(qubits_str.c_str(), &end, 10));
    if (qubits_str.empty() || end != qubits_str.c_str() + qubits_str.size()) {
      throw ValidationError("invalid qubit count in random model spec");
    }
    out.n_terms = static_cast<int>(std::strtol(terms_str.c_str(), &end, 10));
    if (terms_str.empty() || end != terms_str.c_str() + terms_str.size()) {
      throw ValidationError("invalid term count in random model spec");
    }
    return out;
  }
  throw ValidationError("model spec '" + spec +
                        "' must start with preset:, file:, or random:");
}

PauliSum load_model_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open model file '" + path + "'");
  try {
    return PauliSum::parse_text(in);
  } catch (const ValidationError& e) {
    throw ValidationError("model file '" + path + "' " + e.what());
  }
}

std::vector<PauliSum> load_controls_file(const std::string& path, int n_qubits) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open controls file '" + path + "'");
  // Blocks of PauliSum text separated by lines containing only "--".
  std::vector<PauliSum> controls;
  std::string block;
  std::string line;
  auto flush = [&] {
    if (trim(block).empty()) {
      throw ValidationError("controls file '" + path +
                            "': empty control block");
    }
    try {
      controls.push_back(PauliSum::parse_text(block));
    } catch (const ValidationError& e) {
      throw ValidationError("controls file '" + path + "' block " +
                            std::to_string(controls.size() + 1) + ": " +
                            e.what());
    }
    block.clear();
  };
  while (std::getline(in, line)) {
    if (trim(line) == "--") {
      flush();
    } else {
      block += line;
      block += '\n';
    }
  }
  flush();
  for (const PauliSum& control : controls) {
    if (control.n_qubits() != n_qubits) {
      throw ValidationError("controls file '" + path + "': control has " +
                            std::to_string(control.n_qubits()) +
                            " qubits, model has " + std::to_string(n_qubits));
    }
  }
  return controls;
}

}  // namespace

PauliSum resolve_model(const std::string& spec, std::uint64_t seed) {
  const ModelSpec parsed = parse_model_spec(spec);
  switch (parsed.kind) {
    case ModelSpec::Kind::kPreset: return model_preset(parsed.name);
    case ModelSpec::Kind::kFile: return load_model_file(parsed.name);
    case ModelSpec::Kind::kRandom:
      return random_problem(parsed.n_qubits, parsed.n_terms, seed).drift;
  }
  throw ValidationError("unreachable model kind");
}

StateVector resolve_initial_state(const std::string& spec, int n_qubits) {
  if (spec.rfind("pm:", 0) == 0) {
    return prepare_pm_state(n_qubits, spec.substr(3));
  }
  if (spec.rfind("basis:", 0) == 0) {
    return prepare_basis_state(n_qubits, spec.substr(6));
  }
  throw ValidationError("initial state spec '" + spec +
                        "' must start with pm: or basis:");
}

Experiment load_experiment(std::istream& in, const std::string& source_name) {
  ConfigReader reader(in, source_name);

  Experiment experiment;
  experiment.feedback.mode = parse_mode(reader);
  experiment.feedback.dt = reader.require_double("dt");
  experiment.depth = reader.require_int("depth");
  if (experiment.depth < 1) {
    reader.fail(reader.require("depth").line, "depth must be at least 1");
  }
  experiment.feedback.weights = reader.require_double_list("weights");

  const KeyValue& model_kv = reader.require("model");
  const ModelSpec model_spec = [&]() -> ModelSpec {
    try {
      return parse_model_spec(model_kv.value);
    } catch (const ValidationError& e) {
      reader.fail(model_kv.line, e.what());
    }
  }();

  std::uint64_t seed = 1;
  if (reader.has("seed")) {
    const KeyValue& kv = reader.require("seed");
    if (model_spec.kind != ModelSpec::Kind::kRandom) {
      reader.fail(kv.line, "seed applies only to random: models");
    }
    char* end = nullptr;
    seed = std::strtoull(kv.value.c_str(), &end, 10);
    if (end != kv.value.c_str() + kv.value.size()) {
      reader.fail(kv.line, "invalid seed '" + kv.value + "'");
    }
  }

  if (model_spec.kind == ModelSpec::Kind::kRandom) {
    if (reader.has("controls")) {
      reader.fail(reader.require("controls").line,
                  "controls are generated together with a random: model");
    }
    try {
      RandomProblem problem =
          random_problem(model_spec.n_qubits, model_spec.n_terms, seed);
      experiment.drift = std::move(problem.drift);
      experiment.controls = std::move(problem.controls);
    } catch (const ValidationError& e) {
      reader.fail(model_kv.line, e.what());
    }
  } else {
    try {
      experiment.drift = resolve_model(model_kv.value, seed);
    } catch (const ValidationError& e) {
      reader.fail(model_kv.line, e.what());
    }
    const KeyValue& controls_kv = reader.require("controls");
    try {
      if (controls_kv.value == "zx-all") {
        experiment.controls = build_zx_controls(experiment.drift.n_qubits());
      } else if (controls_kv.value.rfind("file:", 0) == 0) {
        experiment.controls = load_controls_file(controls_kv.value.substr(5),
                                                 experiment.drift.n_qubits());
      } else {
        throw ValidationError("controls spec '" + controls_kv.value +
                              "' must be zx-all or file:<path>");
      }
    } catch (const ValidationError& e) {
      reader.fail(controls_kv.line, e.what());
    }
  }

  const std::size_t n_controls = experiment.controls.size();
  if (reader.has("gains")) {
    experiment.feedback.gains = reader.require_double_list("gains");
  } else {
    experiment.feedback.gains.assign(n_controls, 1.0);
  }
  if (reader.has("alpha_init")) {
    experiment.feedback.alpha_init = reader.require_double_list("alpha_init");
  } else {
    experiment.feedback.alpha_init.assign(n_controls, 0.0);
  }

  const KeyValue& initial_kv = reader.require("initial");
  const std::vector<std::string> initial_specs = split_list(initial_kv.value);
  for (const std::string& spec : initial_specs) {
    try {
      experiment.initial_states.push_back(
          resolve_initial_state(spec, experiment.drift.n_qubits()));
    } catch (const ValidationError& e) {
      reader.fail(initial_kv.line, e.what());
    }
  }

  try {
    experiment.feedback.validate(
        static_cast<int>(experiment.initial_states.size()),
        static_cast<int>(n_controls));
  } catch (const ValidationError& e) {
    throw ValidationError(source_name + ": " + e.what());
  }
  return experiment;
}

Experiment load_experiment_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open experiment file '" + path + "'");
  return load_experiment(in, path);
}

}  // namespace qlc
