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

#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "qlc/algorithms.hpp"
#include "qlc/config.hpp"
#include "qlc/errors.hpp"
#include "qlc/io.hpp"
#include "qlc/models.hpp"
#include "qlc/spectral.hpp"

namespace {

constexpr int kExitValidation = 2;
constexpr int kExitInvariant = 3;

std::ofstream open_output(const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) {
    throw qlc::ValidationError("cannot write output file '" + path.string() + "'");
  }
  return out;
}

// Re-derives the final ensemble from the recorded circuit. Doubles as the
// strict-mode verification input and the state-dump source.
std::vector<qlc::StateVector> replay_finals(const qlc::CircuitDescription& circuit,
                                            const std::vector<qlc::StateVector>& initials) {
  std::vector<qlc::StateVector> finals;
  finals.reserve(initials.size());
  for (const qlc::StateVector& initial : initials) {
    finals.push_back(qlc::replay(circuit, initial));
  }
  return finals;
}

// Strict mode replays the recorded circuit and cross-checks it against the
// trace; any disagreement is an engine defect, not bad input.
void verify_strict(const qlc::Experiment& experiment,
                   const qlc::CircuitDescription& circuit,
                   const qlc::RunTrace& trace,
                   const std::vector<qlc::StateVector>& finals) {
  for (std::size_t k = 0; k < trace.layers.size(); ++k) {
    const qlc::LayerRecord& record = trace.layers[k];
    const double v = qlc::lyapunov_value(record.energies,
                                         experiment.feedback.weights);
    if (std::abs(v - record.lyapunov) > 1e-12) {
      throw qlc::InvariantError(
          "strict check: layer " + std::to_string(k + 1) +
          " records an inconsistent weighted energy sum");
    }
  }
  for (std::size_t q = 0; q < finals.size(); ++q) {
    const double energy = qlc::expectation(finals[q], circuit.drift);
    const double recorded = trace.layers.back().energies[q];
    if (std::abs(energy - recorded) > 1e-10) {
      throw qlc::InvariantError(
          "strict check: replayed register " + std::to_string(q) +
          " energy deviates from the trace (" + qlc::format_human(energy) +
          " vs " + qlc::format_human(recorded) + ")");
    }
  }
}

int cmd_run(const std::string& config_path, const std::string& out_dir,
            bool strict, bool dump_states) {
  const qlc::Experiment experiment = qlc::load_experiment_file(config_path);

  std::pair<qlc::CircuitDescription, qlc::RunTrace> result = [&] {
    if (experiment.feedback.mode == qlc::FeedbackMode::kFalqon) {
      return qlc::run_falqon(experiment.drift, experiment.controls,
                             experiment.initial_states.front(),
                             experiment.feedback, experiment.depth);
    }
    return qlc::run_wfqae(experiment.drift, experiment.controls,
                          qlc::Ensemble(experiment.initial_states),
                          experiment.feedback, experiment.depth);
  }();
  const qlc::CircuitDescription& circuit = result.first;
  const qlc::RunTrace& trace = result.second;

  const std::filesystem::path dir(out_dir);
  std::filesystem::create_directories(dir);
  {
    std::ofstream out = open_output(dir / "trace.csv");
    qlc::write_trace_csv(out, trace);
  }
  {
    std::ofstream out = open_output(dir / "circuit.txt");
    qlc::write_circuit(out, circuit);
  }
  {
    std::ofstream out = open_output(dir / "summary.txt");
    qlc::write_summary(out, trace, circuit);
  }

  if (strict || dump_states) {
    const std::vector<qlc::StateVector> finals =
        replay_finals(circuit, experiment.initial_states);
    if (strict) verify_strict(experiment, circuit, trace, finals);
    if (dump_states) {
      std::ofstream out = open_output(dir / "states.csv");
      qlc::write_states_csv(out, finals);
    }
  }

  qlc::write_summary(std::cout, trace, circuit);
  std::cout << "outputs written to " << dir.string() << '\n';
  return 0;
}

int cmd_spectrum(const std::string& model_spec, std::uint64_t seed) {
  const qlc::PauliSum hamiltonian = qlc::resolve_model(model_spec, seed);
  const qlc::Spectrum spectrum = qlc::diagonalize(hamiltonian);

  std::cout << "qubits: " << hamiltonian.n_qubits()
            << "  terms: " << hamiltonian.size() << '\n';
  std::cout << "level  eigenvalue  group\n";
  int group = 0;
  for (std::size_t i = 0; i < spectrum.eigenvalues.size(); ++i) {
    if (i > 0 && spectrum.eigenvalues[i] - spectrum.eigenvalues[i - 1] >=
                     qlc::kDegeneracyThreshold) {
      ++group;
    }
    std::cout << i << "  " << qlc::format_human(spectrum.eigenvalues[i]) << "  "
              << group << '\n';
  }
  return 0;
}

int cmd_replay(const std::string& circuit_path, const std::string& state_spec) {
  std::ifstream in(circuit_path);
  if (!in) {
    throw qlc::ValidationError("cannot open circuit file '" + circuit_path + "'");
  }
  const qlc::CircuitDescription circuit = qlc::read_circuit(in);
  const qlc::StateVector initial =
      qlc::resolve_initial_state(state_spec, circuit.drift.n_qubits());
  const qlc::StateVector final_state = qlc::replay(circuit, initial);

  const qlc::Spectrum spectrum = qlc::diagonalize(circuit.drift);
  std::cout << "layers applied: " << circuit.layers.size() << '\n';
  std::cout << "final energy: "
            << qlc::format_human(qlc::expectation(final_state, circuit.drift))
            << '\n';
  const int shown = static_cast<int>(
      std::min<std::size_t>(spectrum.eigenvalues.size(), 8));
  for (int level = 0; level < shown; ++level) {
    std::cout << "fidelity to level " << level << ": "
              << qlc::format_human(qlc::fidelity(final_state, spectrum, level))
              << '\n';
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"feedback-driven quantum eigenstate preparation"};
  app.require_subcommand(1);

  std::string config_path;
  std::string out_dir = ".";
  bool strict = false;
  bool dump_states = false;
  CLI::App* run = app.add_subcommand("run", "execute an experiment file");
  run->add_option("config", config_path, "experiment file")->required();
  run->add_option("--out", out_dir, "output directory (default: .)");
  run->add_flag("--strict", strict, "re-verify the trace against a replay");
  run->add_flag("--dump-states", dump_states, "write final amplitudes CSV");

  std::string model_spec;
  std::uint64_t seed = 1;
  CLI::App* spectrum =
      app.add_subcommand("spectrum", "print a model's exact eigenvalues");
  spectrum->add_option("model", model_spec,
                       "preset:<name> | file:<path> | random:<qubits>:<terms>")
      ->required();
  spectrum->add_option("--seed", seed, "seed for random models");

  std::string circuit_path;
  std::string state_spec;
  CLI::App* replay =
      app.add_subcommand("replay", "apply a recorded circuit to a state");
  replay->add_option("circuit", circuit_path, "circuit file")->required();
  replay->add_option("state", state_spec, "pm:<signs> or basis:<bits>")
      ->required();

  try {
    app.parse(argc, argv);
    if (run->parsed()) return cmd_run(config_path, out_dir, strict, dump_states);
    if (spectrum->parsed()) return cmd_spectrum(model_spec, seed);
    if (replay->parsed()) return cmd_replay(circuit_path, state_spec);
    return kExitValidation;
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitValidation;
  } catch (const qlc::ValidationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitValidation;
  } catch (const qlc::DimensionError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitValidation;
  } catch (const qlc::InvariantError& e) {
    std::cerr << "invariant failure: " << e.what() << '\n';
    return kExitInvariant;
  } catch (const std::exception& e) {
    std::cerr << "unexpected failure: " << e.what() << '\n';
    return kExitInvariant;
  }
}
