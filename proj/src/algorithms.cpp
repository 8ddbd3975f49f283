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

#include "qlc/algorithms.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include "qlc/errors.hpp"
#include "qlc/evolution.hpp"

namespace qlc {

namespace {

double max_pairwise_overlap(const std::vector<StateVector>& states) {
  double max_abs = 0.0;
  for (std::size_t a = 0; a < states.size(); ++a) {
    for (std::size_t b = a + 1; b < states.size(); ++b) {
      max_abs = std::max(max_abs, std::abs(overlap(states[a], states[b])));
    }
  }
  return max_abs;
}

// The one feedback loop behind both entry points. Every register sees the
// identical parameter sequence; the controller update is the only coupling
// between registers.
std::pair<CircuitDescription, RunTrace> run_feedback_loop(
    const PauliSum& drift, const std::vector<PauliSum>& controls,
    std::vector<StateVector> states, const FeedbackConfig& cfg, int depth) {
  if (depth < 1) {
    throw ValidationError("depth must be at least 1");
  }
  if (controls.empty()) {
    throw ValidationError("at least one control is required");
  }
  for (const PauliSum& control : controls) {
    if (control.n_qubits() != drift.n_qubits()) {
      throw DimensionError("control and drift qubit counts differ");
    }
  }
  for (const StateVector& state : states) {
    if (state.n_qubits() != drift.n_qubits()) {
      throw DimensionError("initial state and drift qubit counts differ");
    }
  }
  cfg.validate(static_cast<int>(states.size()), static_cast<int>(controls.size()));

  const CommutatorObservables observables =
      CommutatorObservables::build(drift, controls);
  for (std::size_t j = 0; j < observables.per_control.size(); ++j) {
    if (observables.per_control[j].empty()) {
      throw ValidationError("control " + std::to_string(j) +
                            " commutes with the drift; the feedback signal "
                            "would be identically zero");
    }
  }

  const Spectrum spectrum = diagonalize(drift);
  const std::size_t n_registers = states.size();
  const std::size_t n_controls = controls.size();
  const int p = static_cast<int>(n_registers) - 1;
  const std::int64_t layer_cost =
      predict_layer_cost(p, observables.total_terms());

  CircuitDescription circuit;
  circuit.dt = cfg.dt;
  circuit.drift = drift;
  circuit.controls = controls;
  circuit.layers.reserve(static_cast<std::size_t>(depth));

  RunTrace trace;
  trace.initial_energies.resize(n_registers);
  trace.initial_fidelities.resize(n_registers);
  for (std::size_t q = 0; q < n_registers; ++q) {
    trace.initial_energies[q] = expectation(states[q], drift);
    trace.initial_fidelities[q] =
        fidelity(states[q], spectrum, static_cast<int>(q));
    trace.target_eigenvalues.push_back(spectrum.eigenvalues[q]);
  }
  trace.initial_lyapunov = lyapunov_value(trace.initial_energies, cfg.weights);
  trace.layers.reserve(static_cast<std::size_t>(depth));

  const LayerUnitary drift_layer = LayerUnitary::drift(drift, cfg.dt);
  const LayerUnitary control_layer = LayerUnitary::control(controls, cfg.dt);

  std::vector<double> alphas = cfg.alpha_init;
  std::int64_t cumulative = 0;
  for (int k = 1; k <= depth; ++k) {
    for (StateVector& state : states) {
      state = control_layer.apply(drift_layer.apply(state), alphas);
    }
    const double max_abs = max_pairwise_overlap(states);
    if (max_abs >= kOrthogonalityTolerance) {
      throw InvariantError("registers lost orthogonality at layer " +
                           std::to_string(k) + " (max overlap " +
                           std::to_string(max_abs) +
                           "); unitary evolution must preserve it");
    }

    LayerRecord record;
    record.alphas = alphas;
    record.B.assign(n_controls, std::vector<double>(n_registers, 0.0));
    for (std::size_t j = 0; j < n_controls; ++j) {
      for (std::size_t q = 0; q < n_registers; ++q) {
        record.B[j][q] = expectation(states[q], observables.per_control[j]);
      }
    }
    record.energies.resize(n_registers);
    record.fidelities.resize(n_registers);
    for (std::size_t q = 0; q < n_registers; ++q) {
      record.energies[q] = expectation(states[q], drift);
      record.fidelities[q] =
          fidelity(states[q], spectrum, static_cast<int>(q));
    }
    record.lyapunov = lyapunov_value(record.energies, cfg.weights);
    record.max_abs_overlap = max_abs;
    record.estimation_count = layer_cost;
    cumulative += layer_cost;
    record.cumulative_estimations = cumulative;

    circuit.layers.push_back(alphas);

    for (std::size_t j = 0; j < n_controls; ++j) {
      alphas[j] =
          weighted_controller(record.B[j], cfg, static_cast<int>(j));
    }
    trace.layers.push_back(std::move(record));
  }
  trace.next_alphas = alphas;
  return {std::move(circuit), std::move(trace)};
}

}  // namespace

Ensemble::Ensemble(std::vector<StateVector> registers)
    : registers_(std::move(registers)) {
  if (registers_.empty()) {
    throw ValidationError("ensemble needs at least one register");
  }
  for (const StateVector& state : registers_) {
    if (state.n_qubits() != registers_.front().n_qubits()) {
      throw DimensionError("ensemble registers have mismatched qubit counts");
    }
  }
  const double max_abs = max_pairwise_overlap(registers_);
  if (max_abs >= kOrthogonalityTolerance) {
    throw ValidationError("ensemble registers must be pairwise orthogonal "
                          "(max overlap " + std::to_string(max_abs) + ")");
  }
}

std::int64_t RunTrace::total_estimations() const {
  std::int64_t total = 0;
  for (const LayerRecord& record : layers) total += record.estimation_count;
  return total;
}

std::pair<CircuitDescription, RunTrace> run_falqon(
    const PauliSum& drift, const std::vector<PauliSum>& controls,
    const StateVector& initial, const FeedbackConfig& cfg, int depth) {
  if (cfg.mode != FeedbackMode::kFalqon) {
    throw ValidationError("run_falqon requires falqon mode");
  }
  return run_feedback_loop(drift, controls, {initial}, cfg, depth);
}

std::pair<CircuitDescription, RunTrace> run_wfqae(
    const PauliSum& drift, const std::vector<PauliSum>& controls,
    const Ensemble& initials, const FeedbackConfig& cfg, int depth) {
  if (cfg.mode != FeedbackMode::kWeightedFull &&
      cfg.mode != FeedbackMode::kWeightedPthOnly) {
    throw ValidationError("run_wfqae requires a weighted mode");
  }
  return run_feedback_loop(drift, controls, initials.registers(), cfg, depth);
}

StateVector replay(const CircuitDescription& circuit, const StateVector& initial) {
  if (initial.n_qubits() != circuit.drift.n_qubits()) {
    throw DimensionError("replay initial state and circuit qubit counts differ");
  }
  if (circuit.layers.empty()) return initial;
  const LayerUnitary drift_layer = LayerUnitary::drift(circuit.drift, circuit.dt);
  const LayerUnitary control_layer =
      LayerUnitary::control(circuit.controls, circuit.dt);
  StateVector state = initial;
  for (const std::vector<double>& alphas : circuit.layers) {
    state = control_layer.apply(drift_layer.apply(state), alphas);
  }
  return state;
}

}  // namespace qlc
