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

#ifndef QLC_ALGORITHMS_HPP
#define QLC_ALGORITHMS_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "qlc/feedback.hpp"
#include "qlc/pauli.hpp"
#include "qlc/spectral.hpp"
#include "qlc/statevector.hpp"

namespace qlc {

// Pairwise register overlap above this at construction or after any layer is
// a hard failure: unitary evolution must preserve orthogonality, so a breach
// means the engine itself is broken.
inline constexpr double kOrthogonalityTolerance = 1e-8;

// The p+1 simultaneously evolved registers. All registers share one circuit;
// together they represent the composite product state without ever
// materializing the exponentially larger joint space.
class Ensemble {
 public:
  explicit Ensemble(std::vector<StateVector> registers);

  const std::vector<StateVector>& registers() const { return registers_; }
  std::size_t size() const { return registers_.size(); }

 private:
  std::vector<StateVector> registers_;
};

// The run's output circuit: the generator data plus one parameter vector per
// executed layer. Replaying it from the same initial states reproduces the
// final ensemble.
struct CircuitDescription {
  double dt = 0.0;
  PauliSum drift{1};
  std::vector<PauliSum> controls;
  // layers[k][j] is the parameter of control j in layer k+1.
  std::vector<std::vector<double>> layers;
};

// Per-layer record. Energies, fidelities, and measurements are taken after
// the layer's unitaries act; alphas are the parameters that layer applied.
struct LayerRecord {
  std::vector<double> alphas;
  std::vector<double> energies;               // per register
  std::vector<double> fidelities;             // register q vs eigenstate q
  std::vector<std::vector<double>> B;         // [control][register]
  double lyapunov = 0.0;
  double max_abs_overlap = 0.0;               // max pairwise |<a|b>|
  std::int64_t estimation_count = 0;          // this layer
  std::int64_t cumulative_estimations = 0;
};

struct RunTrace {
  // Pre-circuit snapshot of the initial ensemble.
  std::vector<double> initial_energies;
  std::vector<double> initial_fidelities;
  double initial_lyapunov = 0.0;

  // Per-register target eigenvalues (level q for register q) from the exact
  // diagonalization, for convergence reporting.
  std::vector<double> target_eigenvalues;

  std::vector<LayerRecord> layers;

  // Controller output computed from the final layer's measurements; it is
  // never applied (the run stops at the configured depth) but makes the
  // closing feedback values available for diagnostics.
  std::vector<double> next_alphas;

  std::int64_t total_estimations() const;
};

// Ground-state run: a single register under the feedback law. cfg.mode must
// be kFalqon. Executes `depth` layers; layer 1 applies cfg.alpha_init.
std::pair<CircuitDescription, RunTrace> run_falqon(
    const PauliSum& drift, const std::vector<PauliSum>& controls,
    const StateVector& initial, const FeedbackConfig& cfg, int depth);

// Weighted multi-register run: every register experiences the identical
// parameter sequence (one circuit, p+1 input states). cfg.mode must be
// kWeightedFull or kWeightedPthOnly.
std::pair<CircuitDescription, RunTrace> run_wfqae(
    const PauliSum& drift, const std::vector<PauliSum>& controls,
    const Ensemble& initials, const FeedbackConfig& cfg, int depth);

// Applies the recorded layers to `initial` without feedback.
StateVector replay(const CircuitDescription& circuit, const StateVector& initial);

}  // namespace qlc

#endif  // QLC_ALGORITHMS_HPP
