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

#ifndef QLC_MODELS_HPP
#define QLC_MODELS_HPP

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "qlc/pauli.hpp"

namespace qlc {

// Coefficients of the 13-term LiH qubit Hamiltonian at a fixed bond distance.
struct LiHCoefficients {
  std::array<double, 13> g{};
  double bond_distance = 0.0;

  // Built-in values for R = 2.5 (the "lih-sto6g-R2.5" preset).
  static LiHCoefficients r2_5();
};

// Assembles the 3-qubit Hamiltonian
//   g0 I + g1 Z0 + g2 Z1 + g3 Z2
//   + g4 X1X0 + g5 Y1Y0 + g6 X2X0 + g7 Y2Y0
//   + g8 Z1Z0 + g9 Z2Z0 + g10 X2X1 + g11 Y2Y1 + g12 Z2Z1
// where the digit names the qubit. Hopping pairs share values (g4 == g5,
// g6 == g7, g10 == g11 for physical coefficient sets), which the builder does
// not enforce; it maps slots to terms exactly as listed.
PauliSum build_lih_hamiltonian(const LiHCoefficients& coefficients);

// One local control per qubit: [Z0 + X0, Z1 + X1, ...] on n_qubits. Controls
// on distinct qubits commute, so their combined exponential factorizes.
std::vector<PauliSum> build_zx_controls(int n_qubits = 3);

// Named built-in model registry. Throws ValidationError for unknown names.
// Available: "lih-sto6g-R2.5".
PauliSum model_preset(std::string_view name);
std::vector<std::string> model_preset_names();

struct RandomProblem {
  PauliSum drift{1};
  std::vector<PauliSum> controls;
};

// Deterministic random (drift, control) pair for property tests. The drift
// has exactly n_terms distinct non-identity terms with coefficients in
// +-[0.1, 1.0], and its spectrum is regenerated until no adjacent gap falls
// below 1e-6 (strictly ordered eigenvalues are a model assumption). The
// control is regenerated until i[control, drift] is nonzero. All randomness
// derives from the seed through fixed integer arithmetic, so output is stable
// across platforms.
RandomProblem random_problem(int n_qubits, int n_terms, std::uint64_t seed);

}  // namespace qlc

#endif  // QLC_MODELS_HPP
