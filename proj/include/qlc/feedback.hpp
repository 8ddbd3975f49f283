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

#ifndef QLC_FEEDBACK_HPP
#define QLC_FEEDBACK_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "qlc/pauli.hpp"

namespace qlc {

// Controller operating mode.
//   kFalqon: one register, weights [1], unit gain; ground-state search.
//   kWeightedFull: p+1 registers, strictly decreasing weights; drives every
//     register toward its own eigenstate.
//   kWeightedPthOnly: weights [1, ..., 1, w] with w in (0, 1); only the last
//     register's convergence is the goal.
enum class FeedbackMode { kFalqon, kWeightedFull, kWeightedPthOnly };

// Shaping function applied to the weighted measurement sum. Only the identity
// ships; the enum leaves room without inventing untested shapes.
enum class HKind { kIdentity };

struct FeedbackConfig {
  double dt = 0.0;
  std::vector<double> gains;       // one per control
  HKind h_kind = HKind::kIdentity;
  std::vector<double> weights;     // one per register
  FeedbackMode mode = FeedbackMode::kFalqon;
  std::vector<double> alpha_init;  // first-layer parameter per control

  // Enforces every mode constraint against the actual register and control
  // counts. Throws ValidationError with the violated rule spelled out.
  //   - dt > 0; gains all > 0; sizes consistent.
  //   - kFalqon: weights == [1], gains == [1], exactly one register.
  //   - kWeightedFull: weights strictly decreasing (w_q > w_j for q < j).
  //   - kWeightedPthOnly: weights [1, ..., 1, w], 0 < w < 1.
  void validate(int n_registers, int n_controls) const;
};

// Ground-state feedback law: next alpha = -B where B is the measured
// expectation of i[H_c, H_d] on the current state.
double falqon_controller(double B);

// General weighted law for control j: -gain_j * h(sum_q w_q B_q). Covers all
// modes; the last-register-only variant is realized through its weights.
double weighted_controller(std::span<const double> Bs, const FeedbackConfig& cfg,
                           int control_index);

// sum_q weights_q * energies_q.
double lyapunov_value(std::span<const double> energies,
                      std::span<const double> weights);

// Distinct expectation estimations needed per layer when p+1 registers each
// measure every term of the controller observable set: (p+1) * n_pauli_terms.
std::int64_t predict_layer_cost(int p, std::int64_t n_pauli_terms);

// The precomputed controller observables i[H_{c,j}, H_d], one per control.
struct CommutatorObservables {
  std::vector<PauliSum> per_control;

  static CommutatorObservables build(const PauliSum& drift,
                                     const std::vector<PauliSum>& controls);

  // Total term count across controls; the per-register estimation budget.
  std::int64_t total_terms() const;
};

}  // namespace qlc

#endif  // QLC_FEEDBACK_HPP
