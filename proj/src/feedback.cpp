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

#include "qlc/feedback.hpp"

#include <cmath>
#include <string>

#include "qlc/errors.hpp"

namespace qlc {

namespace {

// The shaping function. Only the identity is defined; any future shape must
// satisfy h(0) = 0 and x h(x) > 0 to keep the descent argument intact.
double apply_h(HKind kind, double x) {
  switch (kind) {
    case HKind::kIdentity: return x;
  }
  return x;
}

}  // namespace

void FeedbackConfig::validate(int n_registers, int n_controls) const {
  if (!(dt > 0.0) || !std::isfinite(dt)) {
    throw ValidationError("dt must be positive and finite");
  }
  if (n_registers < 1) {
    throw ValidationError("at least one register is required");
  }
  if (n_controls < 1) {
    throw ValidationError("at least one control is required");
  }
  if (static_cast<int>(weights.size()) != n_registers) {
    throw ValidationError("expected " + std::to_string(n_registers) +
                          " weights, got " + std::to_string(weights.size()));
  }
  if (static_cast<int>(gains.size()) != n_controls) {
    throw ValidationError("expected " + std::to_string(n_controls) +
                          " gains, got " + std::to_string(gains.size()));
  }
  if (static_cast<int>(alpha_init.size()) != n_controls) {
    throw ValidationError("expected " + std::to_string(n_controls) +
                          " alpha_init entries, got " +
                          std::to_string(alpha_init.size()));
  }
  for (double gain : gains) {
    if (!(gain > 0.0) || !std::isfinite(gain)) {
      throw ValidationError("gains must be positive and finite");
    }
  }
  for (double w : weights) {
    if (!std::isfinite(w)) throw ValidationError("weights must be finite");
  }
  for (double a : alpha_init) {
    if (!std::isfinite(a)) throw ValidationError("alpha_init must be finite");
  }
  switch (mode) {
    case FeedbackMode::kFalqon:
      if (n_registers != 1) {
        throw ValidationError("falqon mode drives exactly one register");
      }
      if (weights != std::vector<double>{1.0}) {
        throw ValidationError("falqon mode requires weights [1]");
      }
      // The single-register law has no gain knob; unit gain keeps it exactly
      // the weighted law's special case.
      for (double gain : gains) {
        if (gain != 1.0) {
          throw ValidationError("falqon mode requires unit gains");
        }
      }
      break;
    case FeedbackMode::kWeightedFull:
      for (std::size_t q = 1; q < weights.size(); ++q) {
        if (!(weights[q - 1] > weights[q])) {
          throw ValidationError(
              "weighted_full mode requires strictly decreasing weights "
              "(w_q > w_j for q < j)");
        }
      }
      if (!(weights.back() > 0.0)) {
        throw ValidationError("weighted_full mode requires positive weights");
      }
      break;
    case FeedbackMode::kWeightedPthOnly: {
      if (n_registers < 2) {
        throw ValidationError(
            "weighted_pth_only mode needs at least two registers");
      }
      for (std::size_t q = 0; q + 1 < weights.size(); ++q) {
        if (weights[q] != 1.0) {
          throw ValidationError(
              "weighted_pth_only mode requires weights [1, ..., 1, w]");
        }
      }
      const double w = weights.back();
      if (!(w > 0.0 && w < 1.0)) {
        throw ValidationError(
            "weighted_pth_only mode requires the final weight w in (0, 1)");
      }
      break;
    }
  }
}

double falqon_controller(double B) { return -B; }

double weighted_controller(std::span<const double> Bs, const FeedbackConfig& cfg,
                           int control_index) {
  cfg.validate(static_cast<int>(Bs.size()), static_cast<int>(cfg.gains.size()));
  if (static_cast<std::size_t>(Bs.size()) != cfg.weights.size()) {
    throw DimensionError("expected " + std::to_string(cfg.weights.size()) +
                         " measurements, got " + std::to_string(Bs.size()));
  }
  if (control_index < 0 ||
      static_cast<std::size_t>(control_index) >= cfg.gains.size()) {
    throw DimensionError("control index " + std::to_string(control_index) +
                         " out of range");
  }
  double weighted_sum = 0.0;
  for (std::size_t q = 0; q < Bs.size(); ++q) {
    weighted_sum += cfg.weights[q] * Bs[q];
  }
  return -cfg.gains[static_cast<std::size_t>(control_index)] *
         apply_h(cfg.h_kind, weighted_sum);
}

double lyapunov_value(std::span<const double> energies,
                      std::span<const double> weights) {
  if (energies.size() != weights.size()) {
    throw DimensionError("energies and weights lengths differ (" +
                         std::to_string(energies.size()) + " vs " +
                         std::to_string(weights.size()) + ")");
  }
  double value = 0.0;
  for (std::size_t q = 0; q < energies.size(); ++q) {
    value += weights[q] * energies[q];
  }
  return value;
}

std::int64_t predict_layer_cost(int p, std::int64_t n_pauli_terms) {
  if (p < 0) {
    throw ValidationError("register index p must be nonnegative");
  }
  if (n_pauli_terms < 0) {
    throw ValidationError("term count must be nonnegative");
  }
  return static_cast<std::int64_t>(p + 1) * n_pauli_terms;
}

CommutatorObservables CommutatorObservables::build(
    const PauliSum& drift, const std::vector<PauliSum>& controls) {
  CommutatorObservables observables;
  observables.per_control.reserve(controls.size());
  for (const PauliSum& control : controls) {
    observables.per_control.push_back(commutator_i(control, drift));
  }
  return observables;
}

std::int64_t CommutatorObservables::total_terms() const {
  std::int64_t total = 0;
  for (const PauliSum& sum : per_control) {
    total += static_cast<std::int64_t>(sum.size());
  }
  return total;
}

}  // namespace qlc
