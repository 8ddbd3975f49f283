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

#ifndef QLC_EVOLUTION_HPP
#define QLC_EVOLUTION_HPP

#include <Eigen/Dense>
#include <memory>
#include <span>
#include <vector>

#include "qlc/pauli.hpp"
#include "qlc/statevector.hpp"

namespace qlc {

// Norm drift beyond this after applying a unitary signals an engine bug.
inline constexpr double kUnitarityTolerance = 1e-8;

// Exact applier for exp(-i * theta * G) with G a fixed Hermitian PauliSum and
// theta variable per call. Strategy is chosen once at construction:
//   - factorized: every term acts on a single qubit, so the exponential splits
//     into closed-form 2x2 rotations applied in place (no dense work at all);
//   - dense: one Hermitian eigendecomposition of the 2^n x 2^n realization,
//     reused for every theta by rescaling the eigenphases.
// Both routes are exact up to roundoff; there is no step-splitting error.
class GeneratorEvolver {
 public:
  explicit GeneratorEvolver(PauliSum generator);

  const PauliSum& generator() const { return generator_; }
  bool factorized() const { return factorized_; }

  // Returns exp(-i * theta * G) |state>, checking norm preservation.
  StateVector apply(const StateVector& state, double theta) const;

  void apply_in_place(Eigen::VectorXcd& amplitudes, double theta) const;

 private:
  struct QubitBlock {
    int qubit;
    // Coefficients of X, Y, Z on this qubit.
    double x, y, z;
  };

  PauliSum generator_;
  bool factorized_;
  double identity_coeff_ = 0.0;            // factorized route, global phase
  std::vector<QubitBlock> blocks_;         // factorized route
  Eigen::MatrixXcd eigenvectors_;          // dense route
  Eigen::VectorXd eigenvalues_;            // dense route
};

// One factor of a circuit layer. A drift layer is the fixed unitary
// exp(-i * generator * dt); a control layer is exp(-i * dt * sum_j a_j G_j)
// with the scalars a supplied per application.
enum class LayerKind { kDrift, kControl };

class LayerUnitary {
 public:
  // Drift factor: generator applied for fixed duration dt every time.
  static LayerUnitary drift(PauliSum generator, double dt);
  // Control factor over d generators, combined per application. With a single
  // generator the combination is skipped and the cached evolver is rescaled.
  static LayerUnitary control(std::vector<PauliSum> generators, double dt);

  LayerKind kind() const { return kind_; }
  double dt() const { return dt_; }
  const std::vector<PauliSum>& generators() const { return generators_; }

  // Drift application. Requires kind == kDrift.
  StateVector apply(const StateVector& state) const;
  // Control application with one scalar per generator. Requires kControl.
  StateVector apply(const StateVector& state, std::span<const double> alphas) const;

 private:
  LayerUnitary(LayerKind kind, std::vector<PauliSum> generators, double dt);

  LayerKind kind_;
  double dt_;
  std::vector<PauliSum> generators_;
  // Shared so LayerUnitary stays cheap to copy; the evolver is immutable.
  std::shared_ptr<const GeneratorEvolver> cached_;
};

// One-shot exp(-i * angle * generator) |state>.
StateVector apply_generator(const StateVector& state, const PauliSum& generator,
                            double angle);

}  // namespace qlc

#endif  // QLC_EVOLUTION_HPP
