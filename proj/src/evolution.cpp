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

#include "qlc/evolution.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <map>
#include <string>
#include <utility>

#include "qlc/errors.hpp"

namespace qlc {

namespace {

void check_engine_qubits(int n_qubits) {
  if (n_qubits > kMaxQubits) {
    throw ValidationError("evolution capped at " + std::to_string(kMaxQubits) +
                          " qubits, got " + std::to_string(n_qubits));
  }
}

}  // namespace

GeneratorEvolver::GeneratorEvolver(PauliSum generator)
    : generator_(std::move(generator)) {
  check_engine_qubits(generator_.n_qubits());
  factorized_ = true;
  for (const auto& t : generator_.terms()) {
    if (t.string.weight() > 1) {
      factorized_ = false;
      break;
    }
  }
  if (factorized_) {
    // Terms touch at most one qubit each, so the generator is a direct sum of
    // independent single-qubit blocks plus an identity offset.
    std::map<int, QubitBlock> by_qubit;
    for (const auto& t : generator_.terms()) {
      if (t.string.is_identity()) {
        identity_coeff_ += t.coefficient;
        continue;
      }
      int qubit = 0;
      for (int q = 0; q < generator_.n_qubits(); ++q) {
        if (t.string.factor(q) != Pauli::I) qubit = q;
      }
      QubitBlock& block = by_qubit.try_emplace(qubit, QubitBlock{qubit, 0, 0, 0})
                              .first->second;
      switch (t.string.factor(qubit)) {
        case Pauli::X: block.x += t.coefficient; break;
        case Pauli::Y: block.y += t.coefficient; break;
        case Pauli::Z: block.z += t.coefficient; break;
        case Pauli::I: break;
      }
    }
    blocks_.reserve(by_qubit.size());
    for (const auto& [qubit, block] : by_qubit) blocks_.push_back(block);
  } else {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(to_dense(generator_));
    if (solver.info() != Eigen::Success) {
      throw InvariantError("eigendecomposition failed for evolution generator");
    }
    eigenvectors_ = solver.eigenvectors();
    eigenvalues_ = solver.eigenvalues();
  }
}

void GeneratorEvolver::apply_in_place(Eigen::VectorXcd& amplitudes,
                                      double theta) const {
  if (theta == 0.0) return;
  const int n = generator_.n_qubits();
  if (amplitudes.size() != (std::int64_t{1} << n)) {
    throw DimensionError("amplitude vector does not match generator qubit count");
  }
  if (factorized_) {
    if (identity_coeff_ != 0.0) {
      amplitudes *= std::exp(std::complex<double>(0.0, -theta * identity_coeff_));
    }
    for (const QubitBlock& block : blocks_) {
      const double r = std::sqrt(block.x * block.x + block.y * block.y +
                                 block.z * block.z);
      if (r == 0.0) continue;
      // exp(-i t (x X + y Y + z Z)) = cos(t r) I - i sin(t r) (x X + y Y + z Z) / r.
      const double c = std::cos(theta * r);
      const double s = std::sin(theta * r) / r;
      const std::complex<double> u00(c, -s * block.z);
      const std::complex<double> u01(-s * block.y, -s * block.x);
      const std::complex<double> u10(s * block.y, -s * block.x);
      const std::complex<double> u11(c, s * block.z);
      const std::int64_t stride = std::int64_t{1} << (n - 1 - block.qubit);
      const std::int64_t dim = amplitudes.size();
      for (std::int64_t base = 0; base < dim; base += 2 * stride) {
        for (std::int64_t offset = 0; offset < stride; ++offset) {
          const std::int64_t i0 = base + offset;
          const std::int64_t i1 = i0 + stride;
          const std::complex<double> a0 = amplitudes(i0);
          const std::complex<double> a1 = amplitudes(i1);
          amplitudes(i0) = u00 * a0 + u01 * a1;
          amplitudes(i1) = u10 * a0 + u11 * a1;
        }
      }
    }
  } else {
    Eigen::VectorXcd projected = eigenvectors_.adjoint() * amplitudes;
    for (std::int64_t i = 0; i < projected.size(); ++i) {
      projected(i) *= std::exp(std::complex<double>(0.0, -theta * eigenvalues_(i)));
    }
    amplitudes = eigenvectors_ * projected;
  }
}

StateVector GeneratorEvolver::apply(const StateVector& state, double theta) const {
  if (state.n_qubits() != generator_.n_qubits()) {
    throw DimensionError("apply: state has " + std::to_string(state.n_qubits()) +
                         " qubits, generator has " +
                         std::to_string(generator_.n_qubits()));
  }
  Eigen::VectorXcd amplitudes = state.amplitudes();
  apply_in_place(amplitudes, theta);
  const double norm = amplitudes.norm();
  if (std::abs(norm - 1.0) > kUnitarityTolerance) {
    throw InvariantError("evolution drifted state norm to " +
                         std::to_string(norm) + "; engine bug");
  }
  return StateVector(state.n_qubits(), std::move(amplitudes));
}

LayerUnitary::LayerUnitary(LayerKind kind, std::vector<PauliSum> generators,
                           double dt)
    : kind_(kind), dt_(dt), generators_(std::move(generators)) {
  if (generators_.empty()) {
    throw ValidationError("layer unitary needs at least one generator");
  }
  if (!(dt > 0.0)) {
    throw ValidationError("layer duration must be positive");
  }
  const int n = generators_.front().n_qubits();
  for (const auto& g : generators_) {
    if (g.n_qubits() != n) {
      throw DimensionError("layer generators have mismatched qubit counts");
    }
  }
  // Drift always has one generator; a single-generator control reuses the
  // same cached route with the eigenphases rescaled by alpha per call.
  if (generators_.size() == 1) {
    cached_ = std::make_shared<const GeneratorEvolver>(generators_.front());
  }
}

LayerUnitary LayerUnitary::drift(PauliSum generator, double dt) {
  return LayerUnitary(LayerKind::kDrift, {std::move(generator)}, dt);
}

LayerUnitary LayerUnitary::control(std::vector<PauliSum> generators, double dt) {
  return LayerUnitary(LayerKind::kControl, std::move(generators), dt);
}

StateVector LayerUnitary::apply(const StateVector& state) const {
  if (kind_ != LayerKind::kDrift) {
    throw ValidationError("control layer application requires parameters");
  }
  return cached_->apply(state, dt_);
}

StateVector LayerUnitary::apply(const StateVector& state,
                                std::span<const double> alphas) const {
  if (kind_ != LayerKind::kControl) {
    throw ValidationError("drift layer application takes no parameters");
  }
  if (alphas.size() != generators_.size()) {
    throw DimensionError("expected " + std::to_string(generators_.size()) +
                         " control parameters, got " +
                         std::to_string(alphas.size()));
  }
  if (generators_.size() == 1) {
    return cached_->apply(state, alphas[0] * dt_);
  }
  // Multiple simultaneous controls evolve under one exponential of the
  // combined generator, rebuilt per call since the parameters change.
  std::vector<std::pair<double, PauliSum>> weighted;
  weighted.reserve(generators_.size());
  for (std::size_t j = 0; j < generators_.size(); ++j) {
    weighted.emplace_back(alphas[j], generators_[j]);
  }
  return GeneratorEvolver(scale_and_add(weighted)).apply(state, dt_);
}

StateVector apply_generator(const StateVector& state, const PauliSum& generator,
                            double angle) {
  return GeneratorEvolver(generator).apply(state, angle);
}

}  // namespace qlc
