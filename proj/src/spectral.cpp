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

#include "qlc/spectral.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <string>

#include "qlc/errors.hpp"

namespace qlc {

Spectrum diagonalize(const PauliSum& hamiltonian) {
  const Eigen::MatrixXcd dense = to_dense(hamiltonian);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(dense);
  if (solver.info() != Eigen::Success) {
    throw InvariantError("Hermitian eigendecomposition did not converge");
  }
  const Eigen::VectorXd& values = solver.eigenvalues();
  const Eigen::MatrixXcd& vectors = solver.eigenvectors();
  const std::int64_t dim = values.size();

  // The result self-certifies: residuals and orthonormality are verified
  // before anything downstream can consume an invalid decomposition.
  const double residual =
      (dense * vectors - vectors * values.asDiagonal()).cwiseAbs().maxCoeff();
  if (residual > kEigenResidualTolerance) {
    throw InvariantError("eigenpair residual " + std::to_string(residual) +
                         " exceeds tolerance");
  }
  const double orthogonality_defect =
      (vectors.adjoint() * vectors - Eigen::MatrixXcd::Identity(dim, dim))
          .cwiseAbs()
          .maxCoeff();
  if (orthogonality_defect > kEigenResidualTolerance) {
    throw InvariantError("eigenvectors lost orthonormality (defect " +
                         std::to_string(orthogonality_defect) + ")");
  }
  for (std::int64_t i = 1; i < dim; ++i) {
    if (values(i) < values(i - 1)) {
      throw InvariantError("eigenvalues not sorted ascending");
    }
  }

  Spectrum spectrum;
  spectrum.eigenvalues.assign(values.data(), values.data() + dim);
  spectrum.eigenvectors.reserve(static_cast<std::size_t>(dim));
  for (std::int64_t i = 0; i < dim; ++i) {
    spectrum.eigenvectors.emplace_back(hamiltonian.n_qubits(),
                                       vectors.col(i).eval());
  }
  return spectrum;
}

double fidelity(const StateVector& state, const Spectrum& spectrum, int level) {
  const auto count = static_cast<std::int64_t>(spectrum.eigenvalues.size());
  if (level < 0 || level >= count) {
    throw ValidationError("eigenstate level " + std::to_string(level) +
                          " out of range [0, " + std::to_string(count) + ")");
  }
  const double target = spectrum.eigenvalues[static_cast<std::size_t>(level)];
  // Sum |<v_i|state>|^2 over every eigenvalue within the degeneracy threshold
  // of the target; a basis-independent projection weight on that eigenspace.
  double projection = 0.0;
  for (std::int64_t i = 0; i < count; ++i) {
    if (std::abs(spectrum.eigenvalues[static_cast<std::size_t>(i)] - target) <
        kDegeneracyThreshold) {
      projection += std::norm(
          overlap(spectrum.eigenvectors[static_cast<std::size_t>(i)], state));
    }
  }
  return projection;
}

}  // namespace qlc
