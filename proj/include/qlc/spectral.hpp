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

#ifndef QLC_SPECTRAL_HPP
#define QLC_SPECTRAL_HPP

#include <vector>

#include "qlc/pauli.hpp"
#include "qlc/statevector.hpp"

namespace qlc {

// Eigenpairs are accepted only if the residual ||H v - lambda v|| stays below
// this; breach signals a solver failure.
inline constexpr double kEigenResidualTolerance = 1e-9;

// Eigenvalues closer than this are treated as one degenerate group when
// computing fidelities.
inline constexpr double kDegeneracyThreshold = 1e-9;

// Full exact eigendecomposition of a Hermitian PauliSum, eigenvalues
// ascending, eigenvectors orthonormal.
struct Spectrum {
  std::vector<double> eigenvalues;
  std::vector<StateVector> eigenvectors;
};

// Dense Hermitian diagonalization (tridiagonalization with implicit-shift QL,
// via Eigen's selfadjoint solver). Every eigenpair's residual and the pairwise
// eigenvector orthogonality are verified before the result is returned.
Spectrum diagonalize(const PauliSum& hamiltonian);

// Squared overlap |<eigenvector_level | state>|^2. If neighboring eigenvalues
// sit within kDegeneracyThreshold of level's, returns the squared norm of the
// projection onto the whole degenerate eigenspace, which is basis-independent.
double fidelity(const StateVector& state, const Spectrum& spectrum, int level);

}  // namespace qlc

#endif  // QLC_SPECTRAL_HPP
