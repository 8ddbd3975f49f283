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

#ifndef QLC_STATEVECTOR_HPP
#define QLC_STATEVECTOR_HPP

#include <Eigen/Dense>
#include <complex>
#include <string_view>

#include "qlc/pauli.hpp"

namespace qlc {

// Construction rejects amplitude vectors whose norm strays beyond this.
inline constexpr double kNormTolerance = 1e-10;

// A normalized complex amplitude vector over the 2^n computational basis
// states. Index bit (n-1-q) belongs to qubit q (qubit 0 = leftmost label
// character = most significant index bit), matching to_dense. Value type;
// never silently renormalized.
class StateVector {
 public:
  StateVector(int n_qubits, Eigen::VectorXcd amplitudes);

  int n_qubits() const { return n_qubits_; }
  std::int64_t dim() const { return amplitudes_.size(); }
  const Eigen::VectorXcd& amplitudes() const { return amplitudes_; }

 private:
  int n_qubits_;
  Eigen::VectorXcd amplitudes_;
};

// Computational basis state |label>, e.g. ("100") -> amplitude 1 at the index
// whose bit pattern reads 100 with qubit 0 as the most significant bit.
StateVector prepare_basis_state(int n_qubits, std::string_view label);

// Tensor product of |+> = (|0>+|1>)/sqrt(2) and |-> = (|0>-|1>)/sqrt(2)
// factors, one per character of `signs`.
StateVector prepare_pm_state(int n_qubits, std::string_view signs);

// <state|observable|state>, accumulated term by term in the canonical term
// order (the per-string route a measurement-based estimator would take).
// The imaginary residue is checked below 1e-12 and discarded.
double expectation(const StateVector& state, const PauliSum& observable);

// <a|b>.
std::complex<double> overlap(const StateVector& a, const StateVector& b);

}  // namespace qlc

#endif  // QLC_STATEVECTOR_HPP
