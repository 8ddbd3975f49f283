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

// Test-only reference implementations that deliberately avoid the production
// code paths: matrices are built by Kronecker products instead of bit-mask
// basis actions, and exponentials use Taylor scaling-and-squaring instead of
// an eigendecomposition. Slow and simple on purpose.

#ifndef QLC_TESTS_ORACLE_HPP
#define QLC_TESTS_ORACLE_HPP

#include <Eigen/Dense>
#include <cstdint>
#include <random>
#include <string>

#include "qlc/pauli.hpp"
#include "qlc/statevector.hpp"

namespace qlc::oracle {

// 2x2 matrix for one of I, X, Y, Z.
Eigen::Matrix2cd pauli_matrix(char c);

// Kronecker product chain over the label, leftmost character first. The
// leftmost qubit therefore owns the most significant index bit, matching the
// production amplitude convention only if that convention is correct.
Eigen::MatrixXcd dense_from_label(const std::string& label);

// Coefficient-weighted sum of dense_from_label over a sum's terms.
Eigen::MatrixXcd dense_sum(const PauliSum& sum);

// exp(-i t h) for Hermitian h via scaling-and-squaring with a Taylor core.
Eigen::MatrixXcd expm_i(const Eigen::MatrixXcd& h, double t);

// Haar-ish random normalized state from a seeded generator (Gaussian
// amplitudes, then normalization). Deterministic per seed.
StateVector random_state(int n_qubits, std::uint64_t seed);

}  // namespace qlc::oracle

#endif  // QLC_TESTS_ORACLE_HPP
