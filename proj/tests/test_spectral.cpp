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

#include <cmath>
#include <random>

#include "doctest.h"
#include "oracle.hpp"
#include "qlc/errors.hpp"
#include "qlc/models.hpp"
#include "qlc/pauli.hpp"
#include "qlc/spectral.hpp"
#include "qlc/statevector.hpp"

using namespace qlc;

TEST_CASE("single qubit spectra are exact") {
  const Spectrum z = diagonalize(PauliSum(1, {{1.0, PauliString::from_label("Z")}}));
  REQUIRE(z.eigenvalues.size() == 2);
  CHECK(z.eigenvalues[0] == doctest::Approx(-1.0));
  CHECK(z.eigenvalues[1] == doctest::Approx(1.0));
  // Ascending order: the ground state of Z is |1>.
  CHECK(std::abs(z.eigenvectors[0].amplitudes()[1]) == doctest::Approx(1.0));
  CHECK(std::abs(z.eigenvectors[1].amplitudes()[0]) == doctest::Approx(1.0));

  const Spectrum x = diagonalize(PauliSum(1, {{1.0, PauliString::from_label("X")}}));
  CHECK(x.eigenvalues[0] == doctest::Approx(-1.0));
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  // Ground state of X is |-> up to a global phase.
  CHECK(std::abs(std::abs(x.eigenvectors[0].amplitudes()[0]) - inv_sqrt2) < 1e-12);
  CHECK(std::abs(overlap(prepare_pm_state(1, "-"), x.eigenvectors[0])) ==
        doctest::Approx(1.0));
}

TEST_CASE("shifted hamiltonians shift the spectrum rigidly") {
  const PauliSum h(2, {{0.7, PauliString::from_label("ZZ")},
                       {0.3, PauliString::from_label("XI")},
                       {-2.5, PauliString::identity(2)}});
  const PauliSum h0(2, {{0.7, PauliString::from_label("ZZ")},
                        {0.3, PauliString::from_label("XI")}});
  const Spectrum s = diagonalize(h);
  const Spectrum s0 = diagonalize(h0);
  for (std::size_t i = 0; i < s.eigenvalues.size(); ++i) {
    CHECK(s.eigenvalues[i] == doctest::Approx(s0.eigenvalues[i] - 2.5).epsilon(1e-12));
  }
}

TEST_CASE("eigenpairs satisfy the eigenvalue equation against the oracle") {
  std::mt19937_64 rng(51);
  std::uniform_real_distribution<double> coeff(-1.5, 1.5);
  for (int trial = 0; trial < 15; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 3);
    const std::uint64_t mask = (1ull << n) - 1;
    std::vector<PauliSum::Term> terms;
    for (int t = 0; t < 4; ++t) {
      terms.push_back({coeff(rng), PauliString(n, rng() & mask, rng() & mask)});
    }
    const PauliSum h(n, std::move(terms));
    const Spectrum s = diagonalize(h);
    const Eigen::MatrixXcd dense = oracle::dense_sum(h);
    REQUIRE(s.eigenvalues.size() == static_cast<std::size_t>(dense.rows()));
    for (std::size_t i = 0; i < s.eigenvalues.size(); ++i) {
      const Eigen::VectorXcd residual =
          dense * s.eigenvectors[i].amplitudes() -
          s.eigenvalues[i] * s.eigenvectors[i].amplitudes();
      CHECK(residual.norm() < 1e-9);
    }
    // Ascending and orthonormal.
    for (std::size_t i = 1; i < s.eigenvalues.size(); ++i) {
      CHECK(s.eigenvalues[i] >= s.eigenvalues[i - 1]);
      CHECK(std::abs(overlap(s.eigenvectors[i - 1], s.eigenvectors[i])) < 1e-9);
    }
  }
}

TEST_CASE("fidelity of an eigenvector to its own level is one") {
  const PauliSum h(2, {{0.7, PauliString::from_label("ZZ")},
                       {0.3, PauliString::from_label("XY")}});
  const Spectrum s = diagonalize(h);
  for (int level = 0; level < 4; ++level) {
    CHECK(fidelity(s.eigenvectors[level], s, level) == doctest::Approx(1.0));
  }
}

TEST_CASE("fidelity sums squared overlaps over a degenerate subspace") {
  // Z on qubit 0 of two qubits: eigenvalues (-1, -1, +1, +1). Any state inside
  // the lower subspace has unit fidelity to level 0 and level 1 alike,
  // regardless of which orthogonal basis the solver picked.
  const PauliSum h(2, {{1.0, PauliString::from_label("ZI")}});
  const Spectrum s = diagonalize(h);
  REQUIRE(s.eigenvalues.size() == 4);
  CHECK(s.eigenvalues[0] == doctest::Approx(-1.0));
  CHECK(s.eigenvalues[1] == doctest::Approx(-1.0));

  const StateVector inside = prepare_basis_state(2, "10");
  CHECK(fidelity(inside, s, 0) == doctest::Approx(1.0));
  CHECK(fidelity(inside, s, 1) == doctest::Approx(1.0));
  CHECK(fidelity(inside, s, 2) == doctest::Approx(0.0));

  Eigen::VectorXcd mixed(4);
  mixed << 0.0, 0.0, 1.0 / std::sqrt(2.0), 1.0 / std::sqrt(2.0);
  CHECK(fidelity(StateVector(2, mixed), s, 0) == doctest::Approx(1.0));

  // A state straddling both subspaces splits its weight.
  const StateVector straddle = prepare_pm_state(2, "-+");
  CHECK(fidelity(straddle, s, 0) == doctest::Approx(0.5));
  CHECK(fidelity(straddle, s, 3) == doctest::Approx(0.5));
}

TEST_CASE("fidelity validates the level index") {
  const Spectrum s = diagonalize(PauliSum(1, {{1.0, PauliString::from_label("Z")}}));
  const StateVector state = prepare_basis_state(1, "0");
  CHECK_THROWS_AS(fidelity(state, s, -1), ValidationError);
  CHECK_THROWS_AS(fidelity(state, s, 2), ValidationError);
}

TEST_CASE("reference model spectrum matches frozen values") {
  const Spectrum s = diagonalize(model_preset("lih-sto6g-R2.5"));
  const double expected[8] = {
      -7.862222868460218, -7.419457232184760, -7.359905929383519,
      -7.247971202156264, -7.230330660311092, -7.009300000000000,
      -6.573712107504148, -5.762700000000001};
  REQUIRE(s.eigenvalues.size() == 8);
  for (int i = 0; i < 8; ++i) {
    CHECK(s.eigenvalues[i] == doctest::Approx(expected[i]).epsilon(1e-11));
  }
}

TEST_CASE("the empty sum diagonalizes as the zero operator") {
  const Spectrum s = diagonalize(PauliSum(2));
  REQUIRE(s.eigenvalues.size() == 4);
  for (double value : s.eigenvalues) {
    CHECK(value == doctest::Approx(0.0));
  }
  // Fully degenerate: every state projects completely onto level 0.
  CHECK(fidelity(prepare_pm_state(2, "+-"), s, 0) == doctest::Approx(1.0));
}
