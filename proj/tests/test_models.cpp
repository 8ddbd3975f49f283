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

#include <algorithm>
#include <cmath>
#include <map>
#include <string>

#include "doctest.h"
#include "oracle.hpp"
#include "qlc/errors.hpp"
#include "qlc/models.hpp"
#include "qlc/pauli.hpp"
#include "qlc/spectral.hpp"

using namespace qlc;

TEST_CASE("molecular model carries the tabulated coefficients") {
  const LiHCoefficients c = LiHCoefficients::r2_5();
  CHECK(c.bond_distance == doctest::Approx(2.5));
  const PauliSum h = build_lih_hamiltonian(c);
  CHECK(h.n_qubits() == 3);
  CHECK(h.size() == 13);

  std::map<std::string, double> by_label;
  for (const PauliSum::Term& term : h.terms()) {
    by_label[term.string.label()] = term.coefficient;
  }
  CHECK(by_label.at("III") == doctest::Approx(-7.0582));
  CHECK(by_label.at("ZII") == doctest::Approx(0.0094));
  CHECK(by_label.at("IZI") == doctest::Approx(-0.2857));
  CHECK(by_label.at("IIZ") == doctest::Approx(-0.347));
  CHECK(by_label.at("XXI") == doctest::Approx(0.0152));
  CHECK(by_label.at("YYI") == doctest::Approx(0.0152));
  CHECK(by_label.at("XIX") == doctest::Approx(0.0102));
  CHECK(by_label.at("YIY") == doctest::Approx(0.0102));
  CHECK(by_label.at("ZZI") == doctest::Approx(0.1957));
  CHECK(by_label.at("ZIZ") == doctest::Approx(0.2202));
  CHECK(by_label.at("IXX") == doctest::Approx(0.0208));
  CHECK(by_label.at("IYY") == doctest::Approx(0.0208));
  CHECK(by_label.at("IZZ") == doctest::Approx(0.2563));
}

TEST_CASE("molecular model trace equals the identity coefficient times dimension") {
  const PauliSum h = build_lih_hamiltonian(LiHCoefficients::r2_5());
  const std::complex<double> trace = oracle::dense_sum(h).trace();
  CHECK(trace.real() == doctest::Approx(8.0 * -7.0582).epsilon(1e-12));
  CHECK(trace.imag() == doctest::Approx(0.0));
}

TEST_CASE("molecular model ground energy matches the frozen value") {
  const Spectrum s = diagonalize(build_lih_hamiltonian(LiHCoefficients::r2_5()));
  CHECK(s.eigenvalues.front() == doctest::Approx(-7.862222868460218).epsilon(1e-12));
}

TEST_CASE("per qubit controls pair a bit flip with a phase flip") {
  const std::vector<PauliSum> controls = build_zx_controls(3);
  REQUIRE(controls.size() == 3);
  for (int j = 0; j < 3; ++j) {
    CAPTURE(j);
    REQUIRE(controls[j].size() == 2);
    REQUIRE(controls[j].n_qubits() == 3);
    bool saw_x = false;
    bool saw_z = false;
    for (const PauliSum::Term& term : controls[j].terms()) {
      CHECK(term.coefficient == doctest::Approx(1.0));
      CHECK(term.string.weight() == 1);
      CHECK(term.string.factor(j) != Pauli::I);
      if (term.string.factor(j) == Pauli::X) saw_x = true;
      if (term.string.factor(j) == Pauli::Z) saw_z = true;
    }
    CHECK(saw_x);
    CHECK(saw_z);
  }
  CHECK(build_zx_controls(2).size() == 2);
  CHECK_THROWS_AS(build_zx_controls(0), ValidationError);
}

TEST_CASE("model presets resolve by name") {
  const std::vector<std::string> names = model_preset_names();
  CHECK(std::find(names.begin(), names.end(), "lih-sto6g-R2.5") != names.end());
  const PauliSum preset = model_preset("lih-sto6g-R2.5");
  CHECK(preset == build_lih_hamiltonian(LiHCoefficients::r2_5()));
  CHECK_THROWS_AS(model_preset("nope"), ValidationError);
}

TEST_CASE("random problems are deterministic per seed") {
  const RandomProblem a = random_problem(3, 5, 42);
  const RandomProblem b = random_problem(3, 5, 42);
  CHECK(a.drift.to_text() == b.drift.to_text());
  REQUIRE(a.controls.size() == b.controls.size());
  for (std::size_t j = 0; j < a.controls.size(); ++j) {
    CHECK(a.controls[j].to_text() == b.controls[j].to_text());
  }
  const RandomProblem c = random_problem(3, 5, 43);
  CHECK(a.drift.to_text() != c.drift.to_text());
}

TEST_CASE("random problems satisfy their structural guarantees") {
  for (std::uint64_t seed : {1ull, 2ull, 7ull, 19ull, 101ull}) {
    CAPTURE(seed);
    const RandomProblem problem = random_problem(3, 4, seed);
    CHECK(problem.drift.n_qubits() == 3);
    CHECK(problem.drift.size() == 4);
    REQUIRE(!problem.controls.empty());

    // Drift coefficients stay inside the documented magnitude band.
    for (const PauliSum::Term& term : problem.drift.terms()) {
      const double magnitude = std::abs(term.coefficient);
      CHECK(magnitude >= 0.1);
      CHECK(magnitude <= 1.0);
      CHECK_FALSE(term.string.is_identity());
    }

    // No adjacent gap falls below the regeneration threshold.
    const Spectrum s = diagonalize(problem.drift);
    for (std::size_t i = 1; i < s.eigenvalues.size(); ++i) {
      CHECK(s.eigenvalues[i] - s.eigenvalues[i - 1] >= 1e-6);
    }

    // Every control moves the drift: the feedback signal cannot be dead.
    for (const PauliSum& control : problem.controls) {
      CHECK_FALSE(commutator_i(control, problem.drift).empty());
    }
  }
}

TEST_CASE("random problems validate their arguments") {
  CHECK_THROWS_AS(random_problem(0, 3, 1), ValidationError);
  CHECK_THROWS_AS(random_problem(2, 0, 1), ValidationError);
  CHECK_THROWS_AS(random_problem(kMaxQubits + 1, 3, 1), ValidationError);
  // 1 qubit offers only 3 distinct non-identity terms.
  CHECK_THROWS_AS(random_problem(1, 4, 1), ValidationError);
  CHECK_NOTHROW(random_problem(1, 3, 1));
}
