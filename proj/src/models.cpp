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

#include "qlc/models.hpp"

#include <algorithm>
#include <limits>
#include <random>
#include <utility>

#include "qlc/errors.hpp"
#include "qlc/spectral.hpp"

namespace qlc {

namespace {

constexpr int kGenerationAttempts = 64;
constexpr double kMinSpectralGap = 1e-6;

// Uniform double in [0, 1) from the top 53 bits of one engine draw; avoids
// distribution classes whose output is implementation-defined.
double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// Coefficient in +-[0.1, 1.0]; bounded away from zero so canonicalization
// never silently drops a generated term.
double random_coefficient(std::mt19937_64& rng) {
  const double magnitude = 0.1 + 0.9 * uniform01(rng);
  return (rng() & 1) ? -magnitude : magnitude;
}

PauliString random_nonidentity_string(std::mt19937_64& rng, int n_qubits) {
  const std::uint64_t mask = (std::uint64_t{1} << n_qubits) - 1;
  for (;;) {
    const std::uint64_t x = rng() & mask;
    const std::uint64_t z = rng() & mask;
    if (x != 0 || z != 0) return PauliString(n_qubits, x, z);
  }
}

// Draws distinct strings so the canonical form keeps exactly n_terms terms
// and every coefficient stays inside the generated band.
PauliSum random_sum(std::mt19937_64& rng, int n_qubits, int n_terms) {
  std::vector<PauliSum::Term> terms;
  terms.reserve(static_cast<std::size_t>(n_terms));
  while (static_cast<int>(terms.size()) < n_terms) {
    const PauliString candidate = random_nonidentity_string(rng, n_qubits);
    const bool duplicate =
        std::any_of(terms.begin(), terms.end(), [&](const PauliSum::Term& t) {
          return t.string == candidate;
        });
    if (duplicate) continue;
    terms.push_back(PauliSum::Term{random_coefficient(rng), candidate});
  }
  return PauliSum(n_qubits, std::move(terms));
}

double min_adjacent_gap(const std::vector<double>& ascending) {
  double gap = std::numeric_limits<double>::infinity();
  for (std::size_t i = 1; i < ascending.size(); ++i) {
    gap = std::min(gap, ascending[i] - ascending[i - 1]);
  }
  return gap;
}

}  // namespace

LiHCoefficients LiHCoefficients::r2_5() {
  LiHCoefficients c;
  c.g = {-7.0582, 0.0094, -0.2857, -0.347, 0.0152, 0.0152, 0.0102,
         0.0102,  0.1957, 0.2202,  0.0208, 0.0208, 0.2563};
  c.bond_distance = 2.5;
  return c;
}

PauliSum build_lih_hamiltonian(const LiHCoefficients& coefficients) {
  static constexpr const char* kLabels[13] = {
      "III",                         // identity offset
      "ZII", "IZI", "IIZ",           // single-site Z
      "XXI", "YYI", "XIX", "YIY",    // hopping pairs (1,0) and (2,0)
      "ZZI", "ZIZ",                  // ZZ pairs (1,0) and (2,0)
      "IXX", "IYY", "IZZ",           // hopping and ZZ on (2,1)
  };
  std::vector<PauliSum::Term> terms;
  terms.reserve(13);
  for (int i = 0; i < 13; ++i) {
    terms.push_back(PauliSum::Term{coefficients.g[static_cast<std::size_t>(i)],
                                   PauliString::from_label(kLabels[i])});
  }
  return PauliSum(3, std::move(terms));
}

std::vector<PauliSum> build_zx_controls(int n_qubits) {
  if (n_qubits < 1 || n_qubits > kMaxQubits) {
    throw ValidationError("per-qubit controls support 1 to " +
                          std::to_string(kMaxQubits) + " qubits");
  }
  std::vector<PauliSum> controls;
  controls.reserve(static_cast<std::size_t>(n_qubits));
  for (int q = 0; q < n_qubits; ++q) {
    controls.push_back(PauliSum(
        n_qubits, {{1.0, PauliString::single(n_qubits, q, Pauli::Z)},
                   {1.0, PauliString::single(n_qubits, q, Pauli::X)}}));
  }
  return controls;
}

PauliSum model_preset(std::string_view name) {
  if (name == "lih-sto6g-R2.5") {
    return build_lih_hamiltonian(LiHCoefficients::r2_5());
  }
  std::string known;
  for (const std::string& preset : model_preset_names()) {
    if (!known.empty()) known += ", ";
    known += preset;
  }
  throw ValidationError("unknown model preset '" + std::string(name) +
                        "' (available: " + known + ")");
}

std::vector<std::string> model_preset_names() { return {"lih-sto6g-R2.5"}; }

RandomProblem random_problem(int n_qubits, int n_terms, std::uint64_t seed) {
  if (n_qubits < 1 || n_qubits > kMaxQubits) {
    throw ValidationError("random problems support 1 to " +
                          std::to_string(kMaxQubits) + " qubits");
  }
  if (n_terms < 1) {
    throw ValidationError("random drift needs at least one term");
  }
  const std::uint64_t distinct_strings =
      (std::uint64_t{1} << (2 * n_qubits)) - 1;
  if (static_cast<std::uint64_t>(n_terms) > distinct_strings) {
    throw ValidationError("only " + std::to_string(distinct_strings) +
                          " distinct non-identity terms exist on " +
                          std::to_string(n_qubits) + " qubits");
  }
  std::mt19937_64 rng(seed);

  RandomProblem problem{PauliSum(n_qubits), {}};
  bool have_drift = false;
  for (int attempt = 0; attempt < kGenerationAttempts; ++attempt) {
    PauliSum candidate = random_sum(rng, n_qubits, n_terms);
    if (candidate.empty()) continue;
    // Strictly ordered eigenvalues are a model assumption; near-degenerate
    // spectra are regenerated rather than accepted.
    if (min_adjacent_gap(diagonalize(candidate).eigenvalues) < kMinSpectralGap) {
      continue;
    }
    problem.drift = std::move(candidate);
    have_drift = true;
    break;
  }
  if (!have_drift) {
    throw ValidationError("failed to generate a drift with a non-degenerate "
                          "spectrum; try another seed");
  }

  for (int attempt = 0; attempt < kGenerationAttempts; ++attempt) {
    const int control_terms = 1 + static_cast<int>(rng() & 1);
    PauliSum candidate = random_sum(rng, n_qubits, control_terms);
    if (candidate.empty() || commutator_i(candidate, problem.drift).empty()) {
      continue;
    }
    problem.controls.push_back(std::move(candidate));
    return problem;
  }
  throw ValidationError("failed to generate a control that does not commute "
                        "with the drift; try another seed");
}

}  // namespace qlc
