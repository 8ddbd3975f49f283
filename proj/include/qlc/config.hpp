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

#ifndef QLC_CONFIG_HPP
#define QLC_CONFIG_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "qlc/algorithms.hpp"
#include "qlc/feedback.hpp"
#include "qlc/models.hpp"

namespace qlc {

// A fully resolved experiment: everything a run needs, validated.
struct Experiment {
  PauliSum drift{1};
  std::vector<PauliSum> controls;
  std::vector<StateVector> initial_states;
  FeedbackConfig feedback;
  int depth = 0;
};

// Flat key = value experiment file. '#' starts a comment; keys may appear
// once. Schema (lists are comma-separated):
//   mode        falqon | weighted_full | weighted_pth_only      (required)
//   model       preset:<name> | file:<path> | random:<qubits>:<terms>
//                                                               (required)
//   controls    zx-all | file:<path>     (required unless model is random:)
//   depth       integer >= 1                                    (required)
//   dt          real > 0                                        (required)
//   weights     one real per register                           (required)
//   initial     state specs, pm:<+-...> | basis:<bits...>       (required)
//   gains       one real > 0 per control          (default: all 1)
//   alpha_init  one real per control               (default: all 0)
//   seed        unsigned integer, only with model random:  (default: 1)
// A controls file holds one PauliSum text block per control, separated by
// lines containing only "--".
//
// Parse or constraint failures throw ValidationError naming the config line.
Experiment load_experiment(std::istream& in, const std::string& source_name);
Experiment load_experiment_file(const std::string& path);

// Resolves a model spec (preset:NAME, file:PATH, or random:N:T with seed)
// into a Hamiltonian. Shared by the experiment loader and the spectrum
// command.
PauliSum resolve_model(const std::string& spec, std::uint64_t seed = 1);

// Parses pm:<signs> or basis:<bits> into a state on n_qubits.
StateVector resolve_initial_state(const std::string& spec, int n_qubits);

}  // namespace qlc

#endif  // QLC_CONFIG_HPP
