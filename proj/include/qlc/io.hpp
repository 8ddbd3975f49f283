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

#ifndef QLC_IO_HPP
#define QLC_IO_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "qlc/algorithms.hpp"
#include "qlc/statevector.hpp"

namespace qlc {

// Machine-facing files (circuit descriptions, model files) print floating
// point with 17 significant digits so values round-trip bit-exactly.
// Human-facing output (trace CSV, summaries) uses 12 significant digits,
// enough to serve as regression goldens without trailing noise.
std::string format_full(double value);
std::string format_human(double value);

// Trace CSV. One data row per executed layer; stable header:
//   layer, alpha_<j>..., E_<q>..., fid_<q>..., B_<j>_<q>...,
//   V, max_overlap, layer_estimations, total_estimations
void write_trace_csv(std::ostream& out, const RunTrace& trace);

// Circuit text format (versioned, 17-digit floats):
//   circuit-v1
//   qubits <n>
//   dt <dt>
//   drift <term-count>
//     <coefficient> <label>   (term-count lines)
//   controls <d>
//   control <term-count>      (then its term lines, repeated d times)
//   layers <count> <d>
//     <alpha_1> ... <alpha_d> (count lines)
void write_circuit(std::ostream& out, const CircuitDescription& circuit);
CircuitDescription read_circuit(std::istream& in);

// Human-readable run report: parameters, initial and final energies and
// fidelities, target eigenvalues with remaining gaps, estimation totals.
void write_summary(std::ostream& out, const RunTrace& trace,
                   const CircuitDescription& circuit);

// Amplitude dump, one row per basis index: index, then re/im per register.
void write_states_csv(std::ostream& out, const std::vector<StateVector>& states);

}  // namespace qlc

#endif  // QLC_IO_HPP
