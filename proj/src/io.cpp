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

#include "qlc/io.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <istream>
#include <ostream>
#include <sstream>

#include "qlc/errors.hpp"

namespace qlc {

namespace {

// Reads whitespace-separated tokens while tracking line numbers so malformed
// circuit files can point at the offending line.
class TokenReader {
 public:
  explicit TokenReader(std::istream& in) : in_(in) {}

  std::string next(const char* what) {
    std::string token;
    for (;;) {
      if (pos_ >= line_.size()) {
        if (!std::getline(in_, line_)) {
          throw ValidationError("circuit file line " + std::to_string(line_number_) +
                                ": unexpected end of file while reading " + what);
        }
        ++line_number_;
        pos_ = 0;
        continue;
      }
      if (std::isspace(static_cast<unsigned char>(line_[pos_]))) {
        ++pos_;
        continue;
      }
      break;
    }
    while (pos_ < line_.size() &&
           !std::isspace(static_cast<unsigned char>(line_[pos_]))) {
      token += line_[pos_++];
    }
    return token;
  }

  double next_double(const char* what) {
    const std::string token = next(what);
    char* end = nullptr;
    const double value = std::strtod(token.c_str(), &end);
    if (end != token.c_str() + token.size() || !std::isfinite(value)) {
      fail("invalid " + std::string(what) + " '" + token + "'");
    }
    return value;
  }

  std::int64_t next_count(const char* what) {
    const std::string token = next(what);
    char* end = nullptr;
    const long long value = std::strtoll(token.c_str(), &end, 10);
    if (end != token.c_str() + token.size() || value < 0) {
      fail("invalid " + std::string(what) + " '" + token + "'");
    }
    return value;
  }

  void expect(const char* literal) {
    const std::string token = next(literal);
    if (token != literal) {
      fail("expected '" + std::string(literal) + "', found '" + token + "'");
    }
  }

  bool at_end() {
    for (;;) {
      while (pos_ < line_.size() &&
             std::isspace(static_cast<unsigned char>(line_[pos_]))) {
        ++pos_;
      }
      if (pos_ < line_.size()) return false;
      if (!std::getline(in_, line_)) return true;
      ++line_number_;
      pos_ = 0;
    }
  }

  [[noreturn]] void fail(const std::string& message) const {
    throw ValidationError("circuit file line " + std::to_string(line_number_) +
                          ": " + message);
  }

 private:
  std::istream& in_;
  std::string line_;
  std::size_t pos_ = 0;
  int line_number_ = 0;
};

PauliSum read_term_block(TokenReader& reader, std::int64_t count,
                         int expected_qubits) {
  if (count < 1) reader.fail("term count must be at least 1");
  std::vector<PauliSum::Term> terms;
  terms.reserve(static_cast<std::size_t>(count));
  int n_qubits = expected_qubits;
  for (std::int64_t i = 0; i < count; ++i) {
    const double coefficient = reader.next_double("term coefficient");
    const std::string label = reader.next("factor string");
    PauliString string = [&] {
      try {
        return PauliString::from_label(label);
      } catch (const ValidationError& e) {
        reader.fail(e.what());
      }
    }();
    if (string.n_qubits() != n_qubits) {
      reader.fail("factor string '" + label + "' does not match qubit count " +
                  std::to_string(n_qubits));
    }
    terms.push_back(PauliSum::Term{coefficient, string});
  }
  return PauliSum(n_qubits, std::move(terms));
}

void write_term_block(std::ostream& out, const PauliSum& sum) {
  for (const auto& t : sum.terms()) {
    out << format_full(t.coefficient) << ' ' << t.string.label() << '\n';
  }
}

}  // namespace

std::string format_full(double value) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", value);
  return buf;
}

std::string format_human(double value) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.12g", value);
  return buf;
}

void write_trace_csv(std::ostream& out, const RunTrace& trace) {
  if (trace.layers.empty()) {
    throw ValidationError("cannot serialize an empty trace");
  }
  const std::size_t n_controls = trace.layers.front().alphas.size();
  const std::size_t n_registers = trace.layers.front().energies.size();

  out << "layer";
  for (std::size_t j = 0; j < n_controls; ++j) out << ",alpha_" << j;
  for (std::size_t q = 0; q < n_registers; ++q) out << ",E_" << q;
  for (std::size_t q = 0; q < n_registers; ++q) out << ",fid_" << q;
  for (std::size_t j = 0; j < n_controls; ++j) {
    for (std::size_t q = 0; q < n_registers; ++q) out << ",B_" << j << '_' << q;
  }
  out << ",V,max_overlap,layer_estimations,total_estimations\n";

  for (std::size_t k = 0; k < trace.layers.size(); ++k) {
    const LayerRecord& record = trace.layers[k];
    out << (k + 1);
    for (double a : record.alphas) out << ',' << format_human(a);
    for (double e : record.energies) out << ',' << format_human(e);
    for (double f : record.fidelities) out << ',' << format_human(f);
    for (const auto& row : record.B) {
      for (double b : row) out << ',' << format_human(b);
    }
    out << ',' << format_human(record.lyapunov) << ','
        << format_human(record.max_abs_overlap) << ','
        << record.estimation_count << ',' << record.cumulative_estimations
        << '\n';
  }
}

void write_circuit(std::ostream& out, const CircuitDescription& circuit) {
  out << "circuit-v1\n";
  out << "qubits " << circuit.drift.n_qubits() << '\n';
  out << "dt " << format_full(circuit.dt) << '\n';
  out << "drift " << circuit.drift.size() << '\n';
  write_term_block(out, circuit.drift);
  out << "controls " << circuit.controls.size() << '\n';
  for (const PauliSum& control : circuit.controls) {
    out << "control " << control.size() << '\n';
    write_term_block(out, control);
  }
  out << "layers " << circuit.layers.size() << ' ' << circuit.controls.size()
      << '\n';
  for (const auto& alphas : circuit.layers) {
    for (std::size_t j = 0; j < alphas.size(); ++j) {
      if (j) out << ' ';
      out << format_full(alphas[j]);
    }
    out << '\n';
  }
}

CircuitDescription read_circuit(std::istream& in) {
  TokenReader reader(in);
  reader.expect("circuit-v1");
  reader.expect("qubits");
  const std::int64_t n_qubits = reader.next_count("qubit count");
  if (n_qubits < 1 || n_qubits > kMaxQubits) {
    reader.fail("qubit count " + std::to_string(n_qubits) +
                " outside supported range");
  }
  reader.expect("dt");
  const double dt = reader.next_double("dt");
  if (!(dt > 0.0)) reader.fail("dt must be positive");

  CircuitDescription circuit;
  circuit.dt = dt;
  reader.expect("drift");
  circuit.drift = read_term_block(reader, reader.next_count("drift term count"),
                                  static_cast<int>(n_qubits));
  reader.expect("controls");
  const std::int64_t n_controls = reader.next_count("control count");
  if (n_controls < 1) reader.fail("at least one control is required");
  for (std::int64_t j = 0; j < n_controls; ++j) {
    reader.expect("control");
    circuit.controls.push_back(
        read_term_block(reader, reader.next_count("control term count"),
                        static_cast<int>(n_qubits)));
  }
  reader.expect("layers");
  const std::int64_t n_layers = reader.next_count("layer count");
  const std::int64_t layer_width = reader.next_count("layer width");
  if (layer_width != n_controls) {
    reader.fail("layer width " + std::to_string(layer_width) +
                " does not match control count " + std::to_string(n_controls));
  }
  circuit.layers.reserve(static_cast<std::size_t>(n_layers));
  for (std::int64_t k = 0; k < n_layers; ++k) {
    std::vector<double> alphas;
    alphas.reserve(static_cast<std::size_t>(layer_width));
    for (std::int64_t j = 0; j < layer_width; ++j) {
      alphas.push_back(reader.next_double("layer parameter"));
    }
    circuit.layers.push_back(std::move(alphas));
  }
  if (!reader.at_end()) {
    reader.fail("unexpected trailing content");
  }
  return circuit;
}

void write_summary(std::ostream& out, const RunTrace& trace,
                   const CircuitDescription& circuit) {
  if (trace.layers.empty()) {
    throw ValidationError("cannot summarize an empty trace");
  }
  const LayerRecord& last = trace.layers.back();
  const std::size_t n_registers = last.energies.size();

  out << "registers: " << n_registers << "  controls: " << circuit.controls.size()
      << "  layers: " << trace.layers.size() << "  dt: " << format_human(circuit.dt)
      << '\n';
  out << "estimations: " << last.estimation_count << " per layer, "
      << trace.total_estimations() << " total\n";
  out << '\n';
  out << "register  target_eigenvalue  initial_energy  final_energy  "
         "final_gap  initial_fidelity  final_fidelity\n";
  for (std::size_t q = 0; q < n_registers; ++q) {
    const double target = trace.target_eigenvalues[q];
    out << q << "  " << format_human(target) << "  "
        << format_human(trace.initial_energies[q]) << "  "
        << format_human(last.energies[q]) << "  "
        << format_human(std::abs(last.energies[q] - target)) << "  "
        << format_human(trace.initial_fidelities[q]) << "  "
        << format_human(last.fidelities[q]) << '\n';
  }
  out << '\n';
  out << "lyapunov: initial " << format_human(trace.initial_lyapunov)
      << ", final " << format_human(last.lyapunov) << '\n';
  out << "max register overlap (final layer): "
      << format_human(last.max_abs_overlap) << '\n';
  out << "next-layer controller values:";
  for (double a : trace.next_alphas) out << ' ' << format_human(a);
  out << '\n';
}

void write_states_csv(std::ostream& out, const std::vector<StateVector>& states) {
  if (states.empty()) {
    throw ValidationError("no states to dump");
  }
  const std::int64_t dim = states.front().dim();
  for (const StateVector& state : states) {
    if (state.dim() != dim) {
      throw DimensionError("state dumps require equal dimensions");
    }
  }
  out << "index";
  for (std::size_t q = 0; q < states.size(); ++q) {
    out << ",re_" << q << ",im_" << q;
  }
  out << '\n';
  for (std::int64_t b = 0; b < dim; ++b) {
    out << b;
    for (const StateVector& state : states) {
      out << ',' << format_full(state.amplitudes()(b).real()) << ','
          << format_full(state.amplitudes()(b).imag());
    }
    out << '\n';
  }
}

}  // namespace qlc
