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

#ifndef QLC_PAULI_HPP
#define QLC_PAULI_HPP

#include <Eigen/Dense>
#include <compare>
#include <complex>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace qlc {

// Dense realization is capped at this many qubits (4096-dimensional matrices).
inline constexpr int kMaxQubits = 12;

// Canonicalization drops terms whose coefficient falls below this magnitude.
// Commutator cancellation produces dust well under it; genuine coefficients
// sit orders of magnitude above.
inline constexpr double kCoeffEpsilon = 1e-14;

enum class Pauli : std::uint8_t { I = 0, X = 1, Y = 2, Z = 3 };

char pauli_char(Pauli p);
Pauli pauli_from_char(char c);

// A tensor product of single-qubit Pauli factors, stored as packed X/Z bit
// masks: factor on qubit q is i^{x_q z_q} X^{x_q} Z^{z_q}, with bit q of each
// mask belonging to qubit q. Qubit 0 is the leftmost character of a label.
// Hermitian, unitary, and self-inverse by construction.
class PauliString {
 public:
  PauliString(int n_qubits, std::uint64_t x_bits, std::uint64_t z_bits);

  static PauliString identity(int n_qubits);
  // Parses a label such as "XXI"; the string length fixes the qubit count.
  static PauliString from_label(std::string_view label);
  // Identity everywhere except `pauli` on `qubit`.
  static PauliString single(int n_qubits, int qubit, Pauli pauli);

  int n_qubits() const { return n_qubits_; }
  std::uint64_t x_bits() const { return x_bits_; }
  std::uint64_t z_bits() const { return z_bits_; }

  Pauli factor(int qubit) const;
  std::string label() const;
  bool is_identity() const { return x_bits_ == 0 && z_bits_ == 0; }

  // Number of qubits carrying a non-identity factor.
  int weight() const;

  // True iff the two strings commute as operators. Strings either commute or
  // anticommute; the test is the symplectic inner-product parity.
  bool commutes_with(const PauliString& other) const;

  friend bool operator==(const PauliString&, const PauliString&) = default;
  // Orders by (n_qubits, x_bits, z_bits); fixes the canonical term order.
  friend std::strong_ordering operator<=>(const PauliString&, const PauliString&) = default;

 private:
  int n_qubits_;
  std::uint64_t x_bits_;
  std::uint64_t z_bits_;
};

// Result of multiplying two Pauli strings: phase * string equals the operator
// product. The phase is always one of {+1, -1, +i, -i}.
struct PauliProduct {
  std::complex<double> phase;
  PauliString string;
};

PauliProduct multiply(const PauliString& a, const PauliString& b);

// A real-weighted sum of Pauli strings over a fixed qubit count; represents a
// Hermitian operator. Always held in canonical form: terms sorted by string,
// duplicates merged, coefficients below kCoeffEpsilon dropped.
class PauliSum {
 public:
  struct Term {
    double coefficient;
    PauliString string;
  };

  // The empty sum (zero operator) on n_qubits.
  explicit PauliSum(int n_qubits);
  // Canonicalizes the given terms. All strings must share n_qubits.
  PauliSum(int n_qubits, std::vector<Term> terms);

  int n_qubits() const { return n_qubits_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool empty() const { return terms_.empty(); }

  // Text form: one `<coefficient> <label>` line per term, qubit 0 leftmost.
  // Coefficients print with enough digits to round-trip exactly.
  std::string to_text() const;
  // Parses the text form. Every line must carry a finite coefficient and a
  // label of consistent length over {I, X, Y, Z}. Blank lines and lines
  // starting with '#' are skipped. Errors cite the offending line number.
  static PauliSum parse_text(std::istream& in);
  static PauliSum parse_text(const std::string& text);

  friend bool operator==(const PauliSum&, const PauliSum&);

 private:
  int n_qubits_;
  std::vector<Term> terms_;
};

// The Hermitian operator i[a, b] = i(ab - ba) as a canonical PauliSum. Only
// anticommuting string pairs contribute, and each contribution is real, so
// the computation never leaves real arithmetic.
PauliSum commutator_i(const PauliSum& a, const PauliSum& b);

// Canonical merge of weight * sum over all entries.
PauliSum scale_and_add(const std::vector<std::pair<double, PauliSum>>& sums);

// Dense 2^n x 2^n matrix realization. Index bit (n-1-q) of the amplitude
// index belongs to qubit q, so qubit 0 is the most significant bit.
Eigen::MatrixXcd to_dense(const PauliSum& sum);

}  // namespace qlc

#endif  // QLC_PAULI_HPP
