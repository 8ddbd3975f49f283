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

#include "qlc/pauli.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <istream>
#include <sstream>

#include "qlc/errors.hpp"

namespace qlc {

namespace {

// Strings are stored in 64-bit masks; qubit counts beyond this are
// unrepresentable regardless of the dense cap.
constexpr int kMaxStringQubits = 64;

int popcount(std::uint64_t v) { return std::popcount(v); }

std::uint64_t qubit_mask(int n_qubits) {
  return n_qubits == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n_qubits) - 1);
}

void check_qubit_count(int n_qubits) {
  if (n_qubits < 1 || n_qubits > kMaxStringQubits) {
    throw ValidationError("qubit count must be between 1 and 64, got " +
                          std::to_string(n_qubits));
  }
}

void check_same_qubits(int a, int b, const char* what) {
  if (a != b) {
    throw DimensionError(std::string(what) + ": qubit counts differ (" +
                         std::to_string(a) + " vs " + std::to_string(b) + ")");
  }
}

// Exponent e in a * b = i^e * c for strings a, b with XOR masks c. Derived
// from i^{x.z} X^x Z^z normal form: commuting Z^{z_a} past X^{x_b} costs
// (-1)^{z_a . x_b}, and re-normalizing the product costs the i^{x.z} factors.
int product_phase_exponent(std::uint64_t xa, std::uint64_t za, std::uint64_t xb,
                           std::uint64_t zb) {
  const std::uint64_t xc = xa ^ xb;
  const std::uint64_t zc = za ^ zb;
  int e = popcount(xa & za) + popcount(xb & zb) - popcount(xc & zc) +
          2 * popcount(za & xb);
  return ((e % 4) + 4) % 4;
}

std::complex<double> phase_from_exponent(int e) {
  switch (e & 3) {
    case 0: return {1.0, 0.0};
    case 1: return {0.0, 1.0};
    case 2: return {-1.0, 0.0};
    default: return {0.0, -1.0};
  }
}

// Maps a qubit-indexed mask (bit q = qubit q) to an amplitude-index mask
// (bit n-1-q = qubit q).
std::uint64_t to_index_mask(std::uint64_t bits, int n_qubits) {
  std::uint64_t out = 0;
  for (int q = 0; q < n_qubits; ++q) {
    if ((bits >> q) & 1) out |= std::uint64_t{1} << (n_qubits - 1 - q);
  }
  return out;
}

std::string format_coefficient(double value) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", value);
  return buf;
}

}  // namespace

char pauli_char(Pauli p) {
  switch (p) {
    case Pauli::I: return 'I';
    case Pauli::X: return 'X';
    case Pauli::Y: return 'Y';
    case Pauli::Z: return 'Z';
  }
  return '?';
}

Pauli pauli_from_char(char c) {
  switch (c) {
    case 'I': return Pauli::I;
    case 'X': return Pauli::X;
    case 'Y': return Pauli::Y;
    case 'Z': return Pauli::Z;
    default:
      throw ValidationError(std::string("invalid Pauli factor '") + c +
                            "' (expected I, X, Y, or Z)");
  }
}

PauliString::PauliString(int n_qubits, std::uint64_t x_bits, std::uint64_t z_bits)
    : n_qubits_(n_qubits), x_bits_(x_bits), z_bits_(z_bits) {
  check_qubit_count(n_qubits);
  const std::uint64_t mask = qubit_mask(n_qubits);
  if ((x_bits & ~mask) != 0 || (z_bits & ~mask) != 0) {
    throw ValidationError("Pauli mask has bits beyond the qubit count");
  }
}

PauliString PauliString::identity(int n_qubits) {
  return PauliString(n_qubits, 0, 0);
}

PauliString PauliString::from_label(std::string_view label) {
  if (label.empty()) throw ValidationError("empty Pauli label");
  if (label.size() > kMaxStringQubits) {
    throw ValidationError("Pauli label longer than 64 qubits");
  }
  std::uint64_t x = 0, z = 0;
  for (std::size_t q = 0; q < label.size(); ++q) {
    switch (pauli_from_char(label[q])) {
      case Pauli::I: break;
      case Pauli::X: x |= std::uint64_t{1} << q; break;
      case Pauli::Y: x |= std::uint64_t{1} << q; z |= std::uint64_t{1} << q; break;
      case Pauli::Z: z |= std::uint64_t{1} << q; break;
    }
  }
  return PauliString(static_cast<int>(label.size()), x, z);
}

PauliString PauliString::single(int n_qubits, int qubit, Pauli pauli) {
  check_qubit_count(n_qubits);
  if (qubit < 0 || qubit >= n_qubits) {
    throw ValidationError("qubit index " + std::to_string(qubit) +
                          " out of range for " + std::to_string(n_qubits) +
                          " qubits");
  }
  const std::uint64_t bit = std::uint64_t{1} << qubit;
  std::uint64_t x = 0, z = 0;
  if (pauli == Pauli::X || pauli == Pauli::Y) x = bit;
  if (pauli == Pauli::Z || pauli == Pauli::Y) z = bit;
  return PauliString(n_qubits, x, z);
}

Pauli PauliString::factor(int qubit) const {
  if (qubit < 0 || qubit >= n_qubits_) {
    throw ValidationError("qubit index out of range");
  }
  const bool x = (x_bits_ >> qubit) & 1;
  const bool z = (z_bits_ >> qubit) & 1;
  if (x && z) return Pauli::Y;
  if (x) return Pauli::X;
  if (z) return Pauli::Z;
  return Pauli::I;
}

std::string PauliString::label() const {
  std::string out(static_cast<std::size_t>(n_qubits_), 'I');
  for (int q = 0; q < n_qubits_; ++q) out[static_cast<std::size_t>(q)] = pauli_char(factor(q));
  return out;
}

int PauliString::weight() const { return popcount(x_bits_ | z_bits_); }

bool PauliString::commutes_with(const PauliString& other) const {
  check_same_qubits(n_qubits_, other.n_qubits_, "commutes_with");
  const int anti = popcount(x_bits_ & other.z_bits_) +
                   popcount(z_bits_ & other.x_bits_);
  return (anti % 2) == 0;
}

PauliProduct multiply(const PauliString& a, const PauliString& b) {
  check_same_qubits(a.n_qubits(), b.n_qubits(), "multiply");
  const int e = product_phase_exponent(a.x_bits(), a.z_bits(), b.x_bits(), b.z_bits());
  return PauliProduct{phase_from_exponent(e),
                      PauliString(a.n_qubits(), a.x_bits() ^ b.x_bits(),
                                  a.z_bits() ^ b.z_bits())};
}

PauliSum::PauliSum(int n_qubits) : n_qubits_(n_qubits) { check_qubit_count(n_qubits); }

PauliSum::PauliSum(int n_qubits, std::vector<Term> terms) : n_qubits_(n_qubits) {
  check_qubit_count(n_qubits);
  for (const Term& t : terms) {
    check_same_qubits(n_qubits, t.string.n_qubits(), "PauliSum term");
    if (!std::isfinite(t.coefficient)) {
      throw ValidationError("non-finite coefficient in PauliSum term " +
                            t.string.label());
    }
  }
  std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) {
    return a.string < b.string;
  });
  terms_.reserve(terms.size());
  for (std::size_t i = 0; i < terms.size();) {
    double coefficient = terms[i].coefficient;
    std::size_t j = i + 1;
    while (j < terms.size() && terms[j].string == terms[i].string) {
      coefficient += terms[j].coefficient;
      ++j;
    }
    if (std::abs(coefficient) >= kCoeffEpsilon) {
      terms_.push_back(Term{coefficient, terms[i].string});
    }
    i = j;
  }
}

bool operator==(const PauliSum& a, const PauliSum& b) {
  if (a.n_qubits_ != b.n_qubits_ || a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    if (a.terms_[i].coefficient != b.terms_[i].coefficient ||
        a.terms_[i].string != b.terms_[i].string) {
      return false;
    }
  }
  return true;
}

std::string PauliSum::to_text() const {
  std::string out;
  for (const Term& t : terms_) {
    out += format_coefficient(t.coefficient);
    out += ' ';
    out += t.string.label();
    out += '\n';
  }
  return out;
}

PauliSum PauliSum::parse_text(std::istream& in) {
  std::vector<Term> terms;
  int n_qubits = 0;
  std::string line;
  int line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    std::istringstream fields(line);
    std::string coeff_token;
    if (!(fields >> coeff_token) || coeff_token[0] == '#') continue;
    std::string label_token;
    if (!(fields >> label_token)) {
      throw ValidationError("line " + std::to_string(line_number) +
                            ": expected `<coefficient> <factor-string>`");
    }
    std::string extra;
    if (fields >> extra) {
      throw ValidationError("line " + std::to_string(line_number) +
                            ": unexpected trailing content '" + extra + "'");
    }
    char* end = nullptr;
    const double coefficient = std::strtod(coeff_token.c_str(), &end);
    if (end != coeff_token.c_str() + coeff_token.size() || !std::isfinite(coefficient)) {
      throw ValidationError("line " + std::to_string(line_number) +
                            ": invalid coefficient '" + coeff_token + "'");
    }
    PauliString string = [&] {
      try {
        return PauliString::from_label(label_token);
      } catch (const ValidationError& e) {
        throw ValidationError("line " + std::to_string(line_number) + ": " + e.what());
      }
    }();
    if (n_qubits == 0) {
      n_qubits = string.n_qubits();
    } else if (string.n_qubits() != n_qubits) {
      throw ValidationError("line " + std::to_string(line_number) +
                            ": factor-string length " +
                            std::to_string(string.n_qubits()) +
                            " conflicts with earlier length " +
                            std::to_string(n_qubits));
    }
    terms.push_back(Term{coefficient, string});
  }
  if (terms.empty()) {
    throw ValidationError("no Pauli terms found in input");
  }
  return PauliSum(n_qubits, std::move(terms));
}

PauliSum PauliSum::parse_text(const std::string& text) {
  std::istringstream in(text);
  return parse_text(in);
}

PauliSum commutator_i(const PauliSum& a, const PauliSum& b) {
  check_same_qubits(a.n_qubits(), b.n_qubits(), "commutator_i");
  std::vector<PauliSum::Term> terms;
  for (const auto& ta : a.terms()) {
    for (const auto& tb : b.terms()) {
      if (ta.string.commutes_with(tb.string)) continue;
      // For anticommuting strings i[a_s, b_s] = 2 i * a_s b_s, and the product
      // phase is +-i, so each contribution is real: -2 for phase +i (e == 1),
      // +2 for phase -i (e == 3).
      const int e = product_phase_exponent(ta.string.x_bits(), ta.string.z_bits(),
                                           tb.string.x_bits(), tb.string.z_bits());
      assert(e == 1 || e == 3);
      const double sign = (e == 1) ? -2.0 : 2.0;
      terms.push_back(PauliSum::Term{
          sign * ta.coefficient * tb.coefficient,
          PauliString(a.n_qubits(), ta.string.x_bits() ^ tb.string.x_bits(),
                      ta.string.z_bits() ^ tb.string.z_bits())});
    }
  }
  return PauliSum(a.n_qubits(), std::move(terms));
}

PauliSum scale_and_add(const std::vector<std::pair<double, PauliSum>>& sums) {
  if (sums.empty()) {
    throw ValidationError("scale_and_add needs at least one entry");
  }
  const int n_qubits = sums.front().second.n_qubits();
  std::vector<PauliSum::Term> terms;
  for (const auto& [weight, sum] : sums) {
    check_same_qubits(n_qubits, sum.n_qubits(), "scale_and_add");
    if (!std::isfinite(weight)) {
      throw ValidationError("non-finite weight in scale_and_add");
    }
    for (const auto& t : sum.terms()) {
      terms.push_back(PauliSum::Term{weight * t.coefficient, t.string});
    }
  }
  return PauliSum(n_qubits, std::move(terms));
}

Eigen::MatrixXcd to_dense(const PauliSum& sum) {
  const int n = sum.n_qubits();
  if (n > kMaxQubits) {
    throw ValidationError("dense realization capped at " +
                          std::to_string(kMaxQubits) + " qubits, got " +
                          std::to_string(n));
  }
  const std::int64_t dim = std::int64_t{1} << n;
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(dim, dim);
  for (const auto& t : sum.terms()) {
    // S|b> = i^{|x & z|} (-1)^{|z_idx & b|} |b XOR x_idx> columnwise.
    const std::uint64_t x_idx = to_index_mask(t.string.x_bits(), n);
    const std::uint64_t z_idx = to_index_mask(t.string.z_bits(), n);
    const std::complex<double> base =
        t.coefficient *
        phase_from_exponent(popcount(t.string.x_bits() & t.string.z_bits()));
    for (std::int64_t b = 0; b < dim; ++b) {
      const double sign =
          (popcount(z_idx & static_cast<std::uint64_t>(b)) % 2) ? -1.0 : 1.0;
      out(static_cast<std::int64_t>(static_cast<std::uint64_t>(b) ^ x_idx), b) +=
          base * sign;
    }
  }
  return out;
}

}  // namespace qlc
