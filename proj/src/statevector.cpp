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

#include "qlc/statevector.hpp"

#include <bit>
#include <cmath>
#include <string>

#include "qlc/errors.hpp"

namespace qlc {

namespace {

void check_state_qubits(int n_qubits) {
  if (n_qubits < 1 || n_qubits > kMaxQubits) {
    throw ValidationError("state vectors support 1 to " +
                          std::to_string(kMaxQubits) + " qubits, got " +
                          std::to_string(n_qubits));
  }
}

std::uint64_t to_index_mask(std::uint64_t bits, int n_qubits) {
  std::uint64_t out = 0;
  for (int q = 0; q < n_qubits; ++q) {
    if ((bits >> q) & 1) out |= std::uint64_t{1} << (n_qubits - 1 - q);
  }
  return out;
}

std::complex<double> phase_from_exponent(int e) {
  switch (e & 3) {
    case 0: return {1.0, 0.0};
    case 1: return {0.0, 1.0};
    case 2: return {-1.0, 0.0};
    default: return {0.0, -1.0};
  }
}

}  // namespace

StateVector::StateVector(int n_qubits, Eigen::VectorXcd amplitudes)
    : n_qubits_(n_qubits), amplitudes_(std::move(amplitudes)) {
  check_state_qubits(n_qubits);
  const std::int64_t dim = std::int64_t{1} << n_qubits;
  if (amplitudes_.size() != dim) {
    throw DimensionError("amplitude vector has length " +
                         std::to_string(amplitudes_.size()) + ", expected " +
                         std::to_string(dim));
  }
  const double norm = amplitudes_.norm();
  if (std::abs(norm - 1.0) > kNormTolerance) {
    throw InvariantError("state vector norm " + std::to_string(norm) +
                         " deviates from 1 beyond tolerance");
  }
}

StateVector prepare_basis_state(int n_qubits, std::string_view label) {
  check_state_qubits(n_qubits);
  if (static_cast<int>(label.size()) != n_qubits) {
    throw ValidationError("basis label length " + std::to_string(label.size()) +
                          " does not match qubit count " +
                          std::to_string(n_qubits));
  }
  std::uint64_t index = 0;
  for (int q = 0; q < n_qubits; ++q) {
    const char c = label[static_cast<std::size_t>(q)];
    if (c == '1') {
      index |= std::uint64_t{1} << (n_qubits - 1 - q);
    } else if (c != '0') {
      throw ValidationError(std::string("invalid basis label character '") + c +
                            "' (expected 0 or 1)");
    }
  }
  Eigen::VectorXcd amplitudes =
      Eigen::VectorXcd::Zero(std::int64_t{1} << n_qubits);
  amplitudes(static_cast<std::int64_t>(index)) = 1.0;
  return StateVector(n_qubits, std::move(amplitudes));
}

StateVector prepare_pm_state(int n_qubits, std::string_view signs) {
  check_state_qubits(n_qubits);
  if (static_cast<int>(signs.size()) != n_qubits) {
    throw ValidationError("sign string length " + std::to_string(signs.size()) +
                          " does not match qubit count " +
                          std::to_string(n_qubits));
  }
  std::uint64_t minus_mask = 0;
  for (int q = 0; q < n_qubits; ++q) {
    const char c = signs[static_cast<std::size_t>(q)];
    if (c == '-') {
      minus_mask |= std::uint64_t{1} << (n_qubits - 1 - q);
    } else if (c != '+') {
      throw ValidationError(std::string("invalid sign character '") + c +
                            "' (expected + or -)");
    }
  }
  const std::int64_t dim = std::int64_t{1} << n_qubits;
  const double scale = std::pow(2.0, -0.5 * n_qubits);
  Eigen::VectorXcd amplitudes(dim);
  for (std::int64_t b = 0; b < dim; ++b) {
    const int flips = std::popcount(minus_mask & static_cast<std::uint64_t>(b));
    amplitudes(b) = (flips % 2) ? -scale : scale;
  }
  return StateVector(n_qubits, std::move(amplitudes));
}

double expectation(const StateVector& state, const PauliSum& observable) {
  if (state.n_qubits() != observable.n_qubits()) {
    throw DimensionError("expectation: state has " +
                         std::to_string(state.n_qubits()) +
                         " qubits, observable has " +
                         std::to_string(observable.n_qubits()));
  }
  const Eigen::VectorXcd& amps = state.amplitudes();
  const std::int64_t dim = amps.size();
  const int n = state.n_qubits();
  std::complex<double> total = 0.0;
  for (const auto& t : observable.terms()) {
    const std::uint64_t x_idx = to_index_mask(t.string.x_bits(), n);
    const std::uint64_t z_idx = to_index_mask(t.string.z_bits(), n);
    const std::complex<double> base = phase_from_exponent(
        std::popcount(t.string.x_bits() & t.string.z_bits()));
    // <phi|S|phi> = sum_b conj(phi[b XOR x]) * phase(b) * phi[b].
    std::complex<double> term = 0.0;
    for (std::int64_t b = 0; b < dim; ++b) {
      const double sign =
          (std::popcount(z_idx & static_cast<std::uint64_t>(b)) % 2) ? -1.0 : 1.0;
      term += std::conj(amps(static_cast<std::int64_t>(
                  static_cast<std::uint64_t>(b) ^ x_idx))) *
              (sign * amps(b));
    }
    total += t.coefficient * base * term;
  }
  if (std::abs(total.imag()) >= 1e-12) {
    throw InvariantError("expectation of a Hermitian observable has imaginary "
                         "residue " + std::to_string(total.imag()));
  }
  return total.real();
}

std::complex<double> overlap(const StateVector& a, const StateVector& b) {
  if (a.n_qubits() != b.n_qubits()) {
    throw DimensionError("overlap: qubit counts differ (" +
                         std::to_string(a.n_qubits()) + " vs " +
                         std::to_string(b.n_qubits()) + ")");
  }
  return a.amplitudes().dot(b.amplitudes());
}

}  // namespace qlc
