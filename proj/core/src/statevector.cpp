// Copyright 2026 The simonbench Authors
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

#include "simonbench/statevector.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

namespace simonbench {

namespace {

// Spreads i around a zero at the position of `bit`.
inline std::uint64_t insert_zero(std::uint64_t i, std::uint64_t bit) {
  return ((i & ~(bit - 1)) << 1) | (i & (bit - 1));
}

}  // namespace

Statevector::Statevector(std::size_t num_qubits, std::size_t cap) : num_qubits_(num_qubits) {
  if (num_qubits == 0) throw CapacityError("statevector: need at least one qubit");
  if (num_qubits > cap) {
    throw CapacityError("statevector: " + std::to_string(num_qubits) +
                        " qubits exceeds the cap of " + std::to_string(cap));
  }
  amplitudes_.assign(std::size_t{1} << num_qubits, Amplitude{0.0, 0.0});
  amplitudes_[0] = 1.0;
}

double Statevector::norm() const {
  double total = 0.0;
  for (const auto& a : amplitudes_) total += std::norm(a);
  return std::sqrt(total);
}

void Statevector::check(std::size_t q) const {
  if (q >= num_qubits_) {
    throw std::out_of_range("statevector: qubit " + std::to_string(q) + " out of range for " +
                            std::to_string(num_qubits_) + " qubits");
  }
}

std::uint64_t Statevector::mask(std::size_t q) const {
  return std::uint64_t{1} << (num_qubits_ - 1 - q);
}

// Single-qubit kernels visit each (i, i | bit) pair once: the outer loop
// strides over blocks of 2 * bit, the inner loop runs over the low half.

void Statevector::apply_h(std::size_t q) {
  check(q);
  const auto bit = mask(q);
  const double r = 1.0 / std::sqrt(2.0);
  const auto dim = amplitudes_.size();
  for (std::uint64_t base = 0; base < dim; base += 2 * bit) {
    for (std::uint64_t i = base; i < base + bit; ++i) {
      const auto a = amplitudes_[i];
      const auto b = amplitudes_[i | bit];
      amplitudes_[i] = (a + b) * r;
      amplitudes_[i | bit] = (a - b) * r;
    }
  }
}

void Statevector::apply_x(std::size_t q) {
  check(q);
  const auto bit = mask(q);
  const auto dim = amplitudes_.size();
  for (std::uint64_t base = 0; base < dim; base += 2 * bit) {
    for (std::uint64_t i = base; i < base + bit; ++i) std::swap(amplitudes_[i], amplitudes_[i | bit]);
  }
}

void Statevector::apply_y(std::size_t q) {
  check(q);
  const auto bit = mask(q);
  const auto dim = amplitudes_.size();
  const Amplitude i_unit{0.0, 1.0};
  for (std::uint64_t base = 0; base < dim; base += 2 * bit) {
    for (std::uint64_t i = base; i < base + bit; ++i) {
      const auto a = amplitudes_[i];
      const auto b = amplitudes_[i | bit];
      amplitudes_[i] = -i_unit * b;
      amplitudes_[i | bit] = i_unit * a;
    }
  }
}

void Statevector::apply_z(std::size_t q) {
  check(q);
  const auto bit = mask(q);
  const auto dim = amplitudes_.size();
  for (std::uint64_t base = 0; base < dim; base += 2 * bit) {
    for (std::uint64_t i = base; i < base + bit; ++i) amplitudes_[i | bit] = -amplitudes_[i | bit];
  }
}

void Statevector::apply_pauli(Pauli p, std::size_t q) {
  switch (p) {
    case Pauli::kI:
      check(q);
      break;
    case Pauli::kX:
      apply_x(q);
      break;
    case Pauli::kY:
      apply_y(q);
      break;
    case Pauli::kZ:
      apply_z(q);
      break;
  }
}

void Statevector::apply_cnot(std::size_t control, std::size_t target) {
  check(control);
  check(target);
  if (control == target) throw std::invalid_argument("statevector: cnot on a single qubit");
  const auto cbit = mask(control);
  const auto tbit = mask(target);
  const auto lo = std::min(cbit, tbit);
  const auto hi = std::max(cbit, tbit);
  const std::uint64_t quarter = amplitudes_.size() / 4;
  // Each i enumerates one index with control=1, target=0.
  for (std::uint64_t i = 0; i < quarter; ++i) {
    const auto base = insert_zero(insert_zero(i, lo), hi) | cbit;
    std::swap(amplitudes_[base], amplitudes_[base | tbit]);
  }
}

void Statevector::apply_swap(std::size_t a, std::size_t b) {
  check(a);
  check(b);
  if (a == b) throw std::invalid_argument("statevector: swap on a single qubit");
  const auto abit = mask(a);
  const auto bbit = mask(b);
  const auto lo = std::min(abit, bbit);
  const auto hi = std::max(abit, bbit);
  const std::uint64_t quarter = amplitudes_.size() / 4;
  for (std::uint64_t i = 0; i < quarter; ++i) {
    const auto base = insert_zero(insert_zero(i, lo), hi);
    std::swap(amplitudes_[base | abit], amplitudes_[base | bbit]);
  }
}

void Statevector::apply(const GateOp& op) {
  switch (op.kind) {
    case GateKind::kH:
      apply_h(op.qubits[0]);
      break;
    case GateKind::kX:
      apply_x(op.qubits[0]);
      break;
    case GateKind::kCnot:
      apply_cnot(op.qubits[0], op.qubits[1]);
      break;
    case GateKind::kSwap:
      apply_swap(op.qubits[0], op.qubits[1]);
      break;
    case GateKind::kMeasure:
      throw std::invalid_argument("statevector: measurement is not a unitary op");
  }
}

std::uint64_t Statevector::sample_index(double u) const {
  double total = 0.0;
  for (const auto& a : amplitudes_) total += std::norm(a);
  const double threshold = u * total;
  double cumulative = 0.0;
  std::uint64_t last_nonzero = 0;
  for (std::uint64_t i = 0; i < amplitudes_.size(); ++i) {
    const double p = std::norm(amplitudes_[i]);
    if (p == 0.0) continue;
    cumulative += p;
    last_nonzero = i;
    if (threshold < cumulative) return i;
  }
  return last_nonzero;
}

}  // namespace simonbench
