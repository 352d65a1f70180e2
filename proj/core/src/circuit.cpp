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

#include "simonbench/circuit.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace simonbench {

std::string_view gate_name(GateKind kind) {
  switch (kind) {
    case GateKind::kH:
      return "h";
    case GateKind::kX:
      return "x";
    case GateKind::kCnot:
      return "cx";
    case GateKind::kSwap:
      return "swap";
    case GateKind::kMeasure:
      return "measure";
  }
  return "?";
}

Circuit::Circuit(std::size_t width, std::size_t num_clbits, std::size_t register_split)
    : width_(width), num_clbits_(num_clbits), register_split_(register_split) {
  if (register_split_ > width_) {
    throw std::invalid_argument("circuit: register split beyond width");
  }
}

Circuit& Circuit::h(std::size_t q) { return append(GateOp{GateKind::kH, {q, 0}}); }

Circuit& Circuit::x(std::size_t q) { return append(GateOp{GateKind::kX, {q, 0}}); }

Circuit& Circuit::cnot(std::size_t control, std::size_t target) {
  return append(GateOp{GateKind::kCnot, {control, target}});
}

Circuit& Circuit::swap(std::size_t a, std::size_t b, bool inserted) {
  return append(GateOp{GateKind::kSwap, {a, b}, 0, inserted});
}

Circuit& Circuit::measure(std::size_t q, std::size_t clbit) {
  return append(GateOp{GateKind::kMeasure, {q, 0}, clbit});
}

Circuit& Circuit::append(const GateOp& op) {
  const std::string where = std::string(gate_name(op.kind)) + " at op " + std::to_string(ops_.size());
  for (std::size_t i = 0; i < op.arity(); ++i) {
    if (op.qubits[i] >= width_) {
      throw std::invalid_argument("circuit: qubit " + std::to_string(op.qubits[i]) +
                                  " out of range for width " + std::to_string(width_) + " (" +
                                  where + ")");
    }
  }
  if (op.is_two_qubit() && op.qubits[0] == op.qubits[1]) {
    throw std::invalid_argument("circuit: repeated qubit " + std::to_string(op.qubits[0]) + " (" +
                                where + ")");
  }
  if (op.kind == GateKind::kMeasure) {
    if (op.clbit >= num_clbits_) {
      throw std::invalid_argument("circuit: classical bit " + std::to_string(op.clbit) +
                                  " out of range (" + where + ")");
    }
    measured_ = true;
  } else if (measured_) {
    throw std::invalid_argument("circuit: unitary op after measurement (" + where + ")");
  }
  GateOp stored = op;
  if (!stored.is_two_qubit()) stored.qubits[1] = 0;
  if (stored.kind != GateKind::kMeasure) stored.clbit = 0;
  if (stored.kind != GateKind::kSwap) stored.inserted_swap = false;
  ops_.push_back(stored);
  return *this;
}

Circuit& Circuit::append(const Circuit& fragment) {
  if (fragment.width_ > width_) {
    throw std::invalid_argument("circuit: fragment wider than circuit");
  }
  for (const auto& op : fragment.ops_) append(op);
  return *this;
}

std::size_t Circuit::count(GateKind kind) const {
  return static_cast<std::size_t>(
      std::count_if(ops_.begin(), ops_.end(), [kind](const GateOp& op) { return op.kind == kind; }));
}

std::size_t Circuit::two_qubit_count() const {
  return static_cast<std::size_t>(
      std::count_if(ops_.begin(), ops_.end(), [](const GateOp& op) { return op.is_two_qubit(); }));
}

Circuit new_circuit(std::size_t n) {
  if (n < 2) {
    throw std::invalid_argument("circuit: register size must be at least 2, got " +
                                std::to_string(n));
  }
  return Circuit(2 * n, 2 * n, n);
}

}  // namespace simonbench
