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

#ifndef SIMONBENCH_CIRCUIT_HPP
#define SIMONBENCH_CIRCUIT_HPP

#include <array>
#include <cstddef>
#include <string_view>
#include <vector>

namespace simonbench {

enum class GateKind : unsigned char { kH, kX, kCnot, kSwap, kMeasure };

std::string_view gate_name(GateKind kind);

struct GateOp {
  GateKind kind = GateKind::kH;
  /// Line indices. For CNOT, qubits[0] is the control and qubits[1] the target.
  std::array<std::size_t, 2> qubits{};
  /// Classical bit written by a MEASURE; unused otherwise.
  std::size_t clbit = 0;
  /// Set on SWAPs inserted by the router. The noise model scales their error.
  bool inserted_swap = false;

  std::size_t arity() const {
    return (kind == GateKind::kCnot || kind == GateKind::kSwap) ? 2 : 1;
  }
  bool is_two_qubit() const { return arity() == 2; }
  bool is_unitary() const { return kind != GateKind::kMeasure; }

  friend bool operator==(const GateOp&, const GateOp&) = default;
};

/// Ordered gate list over a fixed number of qubit lines.
///
/// Every append is validated: indices must be in range and distinct, and no
/// unitary op may follow a measurement. A Simon circuit over registers of
/// size n has width 2n, 2n classical bits and register_split n.
class Circuit {
 public:
  Circuit(std::size_t width, std::size_t num_clbits, std::size_t register_split = 0);

  std::size_t width() const { return width_; }
  std::size_t num_clbits() const { return num_clbits_; }
  std::size_t register_split() const { return register_split_; }
  const std::vector<GateOp>& ops() const { return ops_; }
  std::size_t size() const { return ops_.size(); }
  bool empty() const { return ops_.empty(); }

  Circuit& h(std::size_t q);
  Circuit& x(std::size_t q);
  Circuit& cnot(std::size_t control, std::size_t target);
  Circuit& swap(std::size_t a, std::size_t b, bool inserted = false);
  Circuit& measure(std::size_t q, std::size_t clbit);

  Circuit& append(const GateOp& op);
  /// Appends every op of `fragment`, which must not be wider than this circuit.
  Circuit& append(const Circuit& fragment);

  std::size_t count(GateKind kind) const;
  std::size_t two_qubit_count() const;
  bool has_measurements() const { return measured_; }

  friend bool operator==(const Circuit&, const Circuit&) = default;

 private:
  std::size_t width_;
  std::size_t num_clbits_;
  std::size_t register_split_;
  std::vector<GateOp> ops_;
  bool measured_ = false;
};

/// Empty Simon circuit: width 2n, 2n classical bits, register split at n.
/// Throws std::invalid_argument for n < 2.
Circuit new_circuit(std::size_t n);

}  // namespace simonbench

#endif  // SIMONBENCH_CIRCUIT_HPP
