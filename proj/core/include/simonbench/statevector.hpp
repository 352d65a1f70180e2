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

#ifndef SIMONBENCH_STATEVECTOR_HPP
#define SIMONBENCH_STATEVECTOR_HPP

#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "simonbench/bitstring.hpp"
#include "simonbench/circuit.hpp"

namespace simonbench {

using Amplitude = std::complex<double>;

/// 2^26 double-precision amplitudes take 1 GiB.
inline constexpr std::size_t kDefaultQubitCap = 26;

class CapacityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Pauli : unsigned char { kI = 0, kX = 1, kY = 2, kZ = 3 };

/// Dense pure state over k qubits.
///
/// Qubit line 0 is the most significant bit of the basis index: line q maps
/// to index bit (k - 1 - q), so the basis index read in binary is the
/// MSB-left bitstring of the lines.
class Statevector {
 public:
  /// |0...0>. Throws CapacityError when k is 0 or above `cap`.
  explicit Statevector(std::size_t num_qubits, std::size_t cap = kDefaultQubitCap);

  std::size_t num_qubits() const { return num_qubits_; }
  std::size_t dimension() const { return amplitudes_.size(); }
  std::span<const Amplitude> amplitudes() const { return amplitudes_; }
  std::span<Amplitude> amplitudes() { return amplitudes_; }

  double norm() const;
  double probability(std::uint64_t index) const { return std::norm(amplitudes_.at(index)); }

  /// Unitary ops only; MEASURE throws std::invalid_argument.
  void apply(const GateOp& op);

  void apply_h(std::size_t q);
  void apply_x(std::size_t q);
  void apply_y(std::size_t q);
  void apply_z(std::size_t q);
  void apply_pauli(Pauli p, std::size_t q);
  void apply_cnot(std::size_t control, std::size_t target);
  void apply_swap(std::size_t a, std::size_t b);

  /// Basis index at which the cumulative probability first exceeds u * norm^2.
  std::uint64_t sample_index(double u) const;

 private:
  std::uint64_t mask(std::size_t q) const;
  void check(std::size_t q) const;

  std::size_t num_qubits_;
  std::vector<Amplitude> amplitudes_;
};

/// Samples a full computational-basis outcome, MSB-left over all lines.
template <class Rng>
Bitstring sample_measurement(const Statevector& state, Rng& rng);

/// 53-bit uniform double in [0, 1) built from one 64-bit draw.
template <class Rng>
double uniform01(Rng& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

template <class Rng>
Bitstring sample_measurement(const Statevector& state, Rng& rng) {
  return Bitstring::from_index(state.sample_index(uniform01(rng)), state.num_qubits());
}

}  // namespace simonbench

#endif  // SIMONBENCH_STATEVECTOR_HPP
