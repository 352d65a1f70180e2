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

#ifndef SIMONBENCH_SIMULATOR_HPP
#define SIMONBENCH_SIMULATOR_HPP

#include <cstddef>
#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "simonbench/bitstring.hpp"
#include "simonbench/circuit.hpp"
#include "simonbench/noise.hpp"
#include "simonbench/statevector.hpp"

namespace simonbench {

/// One shot's classical bits, split at the circuit's register_split.
struct ShotRecord {
  Bitstring register1;
  Bitstring register2;
  std::size_t shot = 0;

  friend bool operator==(const ShotRecord&, const ShotRecord&) = default;
};

enum class NoisyEngine {
  /// Ideal state computed once; each shot propagates its sampled Pauli errors
  /// as a frame through the (Clifford) circuit and flips the ideal sample.
  kPauliFrame,
  /// Each shot re-simulates the full statevector with its Paulis applied.
  kStatevector,
};

struct SimOptions {
  std::size_t qubit_cap = kDefaultQubitCap;
  /// Shot-level worker threads. Results do not depend on this.
  std::size_t workers = 1;
  NoisyEngine engine = NoisyEngine::kPauliFrame;
};

using ShotRng = std::mt19937_64;

/// SplitMix64 finalizer over (seed, stream); used to derive independent
/// seeds for jobs and shots.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream);
ShotRng shot_rng(std::uint64_t seed, std::uint64_t shot);

/// A circuit relabelled onto the qubits it actually touches, together with
/// its ideal output distribution. Reusable across runs and seeds.
class PreparedCircuit {
 public:
  /// Throws CapacityError when the touched qubit count exceeds the cap.
  explicit PreparedCircuit(const Circuit& circuit, std::size_t qubit_cap = kDefaultQubitCap);

  const Circuit& compact_circuit() const { return compact_; }
  /// physical_qubits()[i] is the original line of compact qubit i.
  const std::vector<std::size_t>& physical_qubits() const { return physical_; }
  std::size_t num_qubits() const { return physical_.size(); }
  std::size_t register_split() const { return split_; }
  std::size_t num_clbits() const { return compact_.num_clbits(); }

  /// Ideal outcome for a uniform draw u in [0, 1), as a basis index over the
  /// compact qubits (compact qubit 0 is the most significant bit).
  std::uint64_t sample_ideal(double u) const;
  /// Number of basis states carrying probability.
  std::size_t support_size() const { return support_.size(); }

 private:
  Circuit compact_;
  std::vector<std::size_t> physical_;
  std::size_t split_;
  std::vector<std::uint64_t> support_;
  std::vector<double> cumulative_;
};

// Seeding contract: shot i of a run draws only from shot_rng(seed, i). Its
// first draw picks the outcome, the following draws decide gate errors in op
// order and finally readout flips in measurement order. The all-zero noise
// model therefore reproduces run_ideal exactly.

std::vector<ShotRecord> run_ideal(const PreparedCircuit& prepared, std::size_t shots,
                                  std::uint64_t seed, const SimOptions& options = {});
std::vector<ShotRecord> run_ideal(const Circuit& circuit, std::size_t shots, std::uint64_t seed,
                                  const SimOptions& options = {});

/// Throws std::invalid_argument for an invalid model (including
/// p2 * multiplier > 1) and CapacityError when the circuit is too wide.
std::vector<ShotRecord> run_noisy(const PreparedCircuit& prepared, const NoiseModel& model,
                                  std::size_t shots, std::uint64_t seed,
                                  const SimOptions& options = {});
std::vector<ShotRecord> run_noisy(const Circuit& circuit, const NoiseModel& model,
                                  std::size_t shots, std::uint64_t seed,
                                  const SimOptions& options = {});

/// Applies every unitary op to |0...0> over the full circuit width.
Statevector simulate_unitary(const Circuit& circuit, std::size_t qubit_cap = kDefaultQubitCap);

}  // namespace simonbench

#endif  // SIMONBENCH_SIMULATOR_HPP
