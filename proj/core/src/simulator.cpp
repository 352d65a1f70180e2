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

#include "simonbench/simulator.hpp"

#include <algorithm>
#include <exception>
#include <limits>
#include <thread>

namespace simonbench {

namespace {

constexpr std::size_t kUnmapped = std::numeric_limits<std::size_t>::max();
// Probabilities below this are round-off residue of destructive interference.
constexpr double kSupportFloor = 1e-20;

std::uint64_t splitmix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Pauli frame over at most 64 compact qubits.
struct Frame {
  std::uint64_t x = 0;
  std::uint64_t z = 0;

  void h(std::size_t q) {
    const auto bx = (x >> q) & 1U;
    const auto bz = (z >> q) & 1U;
    if (bx != bz) {
      x ^= std::uint64_t{1} << q;
      z ^= std::uint64_t{1} << q;
    }
  }
  void cnot(std::size_t c, std::size_t t) {
    x ^= ((x >> c) & 1U) << t;
    z ^= ((z >> t) & 1U) << c;
  }
  void pauli(Pauli p, std::size_t q) {
    const auto v = static_cast<unsigned>(p);
    // X = 1, Y = 2, Z = 3: x-part set for X and Y, z-part for Y and Z.
    if (v == 1 || v == 2) x ^= std::uint64_t{1} << q;
    if (v == 2 || v == 3) z ^= std::uint64_t{1} << q;
  }
};

// Draws the gate errors of one trajectory and hands each Pauli to `sink`.
// Both engines share this so they consume identical random streams.
template <class Sink>
struct ErrorSampler {
  const NoiseModel& model;
  ShotRng& rng;
  Sink& sink;

  void one_qubit(std::size_t q) {
    if (model.p1 == 0.0) return;
    if (uniform01(rng) < model.p1) {
      const auto p = static_cast<Pauli>(1 + static_cast<unsigned>(uniform01(rng) * 3.0));
      sink.pauli(p, q);
    }
  }
  void two_qubit(std::size_t a, std::size_t b, double p) {
    if (p == 0.0) return;
    if (uniform01(rng) < p) {
      const auto which = 1 + static_cast<unsigned>(uniform01(rng) * 15.0);
      sink.pauli(static_cast<Pauli>(which >> 2), a);
      sink.pauli(static_cast<Pauli>(which & 3U), b);
    }
  }
};

// Runs the unitary ops of `circuit` on `target` (a Frame or a Statevector
// adaptor) with errors drawn from `rng`.
template <class Target>
void run_trajectory(const Circuit& circuit, const NoiseModel& model, ShotRng& rng, Target& target) {
  ErrorSampler<Target> errors{model, rng, target};
  for (const auto& op : circuit.ops()) {
    const auto a = op.qubits[0];
    const auto b = op.qubits[1];
    switch (op.kind) {
      case GateKind::kH:
        target.h(a);
        errors.one_qubit(a);
        break;
      case GateKind::kX:
        target.x(a);
        errors.one_qubit(a);
        break;
      case GateKind::kCnot:
        target.cnot(a, b);
        errors.two_qubit(a, b, model.p2);
        break;
      case GateKind::kSwap: {
        const double p = model.p2 * (op.inserted_swap ? model.swap_error_multiplier : 1.0);
        target.cnot(a, b);
        errors.two_qubit(a, b, p);
        target.cnot(b, a);
        errors.two_qubit(b, a, p);
        target.cnot(a, b);
        errors.two_qubit(a, b, p);
        break;
      }
      case GateKind::kMeasure:
        break;
    }
  }
}

struct FrameTarget {
  Frame frame;
  void h(std::size_t q) { frame.h(q); }
  void x(std::size_t) {}
  void cnot(std::size_t c, std::size_t t) { frame.cnot(c, t); }
  void pauli(Pauli p, std::size_t q) { frame.pauli(p, q); }
};

struct StateTarget {
  Statevector state;
  void h(std::size_t q) { state.apply_h(q); }
  void x(std::size_t q) { state.apply_x(q); }
  void cnot(std::size_t c, std::size_t t) { state.apply_cnot(c, t); }
  void pauli(Pauli p, std::size_t q) { state.apply_pauli(p, q); }
};

template <class ShotFn>
std::vector<ShotRecord> parallel_shots(std::size_t shots, std::size_t workers, ShotFn shot_fn) {
  std::vector<ShotRecord> records(shots);
  workers = std::clamp<std::size_t>(workers, 1, std::max<std::size_t>(shots, 1));
  if (workers == 1) {
    for (std::size_t s = 0; s < shots; ++s) records[s] = shot_fn(s);
    return records;
  }
  std::vector<std::exception_ptr> errors(workers);
  std::vector<std::thread> threads;
  const std::size_t chunk = (shots + workers - 1) / workers;
  for (std::size_t w = 0; w < workers; ++w) {
    threads.emplace_back([&, w] {
      try {
        const auto end = std::min(shots, (w + 1) * chunk);
        for (std::size_t s = w * chunk; s < end; ++s) records[s] = shot_fn(s);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : threads) t.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return records;
}

struct Measurement {
  std::size_t qubit;
  std::size_t clbit;
};

std::vector<Measurement> measurements(const Circuit& compact) {
  std::vector<Measurement> out;
  for (const auto& op : compact.ops()) {
    if (op.kind == GateKind::kMeasure) out.push_back({op.qubits[0], op.clbit});
  }
  return out;
}

// Turns a compact basis index plus the frame's bit flips into a ShotRecord,
// applying readout flips from `rng`.
ShotRecord make_record(const PreparedCircuit& prepared, const std::vector<Measurement>& meas,
                       std::uint64_t index, std::uint64_t x_flips, double readout, ShotRng& rng,
                       std::size_t shot) {
  const auto k = prepared.num_qubits();
  Bitstring clbits(prepared.num_clbits());
  for (const auto& m : meas) {
    bool bit = ((index >> (k - 1 - m.qubit)) & 1U) != 0;
    bit ^= ((x_flips >> m.qubit) & 1U) != 0;
    clbits.set(m.clbit, bit);
  }
  if (readout > 0.0) {
    for (const auto& m : meas) {
      if (uniform01(rng) < readout) clbits.flip(m.clbit);
    }
  }
  const auto split = prepared.register_split();
  ShotRecord record{Bitstring(split), Bitstring(prepared.num_clbits() - split), shot};
  for (std::size_t i = 0; i < clbits.size(); ++i) {
    if (!clbits[i]) continue;
    if (i < split) {
      record.register1.set(i);
    } else {
      record.register2.set(i - split);
    }
  }
  return record;
}

}  // namespace

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) {
  return splitmix64(splitmix64(seed) ^ (stream * 0xd1342543de82ef95ULL + 0x632be59bd9b4e019ULL));
}

ShotRng shot_rng(std::uint64_t seed, std::uint64_t shot) { return ShotRng(derive_seed(seed, shot)); }

PreparedCircuit::PreparedCircuit(const Circuit& circuit, std::size_t qubit_cap)
    : compact_(1, 0), split_(std::min(circuit.register_split(), circuit.num_clbits())) {
  std::vector<std::size_t> compact_of(circuit.width(), kUnmapped);
  for (const auto& op : circuit.ops()) {
    for (std::size_t i = 0; i < op.arity(); ++i) compact_of[op.qubits[i]] = 0;
  }
  for (std::size_t q = 0; q < circuit.width(); ++q) {
    if (compact_of[q] != kUnmapped) {
      compact_of[q] = physical_.size();
      physical_.push_back(q);
    }
  }
  if (physical_.size() > qubit_cap || physical_.size() > 64) {
    throw CapacityError("simulator: circuit touches " + std::to_string(physical_.size()) +
                        " qubits, cap is " + std::to_string(std::min<std::size_t>(qubit_cap, 64)));
  }

  compact_ = Circuit(std::max<std::size_t>(physical_.size(), 1), circuit.num_clbits());
  for (auto op : circuit.ops()) {
    for (std::size_t i = 0; i < op.arity(); ++i) op.qubits[i] = compact_of[op.qubits[i]];
    compact_.append(op);
  }

  if (physical_.empty()) {
    support_ = {0};
    cumulative_ = {1.0};
    return;
  }
  Statevector state(physical_.size(), qubit_cap);
  for (const auto& op : compact_.ops()) {
    if (op.is_unitary()) state.apply(op);
  }
  double total = 0.0;
  const auto amps = state.amplitudes();
  for (std::uint64_t i = 0; i < amps.size(); ++i) {
    const double p = std::norm(amps[i]);
    if (p <= kSupportFloor) continue;
    total += p;
    support_.push_back(i);
    cumulative_.push_back(total);
  }
}

std::uint64_t PreparedCircuit::sample_ideal(double u) const {
  const double threshold = u * cumulative_.back();
  auto it = std::upper_bound(cumulative_.begin(), cumulative_.end(), threshold);
  if (it == cumulative_.end()) --it;
  return support_[static_cast<std::size_t>(it - cumulative_.begin())];
}

std::vector<ShotRecord> run_ideal(const PreparedCircuit& prepared, std::size_t shots,
                                  std::uint64_t seed, const SimOptions& options) {
  const auto meas = measurements(prepared.compact_circuit());
  return parallel_shots(shots, options.workers, [&](std::size_t s) {
    auto rng = shot_rng(seed, s);
    const auto index = prepared.sample_ideal(uniform01(rng));
    return make_record(prepared, meas, index, 0, 0.0, rng, s);
  });
}

std::vector<ShotRecord> run_ideal(const Circuit& circuit, std::size_t shots, std::uint64_t seed,
                                  const SimOptions& options) {
  return run_ideal(PreparedCircuit(circuit, options.qubit_cap), shots, seed, options);
}

std::vector<ShotRecord> run_noisy(const PreparedCircuit& prepared, const NoiseModel& model,
                                  std::size_t shots, std::uint64_t seed,
                                  const SimOptions& options) {
  model.validate();
  const auto& circuit = prepared.compact_circuit();
  const auto meas = measurements(circuit);

  if (options.engine == NoisyEngine::kPauliFrame) {
    return parallel_shots(shots, options.workers, [&](std::size_t s) {
      auto rng = shot_rng(seed, s);
      const auto index = prepared.sample_ideal(uniform01(rng));
      FrameTarget target;
      run_trajectory(circuit, model, rng, target);
      return make_record(prepared, meas, index, target.frame.x, model.readout, rng, s);
    });
  }

  return parallel_shots(shots, options.workers, [&](std::size_t s) {
    auto rng = shot_rng(seed, s);
    const double u = uniform01(rng);
    StateTarget target{Statevector(prepared.num_qubits() == 0 ? 1 : prepared.num_qubits(),
                                   options.qubit_cap)};
    run_trajectory(circuit, model, rng, target);
    const auto index = prepared.num_qubits() == 0 ? 0 : target.state.sample_index(u);
    return make_record(prepared, meas, index, 0, model.readout, rng, s);
  });
}

std::vector<ShotRecord> run_noisy(const Circuit& circuit, const NoiseModel& model,
                                  std::size_t shots, std::uint64_t seed,
                                  const SimOptions& options) {
  model.validate();
  return run_noisy(PreparedCircuit(circuit, options.qubit_cap), model, shots, seed, options);
}

Statevector simulate_unitary(const Circuit& circuit, std::size_t qubit_cap) {
  Statevector state(circuit.width(), qubit_cap);
  for (const auto& op : circuit.ops()) {
    if (op.is_unitary()) state.apply(op);
  }
  return state;
}

}  // namespace simonbench
