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

#include "simonbench/report.hpp"

#include <doctest.h>

#include <cmath>
#include <map>
#include <random>

#include "fuzz.hpp"
#include "simonbench/harness.hpp"
#include "simonbench/noise.hpp"
#include "simonbench/oracle.hpp"
#include "simonbench/simulator.hpp"
#include "simonbench/statevector.hpp"
#include "simonbench/stats.hpp"

using namespace simonbench;

namespace {

double rate(const std::vector<ShotRecord>& records, std::size_t n) {
  return algorithmic_error_rate(records, Bitstring::ones(n));
}

}  // namespace

TEST_CASE("statevector construction") {
  const Statevector one(1);
  CHECK(one.dimension() == 2);
  CHECK(one.probability(0) == 1.0);
  const Statevector three(3);
  CHECK(three.dimension() == 8);
  CHECK(three.probability(0) == 1.0);
  CHECK_THROWS_AS(Statevector(27), CapacityError);
  CHECK_THROWS_AS(Statevector(0), CapacityError);
}

TEST_CASE("single gates") {
  Statevector s(1);
  s.apply_h(0);
  CHECK(s.amplitudes()[0].real() == doctest::Approx(1.0 / std::sqrt(2.0)));
  CHECK(s.amplitudes()[1].real() == doctest::Approx(1.0 / std::sqrt(2.0)));

  Statevector x(1);
  x.apply_x(0);
  CHECK(x.probability(1) == 1.0);

  Statevector c(2);
  c.apply_x(0);  // |10>
  c.apply_cnot(0, 1);
  CHECK(c.probability(0b11) == 1.0);

  Statevector y(1);
  y.apply_y(0);
  CHECK(y.amplitudes()[1] == Amplitude(0.0, 1.0));

  Statevector m(1);
  CHECK_THROWS_AS(m.apply(GateOp{GateKind::kMeasure, {0, 0}, 0, false}), std::invalid_argument);
}

TEST_CASE("swap equals three cnots") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    auto prep = testing::random_unitary_circuit(4, 12, rng);
    Circuit a = prep, b = prep;
    a.swap(1, 3);
    b.cnot(1, 3).cnot(3, 1).cnot(1, 3);
    const auto sa = simulate_unitary(a);
    const auto sb = simulate_unitary(b);
    for (std::size_t i = 0; i < sa.dimension(); ++i) {
      CHECK(std::abs(sa.amplitudes()[i] - sb.amplitudes()[i]) < 1e-12);
    }
  }
}

TEST_CASE("norm preservation") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t k = 1 + rng() % 12;
    Statevector s(k);
    for (int g = 0; g < 60; ++g) {
      const auto a = rng() % k;
      const auto b = k > 1 ? (a + 1 + rng() % (k - 1)) % k : a;
      switch (rng() % 6) {
        case 0: s.apply_h(a); break;
        case 1: s.apply_x(a); break;
        case 2: s.apply_pauli(static_cast<Pauli>(rng() % 4), a); break;
        case 3: if (k > 1) s.apply_cnot(a, b); break;
        case 4: if (k > 1) s.apply_swap(a, b); break;
        default: s.apply_z(a); break;
      }
      REQUIRE(std::abs(s.norm() - 1.0) < 1e-10);
    }
  }
}

TEST_CASE("sampling") {
  Statevector s(3);
  s.apply_x(0);
  s.apply_x(2);
  std::mt19937_64 rng(1);
  for (int i = 0; i < 100; ++i) CHECK(sample_measurement(s, rng).to_string() == "101");

  Statevector h(1);
  h.apply_h(0);
  constexpr std::size_t kSamples = 100000;
  std::size_t ones = 0;
  for (std::size_t i = 0; i < kSamples; ++i) ones += sample_measurement(h, rng).test(0);
  const double frac = static_cast<double>(ones) / kSamples;
  CHECK(std::abs(frac - 0.5) <= 3.0 * binomial_sigma(0.5, kSamples));
}

TEST_CASE("run_ideal") {
  const auto circuit = build_simon_circuit(3, OracleKind::kComplex);
  const auto records = run_ideal(circuit, 1000, 9);
  CHECK(records.size() == 1000);
  CHECK(rate(records, 3) == 0.0);
  CHECK(run_ideal(circuit, 0, 9).empty());
  CHECK(run_ideal(circuit, 200, 9) == run_ideal(circuit, 200, 9));
  CHECK(run_ideal(circuit, 200, 9) != run_ideal(circuit, 200, 10));
  CHECK(records[0].register1.size() == 3);
  CHECK(records[0].register2.size() == 3);

  // Register-1 marginal for n = 2 is uniform over {00, 11}.
  std::map<std::string, std::size_t> counts;
  constexpr std::size_t kShots = 20000;
  for (const auto& r : run_ideal(build_simon_circuit(2, OracleKind::kComplex), kShots, 4)) {
    ++counts[r.register1.to_string()];
  }
  CHECK(counts.size() == 2);
  const double frac = static_cast<double>(counts["11"]) / kShots;
  CHECK(std::abs(frac - 0.5) <= 3.0 * binomial_sigma(0.5, kShots));
}

TEST_CASE("zero noise reproduces run_ideal exactly") {
  const auto circuit = build_simon_circuit(4, OracleKind::kSimple);
  const NoiseModel zero{};
  CHECK(zero.is_noiseless());
  for (auto engine : {NoisyEngine::kPauliFrame, NoisyEngine::kStatevector}) {
    SimOptions options;
    options.engine = engine;
    CHECK(run_noisy(circuit, zero, 300, 21, options) == run_ideal(circuit, 300, 21));
  }
}

TEST_CASE("noise model validation and device rows") {
  CHECK_THROWS_AS(run_noisy(build_simon_circuit(2, OracleKind::kSimple),
                            NoiseModel{0.0, 0.5, 0.0, 3.0}, 10, 0),
                  std::invalid_argument);
  CHECK_THROWS_AS(NoiseModel({-0.1, 0.0, 0.0, 1.0}).validate(), std::invalid_argument);

  const auto& devices = builtin_devices();
  const auto brisbane = noise_model_from_device(find_device(devices, "Brisbane"));
  CHECK(brisbane.p1 == doctest::Approx(0.0003));
  CHECK(brisbane.p2 == doctest::Approx(0.0074));
  CHECK(brisbane.readout == doctest::Approx(0.0132));
  const auto aria = noise_model_from_device(find_device(devices, "aria-1"));
  CHECK(aria.p1 == doctest::Approx(0.0006));
  CHECK(aria.p2 == doctest::Approx(0.0857));
  CHECK(aria.readout == doctest::Approx(0.0052));
  const auto harmony = noise_model_from_device(find_device(devices, "harmony"), 2.0);
  CHECK(harmony.p1 == doctest::Approx(0.0067));
  CHECK(harmony.p2 == doctest::Approx(0.0307));
  CHECK(harmony.readout == doctest::Approx(0.0042));
  CHECK(harmony.swap_error_multiplier == 2.0);
  CHECK_THROWS_AS(find_device(devices, "sycamore"), std::invalid_argument);
}

TEST_CASE("devices.json matches the built-in table") {
  const auto loaded = load_devices(std::string(SIMONBENCH_DATA_DIR) + "/devices.json");
  const auto& builtin = builtin_devices();
  REQUIRE(loaded.size() == builtin.size());
  for (std::size_t i = 0; i < loaded.size(); ++i) {
    CHECK(loaded[i].name == builtin[i].name);
    CHECK(loaded[i].one_qubit_gate_error_pct == builtin[i].one_qubit_gate_error_pct);
    CHECK(loaded[i].two_qubit_gate_error_pct == builtin[i].two_qubit_gate_error_pct);
    CHECK(loaded[i].readout_error_pct == builtin[i].readout_error_pct);
    CHECK(loaded[i].topology == builtin[i].topology);
  }
  CHECK_THROWS_AS(parse_devices_json("{\"devices\": [{\"name\": \"x\"}]}"), std::invalid_argument);
}

TEST_CASE("readout-only closed form") {
  constexpr std::size_t kShots = 100000;
  const double r = 0.0132;
  for (std::size_t n : {2, 6, 12}) {
    const double expected = (1.0 - std::pow(1.0 - 2.0 * r, static_cast<double>(n))) / 2.0;
    const auto records = run_noisy(build_simon_circuit(n, OracleKind::kComplex),
                                   NoiseModel{0.0, 0.0, r, 1.0}, kShots, 100 + n);
    CAPTURE(n);
    CHECK(std::abs(rate(records, n) - expected) <= 3.0 * binomial_sigma(expected, kShots));
  }
  CHECK((1.0 - std::pow(1.0 - 2.0 * r, 12.0)) / 2.0 == doctest::Approx(0.1373089932426491));
}

TEST_CASE("saturating noise approaches random guessing") {
  constexpr std::size_t kShots = 20000;
  const auto records = run_noisy(build_simon_circuit(6, OracleKind::kComplex),
                                 NoiseModel{0.5, 0.9, 0.5, 1.0}, kShots, 8);
  CHECK(std::abs(rate(records, 6) - 0.5) <= 4.0 * binomial_sigma(0.5, kShots));
}

TEST_CASE("Pauli frame and statevector engines agree") {
  // Both engines are exact for these Clifford circuits, so their outcome
  // distributions must agree. Compare every outcome frequency.
  constexpr std::size_t kShots = 40000;
  for (auto kind : {OracleKind::kComplex, OracleKind::kSimple}) {
    const auto circuit = build_simon_circuit(3, kind);
    const NoiseModel model{0.02, 0.06, 0.03, 1.0};
    SimOptions frame_opts, sv_opts;
    sv_opts.engine = NoisyEngine::kStatevector;
    const auto a = run_noisy(circuit, model, kShots, 1, frame_opts);
    const auto b = run_noisy(circuit, model, kShots, 2, sv_opts);
    std::map<std::string, std::pair<double, double>> freq;
    for (const auto& r : a) freq[r.register1.to_string() + r.register2.to_string()].first += 1.0;
    for (const auto& r : b) freq[r.register1.to_string() + r.register2.to_string()].second += 1.0;
    for (const auto& [key, f] : freq) {
      const double pa = f.first / kShots;
      const double pb = f.second / kShots;
      const double pooled = (pa + pb) / 2.0;
      const double sigma = std::sqrt(2.0 * pooled * (1.0 - pooled) / kShots) + 1e-4;
      CAPTURE(key);
      CHECK(std::abs(pa - pb) <= 5.0 * sigma);
    }
  }
}

TEST_CASE("routed noisy runs agree across engines") {
  const auto circuit = build_simon_circuit(3, OracleKind::kComplex);
  const auto line = line_map(6);
  const auto routed = route(circuit, line, place(circuit, line, PlacementStrategy::kTrivial));
  REQUIRE(routed.inserted_swap_count > 0);
  const NoiseModel model{0.0, 0.02, 0.0, 3.0};
  constexpr std::size_t kShots = 30000;
  SimOptions sv;
  sv.engine = NoisyEngine::kStatevector;
  const double a = rate(run_noisy(routed.circuit, model, kShots, 5), 3);
  const double b = rate(run_noisy(routed.circuit, model, kShots, 6, sv), 3);
  CHECK(std::abs(a - b) <= 5.0 * std::sqrt(2.0) * binomial_sigma((a + b) / 2.0, kShots));
  CHECK(a > 0.0);
}

TEST_CASE("results do not depend on the worker count") {
  const auto circuit = build_simon_circuit(5, OracleKind::kComplex);
  const NoiseModel model{0.001, 0.02, 0.01, 1.0};
  const auto serial = run_noisy(circuit, model, 5000, 77);
  for (std::size_t workers : {2, 3, 8}) {
    SimOptions options;
    options.workers = workers;
    CHECK(run_noisy(circuit, model, 5000, 77, options) == serial);
    CHECK(run_ideal(circuit, 999, 77, options) == run_ideal(circuit, 999, 77));
  }
}

TEST_CASE("capacity") {
  Circuit wide(30, 0);
  wide.h(0).cnot(0, 29);
  CHECK(PreparedCircuit(wide).num_qubits() == 2);
  Circuit touched(30, 0);
  for (std::size_t q = 0; q < 30; ++q) touched.h(q);
  CHECK_THROWS_AS(PreparedCircuit{touched}, CapacityError);
  CHECK_THROWS_AS(simulate_unitary(touched), CapacityError);
}
