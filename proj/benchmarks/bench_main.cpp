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

#include <benchmark/benchmark.h>

#include <random>

#include "simonbench/coupling_map.hpp"
#include "simonbench/gf2.hpp"
#include "simonbench/oracle.hpp"
#include "simonbench/simulator.hpp"
#include "simonbench/statevector.hpp"
#include "simonbench/transpile.hpp"

namespace sb = simonbench;

namespace {

void BM_HadamardLayer(benchmark::State& state) {
  const auto k = static_cast<std::size_t>(state.range(0));
  sb::Statevector s(k);
  for (auto _ : state) {
    for (std::size_t q = 0; q < k; ++q) s.apply_h(q);
    benchmark::DoNotOptimize(s.amplitudes().data());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(k));
}
BENCHMARK(BM_HadamardLayer)->Arg(10)->Arg(16)->Arg(20);

void BM_CnotChain(benchmark::State& state) {
  const auto k = static_cast<std::size_t>(state.range(0));
  sb::Statevector s(k);
  for (std::size_t q = 0; q < k; ++q) s.apply_h(q);
  for (auto _ : state) {
    for (std::size_t q = 0; q + 1 < k; ++q) s.apply_cnot(q, q + 1);
    benchmark::DoNotOptimize(s.amplitudes().data());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(k - 1));
}
BENCHMARK(BM_CnotChain)->Arg(10)->Arg(16)->Arg(20);

void BM_PrepareSimon(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto circuit = sb::build_simon_circuit(n, sb::OracleKind::kComplex);
  for (auto _ : state) {
    sb::PreparedCircuit prepared(circuit);
    benchmark::DoNotOptimize(prepared.support_size());
  }
}
BENCHMARK(BM_PrepareSimon)->Arg(6)->Arg(10)->Arg(12)->Unit(benchmark::kMillisecond);

void BM_NoisyShots(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto engine = state.range(1) == 0 ? sb::NoisyEngine::kPauliFrame
                                          : sb::NoisyEngine::kStatevector;
  const sb::PreparedCircuit prepared(sb::build_simon_circuit(n, sb::OracleKind::kComplex));
  const sb::NoiseModel model{0.0003, 0.0074, 0.0132, 1.0};
  sb::SimOptions options;
  options.engine = engine;
  constexpr std::size_t kShots = 256;
  std::uint64_t seed = 0;
  for (auto _ : state) {
    auto records = sb::run_noisy(prepared, model, kShots, seed++, options);
    benchmark::DoNotOptimize(records.data());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(kShots));
  state.SetLabel(engine == sb::NoisyEngine::kPauliFrame ? "pauli-frame" : "statevector");
}
BENCHMARK(BM_NoisyShots)->Args({4, 0})->Args({4, 1})->Args({8, 0})->Args({8, 1})->Args({12, 0});

void BM_Gf2Elimination(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::mt19937_64 rng(1);
  std::vector<sb::Bitstring> rows;
  for (std::size_t i = 0; i < 2 * n; ++i) {
    sb::Bitstring b(n);
    for (std::size_t j = 0; j < n; ++j) b.set(j, rng() & 1U);
    rows.push_back(std::move(b));
  }
  for (auto _ : state) {
    sb::Gf2Basis basis(n);
    for (const auto& r : rows) basis.add_if_independent(r);
    benchmark::DoNotOptimize(basis.rank());
  }
}
BENCHMARK(BM_Gf2Elimination)->Arg(16)->Arg(64)->Arg(256);

void BM_RouteEagle(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto eagle = sb::heavy_hex_map("eagle127");
  const auto circuit = sb::build_simon_circuit(n, sb::OracleKind::kComplex);
  for (auto _ : state) {
    const auto layout = sb::place(circuit, eagle, sb::PlacementStrategy::kGreedySubgraph);
    auto routed = sb::route(circuit, eagle, layout, sb::RouteOptions{.restrict_to_layout = true});
    benchmark::DoNotOptimize(routed.inserted_swap_count);
  }
}
BENCHMARK(BM_RouteEagle)->Arg(4)->Arg(8)->Arg(12);

}  // namespace

BENCHMARK_MAIN();
