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

#ifndef SIMONBENCH_TRANSPILE_HPP
#define SIMONBENCH_TRANSPILE_HPP

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "simonbench/circuit.hpp"
#include "simonbench/coupling_map.hpp"

namespace simonbench {

class TranspileError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Injective logical -> physical qubit assignment.
struct Layout {
  std::vector<std::size_t> logical_to_physical;

  std::size_t size() const { return logical_to_physical.size(); }
  std::size_t operator[](std::size_t logical) const { return logical_to_physical.at(logical); }

  /// Throws TranspileError if not injective or any image is outside the map.
  void validate(const CouplingMap& map) const;

  friend bool operator==(const Layout&, const Layout&) = default;
};

enum class PlacementStrategy {
  kTrivial,         ///< logical i -> physical i
  kGreedySubgraph,  ///< grow a connected region, maximizing adjacent interacting pairs
};

PlacementStrategy parse_placement(std::string_view text);

/// Throws TranspileError when the circuit is wider than the map.
/// The seed only breaks ties between equally good starting qubits.
Layout place(const Circuit& circuit, const CouplingMap& map, PlacementStrategy strategy,
             std::uint64_t seed = 0);

/// Number of interacting logical pairs (pairs sharing at least one two-qubit
/// gate) that the layout places on adjacent physical qubits.
std::size_t adjacent_interaction_count(const Circuit& circuit, const CouplingMap& map,
                                       const Layout& layout);

struct RoutedCircuit {
  /// Over physical indices: width = map size. Classical bits are unchanged,
  /// so measurement results already come out in logical order.
  Circuit circuit;
  Layout initial_layout;
  /// Where each logical line sits after all inserted SWAPs.
  Layout final_layout;
  std::size_t inserted_swap_count = 0;
};

struct RouteOptions {
  /// Route SWAPs only through physical qubits in the initial layout's image,
  /// falling back to the whole map for pairs unreachable inside it. Keeps the
  /// routed circuit on exactly `width` physical qubits when the placed region
  /// is connected.
  bool restrict_to_layout = false;
};

/// Greedy per-gate routing with no lookahead. For a two-qubit gate on
/// physical qubits at distance d > 1, the first operand is swapped d - 1 times
/// along a shortest path toward the second, then the gate is emitted.
/// Throws TranspileError when a pair is unreachable.
RoutedCircuit route(const Circuit& circuit, const CouplingMap& map, const Layout& layout,
                    RouteOptions options = {});

struct RoutingViolation {
  std::size_t op_index;
  std::string message;
};

/// std::nullopt when every two-qubit op lies on an edge of the map.
std::optional<RoutingViolation> validate_routed(const Circuit& circuit, const CouplingMap& map);

struct LayoutReport {
  /// Physical qubits in the layout or touched by any op, ascending.
  std::vector<std::size_t> active;
  /// Allocated qubits that carry no op at all.
  std::vector<std::size_t> idle;
  /// Two-qubit-gate partners per active physical qubit.
  std::map<std::size_t, std::vector<std::size_t>> partners;

  /// {"active": [...], "idle": [...], "partners": {"<q>": [...]}}
  std::string to_json_text() const;
};

LayoutReport layout_report(const RoutedCircuit& routed, const CouplingMap& map);

}  // namespace simonbench

#endif  // SIMONBENCH_TRANSPILE_HPP
