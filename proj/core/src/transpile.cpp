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

#include "simonbench/transpile.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <random>
#include <set>
#include <tuple>

#include <json.hpp>

namespace simonbench {

namespace {

constexpr std::size_t kFree = std::numeric_limits<std::size_t>::max();

using WeightMatrix = std::vector<std::vector<std::size_t>>;

WeightMatrix interaction_weights(const Circuit& circuit) {
  WeightMatrix w(circuit.width(), std::vector<std::size_t>(circuit.width(), 0));
  for (const auto& op : circuit.ops()) {
    if (!op.is_two_qubit()) continue;
    ++w[op.qubits[0]][op.qubits[1]];
    ++w[op.qubits[1]][op.qubits[0]];
  }
  return w;
}

std::vector<std::vector<std::size_t>> all_pairs_hops(const CouplingMap& map) {
  const auto n = map.size();
  std::vector<std::vector<std::size_t>> dist(n, std::vector<std::size_t>(n, kFree));
  for (std::size_t s = 0; s < n; ++s) {
    auto& row = dist[s];
    std::queue<std::size_t> frontier;
    row[s] = 0;
    frontier.push(s);
    while (!frontier.empty()) {
      const auto v = frontier.front();
      frontier.pop();
      for (auto u : map.neighbors(v)) {
        if (row[u] == kFree) {
          row[u] = row[v] + 1;
          frontier.push(u);
        }
      }
    }
  }
  return dist;
}

Layout greedy_subgraph(const Circuit& circuit, const CouplingMap& map, std::uint64_t seed) {
  const auto width = circuit.width();
  const auto weights = interaction_weights(circuit);
  const auto hops = all_pairs_hops(map);

  std::vector<std::size_t> total(width, 0);
  for (std::size_t a = 0; a < width; ++a) {
    for (auto w : weights[a]) total[a] += w;
  }

  std::vector<std::size_t> phys_of(width, kFree);
  std::vector<bool> used(map.size(), false);
  std::vector<std::size_t> placed;

  // Start from a maximum-degree physical qubit; the seed picks among ties.
  std::vector<std::size_t> hubs;
  for (std::size_t p = 0; p < map.size(); ++p) {
    if (map.degree(p) == map.max_degree()) hubs.push_back(p);
  }
  std::mt19937_64 rng(seed);
  const auto start = hubs[static_cast<std::size_t>(rng() % hubs.size())];

  for (std::size_t step = 0; step < width; ++step) {
    // Next logical: most weight into the placed set, then most total weight.
    std::size_t logical = kFree;
    std::tuple<std::size_t, std::size_t> best_key{0, 0};
    for (std::size_t l = 0; l < width; ++l) {
      if (phys_of[l] != kFree) continue;
      std::size_t linked = 0;
      for (auto j : placed) linked += weights[l][j];
      const std::tuple<std::size_t, std::size_t> key{linked, total[l]};
      if (logical == kFree || key > best_key) {
        logical = l;
        best_key = key;
      }
    }

    std::size_t physical = kFree;
    if (placed.empty()) {
      physical = start;
    } else {
      std::vector<std::size_t> candidates;
      for (auto j : placed) {
        for (auto p : map.neighbors(phys_of[j])) {
          if (!used[p]) candidates.push_back(p);
        }
      }
      if (candidates.empty()) {
        for (std::size_t p = 0; p < map.size(); ++p) {
          if (!used[p]) candidates.push_back(p);
        }
      }
      std::sort(candidates.begin(), candidates.end());
      candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

      // Score: adjacent weight (max), weighted distance to partners (min),
      // free neighbors left for later partners (max), index (min).
      using Score = std::tuple<std::size_t, std::size_t, std::size_t>;
      Score best{};
      for (auto p : candidates) {
        std::size_t adjacent_weight = 0;
        std::size_t spread = 0;
        for (auto j : placed) {
          if (weights[logical][j] == 0) continue;
          const auto d = hops[p][phys_of[j]];
          if (d == 1) adjacent_weight += weights[logical][j];
          spread += weights[logical][j] * (d == kFree ? map.size() : d);
        }
        std::size_t room = 0;
        for (auto q : map.neighbors(p)) room += used[q] ? 0 : 1;
        const Score score{adjacent_weight, std::numeric_limits<std::size_t>::max() - spread, room};
        if (physical == kFree || score > best) {
          physical = p;
          best = score;
        }
      }
    }
    phys_of[logical] = physical;
    used[physical] = true;
    placed.push_back(logical);
  }
  return Layout{phys_of};
}

}  // namespace

void Layout::validate(const CouplingMap& map) const {
  std::vector<bool> seen(map.size(), false);
  for (std::size_t l = 0; l < logical_to_physical.size(); ++l) {
    const auto p = logical_to_physical[l];
    if (p >= map.size()) {
      throw TranspileError("layout: logical " + std::to_string(l) + " -> physical " +
                           std::to_string(p) + " outside the map");
    }
    if (seen[p]) {
      throw TranspileError("layout: physical " + std::to_string(p) + " assigned twice");
    }
    seen[p] = true;
  }
}

PlacementStrategy parse_placement(std::string_view text) {
  if (text == "trivial") return PlacementStrategy::kTrivial;
  if (text == "greedy" || text == "greedy-subgraph") return PlacementStrategy::kGreedySubgraph;
  throw std::invalid_argument("unknown placement strategy '" + std::string(text) +
                              "' (expected trivial or greedy-subgraph)");
}

Layout place(const Circuit& circuit, const CouplingMap& map, PlacementStrategy strategy,
             std::uint64_t seed) {
  if (circuit.width() > map.size()) {
    throw TranspileError("place: circuit width " + std::to_string(circuit.width()) +
                         " exceeds " + std::to_string(map.size()) + "-qubit map");
  }
  if (strategy == PlacementStrategy::kTrivial) {
    Layout layout;
    for (std::size_t l = 0; l < circuit.width(); ++l) layout.logical_to_physical.push_back(l);
    return layout;
  }
  return greedy_subgraph(circuit, map, seed);
}

std::size_t adjacent_interaction_count(const Circuit& circuit, const CouplingMap& map,
                                       const Layout& layout) {
  std::set<std::pair<std::size_t, std::size_t>> pairs;
  for (const auto& op : circuit.ops()) {
    if (op.is_two_qubit()) pairs.insert(std::minmax(op.qubits[0], op.qubits[1]));
  }
  std::size_t count = 0;
  for (const auto& [a, b] : pairs) {
    if (map.adjacent(layout[a], layout[b])) ++count;
  }
  return count;
}

RoutedCircuit route(const Circuit& circuit, const CouplingMap& map, const Layout& layout,
                    RouteOptions options) {
  if (layout.size() != circuit.width()) {
    throw TranspileError("route: layout covers " + std::to_string(layout.size()) +
                         " lines, circuit has " + std::to_string(circuit.width()));
  }
  layout.validate(map);

  std::vector<std::size_t> phys_of = layout.logical_to_physical;
  std::vector<std::size_t> logical_at(map.size(), kFree);
  for (std::size_t l = 0; l < phys_of.size(); ++l) logical_at[phys_of[l]] = l;

  std::vector<bool> region;
  if (options.restrict_to_layout) {
    region.assign(map.size(), false);
    for (auto p : phys_of) region[p] = true;
  }

  RoutedCircuit out{Circuit(map.size(), circuit.num_clbits(), circuit.register_split()), layout, layout, 0};
  auto swap_physical = [&](std::size_t a, std::size_t b) {
    out.circuit.swap(a, b, /*inserted=*/true);
    ++out.inserted_swap_count;
    const auto la = logical_at[a];
    const auto lb = logical_at[b];
    logical_at[a] = lb;
    logical_at[b] = la;
    if (la != kFree) phys_of[la] = b;
    if (lb != kFree) phys_of[lb] = a;
  };

  for (std::size_t i = 0; i < circuit.ops().size(); ++i) {
    GateOp op = circuit.ops()[i];
    if (!op.is_two_qubit()) {
      op.qubits[0] = phys_of[op.qubits[0]];
      out.circuit.append(op);
      continue;
    }
    const auto target = phys_of[op.qubits[1]];
    if (!map.adjacent(phys_of[op.qubits[0]], target)) {
      auto path = shortest_path(map, phys_of[op.qubits[0]], target, region);
      if (path.empty() && !region.empty()) path = shortest_path(map, phys_of[op.qubits[0]], target);
      if (path.empty()) {
        throw TranspileError("route: physical qubits " + std::to_string(phys_of[op.qubits[0]]) +
                             " and " + std::to_string(target) + " are unreachable (op " +
                             std::to_string(i) + ")");
      }
      for (std::size_t k = 0; k + 2 < path.size(); ++k) swap_physical(path[k], path[k + 1]);
    }
    op.qubits = {phys_of[op.qubits[0]], phys_of[op.qubits[1]]};
    out.circuit.append(op);
  }
  out.final_layout.logical_to_physical = phys_of;
  return out;
}

std::optional<RoutingViolation> validate_routed(const Circuit& circuit, const CouplingMap& map) {
  for (std::size_t i = 0; i < circuit.ops().size(); ++i) {
    const auto& op = circuit.ops()[i];
    for (std::size_t k = 0; k < op.arity(); ++k) {
      if (op.qubits[k] >= map.size()) {
        return RoutingViolation{i, "qubit " + std::to_string(op.qubits[k]) + " not on the map"};
      }
    }
    if (op.is_two_qubit() && !map.adjacent(op.qubits[0], op.qubits[1])) {
      return RoutingViolation{i, std::string(gate_name(op.kind)) + " on non-adjacent qubits " +
                                     std::to_string(op.qubits[0]) + " and " +
                                     std::to_string(op.qubits[1])};
    }
  }
  return std::nullopt;
}

LayoutReport layout_report(const RoutedCircuit& routed, const CouplingMap& map) {
  std::set<std::size_t> allocated(routed.initial_layout.logical_to_physical.begin(),
                                  routed.initial_layout.logical_to_physical.end());
  std::set<std::size_t> touched;
  std::map<std::size_t, std::set<std::size_t>> partners;
  for (const auto& op : routed.circuit.ops()) {
    for (std::size_t k = 0; k < op.arity(); ++k) touched.insert(op.qubits[k]);
    if (op.is_two_qubit()) {
      partners[op.qubits[0]].insert(op.qubits[1]);
      partners[op.qubits[1]].insert(op.qubits[0]);
    }
  }

  LayoutReport report;
  std::set<std::size_t> active = allocated;
  active.insert(touched.begin(), touched.end());
  for (auto q : active) {
    if (q >= map.size()) continue;
    report.active.push_back(q);
    const auto& set = partners[q];
    report.partners[q] = std::vector<std::size_t>(set.begin(), set.end());
  }
  for (auto q : allocated) {
    if (!touched.contains(q)) report.idle.push_back(q);
  }
  return report;
}

std::string LayoutReport::to_json_text() const {
  nlohmann::ordered_json doc;
  doc["active"] = active;
  doc["idle"] = idle;
  nlohmann::ordered_json p = nlohmann::ordered_json::object();
  for (const auto& [q, list] : partners) p[std::to_string(q)] = list;
  doc["partners"] = std::move(p);
  return doc.dump();
}

}  // namespace simonbench
