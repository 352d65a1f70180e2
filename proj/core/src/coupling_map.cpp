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

#include "simonbench/coupling_map.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <limits>
#include <queue>
#include <set>
#include <sstream>

#include <json.hpp>

namespace simonbench {

namespace {

constexpr std::size_t kUnreached = std::numeric_limits<std::size_t>::max();

std::vector<std::size_t> bfs_distances(const CouplingMap& map, std::size_t source,
                                       const std::vector<bool>& allowed) {
  std::vector<std::size_t> dist(map.size(), kUnreached);
  std::queue<std::size_t> frontier;
  dist[source] = 0;
  frontier.push(source);
  while (!frontier.empty()) {
    const auto v = frontier.front();
    frontier.pop();
    for (auto w : map.neighbors(v)) {
      if (dist[w] != kUnreached) continue;
      if (!allowed.empty() && !allowed[w]) continue;
      dist[w] = dist[v] + 1;
      frontier.push(w);
    }
  }
  return dist;
}

void check_qubit(const CouplingMap& map, std::size_t q) {
  if (q >= map.size()) {
    throw CouplingMapError("coupling map: qubit " + std::to_string(q) + " out of range for " +
                           std::to_string(map.size()) + "-qubit map");
  }
}

// Heavy-hex as used on 127-qubit Eagle chips: seven rows of data qubits
// joined by single bridge qubits. Rows 1-5 span columns 0..14, row 0 spans
// 0..13 and row 6 spans 1..14. Bridges below even rows sit at columns
// 0,4,8,12 and below odd rows at 2,6,10,14. Indices are assigned row by row,
// each row followed by the bridges beneath it.
CouplingMap eagle127() {
  constexpr int kRows = 7;
  constexpr int kCols = 15;
  std::vector<std::vector<std::size_t>> id(kRows, std::vector<std::size_t>(kCols, kUnreached));
  std::vector<Edge> edges;
  std::size_t next = 0;
  std::vector<std::pair<int, std::size_t>> pending_bridges;  // (column, bridge id)

  for (int r = 0; r < kRows; ++r) {
    const int first = (r == kRows - 1) ? 1 : 0;
    const int last = (r == 0) ? kCols - 2 : kCols - 1;
    for (int c = first; c <= last; ++c) {
      id[r][c] = next++;
      if (c > first) edges.emplace_back(id[r][c - 1], id[r][c]);
    }
    for (const auto& [c, bridge] : pending_bridges) edges.emplace_back(bridge, id[r][c]);
    pending_bridges.clear();
    if (r == kRows - 1) break;
    for (int c = (r % 2 == 0) ? 0 : 2; c < kCols; c += 4) {
      const auto bridge = next++;
      edges.emplace_back(id[r][c], bridge);
      pending_bridges.emplace_back(c, bridge);
    }
  }
  return CouplingMap(next, std::move(edges));
}

}  // namespace

CouplingMap::CouplingMap(std::size_t num_qubits, std::vector<Edge> edges)
    : num_qubits_(num_qubits), edges_(std::move(edges)), adjacency_(num_qubits) {
  std::set<Edge> seen;
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    const auto [a, b] = edges_[i];
    const std::string where = "edge " + std::to_string(i) + " [" + std::to_string(a) + "," +
                              std::to_string(b) + "]";
    if (a >= num_qubits_ || b >= num_qubits_) {
      throw CouplingMapError("coupling map: " + where + " references qubit outside [0, " +
                             std::to_string(num_qubits_) + ")");
    }
    if (a == b) throw CouplingMapError("coupling map: " + where + " is a self-loop");
    if (!seen.insert(std::minmax(a, b)).second) {
      throw CouplingMapError("coupling map: " + where + " duplicates an earlier edge");
    }
    adjacency_[a].push_back(b);
    adjacency_[b].push_back(a);
  }
  for (auto& list : adjacency_) std::sort(list.begin(), list.end());
}

CouplingMap CouplingMap::from_json_text(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw CouplingMapError(std::string("coupling map: malformed JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("num_qubits") || !doc.contains("edges")) {
    throw CouplingMapError("coupling map: expected object with num_qubits and edges");
  }
  const auto& count = doc["num_qubits"];
  if (!count.is_number_unsigned()) {
    throw CouplingMapError("coupling map: num_qubits must be a non-negative integer");
  }
  if (!doc["edges"].is_array()) throw CouplingMapError("coupling map: edges must be an array");
  std::vector<Edge> edges;
  std::size_t index = 0;
  for (const auto& e : doc["edges"]) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_unsigned() ||
        !e[1].is_number_unsigned()) {
      throw CouplingMapError("coupling map: edge " + std::to_string(index) +
                             " must be a pair of non-negative integers");
    }
    edges.emplace_back(e[0].get<std::size_t>(), e[1].get<std::size_t>());
    ++index;
  }
  return CouplingMap(count.get<std::size_t>(), std::move(edges));
}

CouplingMap CouplingMap::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw CouplingMapError("coupling map: cannot open " + path.string());
  std::stringstream buffer;
  buffer << in.rdbuf();
  return from_json_text(buffer.str());
}

std::string CouplingMap::to_json_text() const {
  nlohmann::json doc;
  doc["num_qubits"] = num_qubits_;
  doc["edges"] = nlohmann::json::array();
  for (const auto& [a, b] : edges_) doc["edges"].push_back({a, b});
  return doc.dump();
}

std::size_t CouplingMap::max_degree() const {
  std::size_t best = 0;
  for (const auto& list : adjacency_) best = std::max(best, list.size());
  return best;
}

bool CouplingMap::adjacent(std::size_t a, std::size_t b) const {
  const auto& list = adjacency_.at(a);
  return std::binary_search(list.begin(), list.end(), b);
}

bool CouplingMap::is_connected() const {
  if (num_qubits_ == 0) return true;
  const auto dist = bfs_distances(*this, 0, {});
  return std::none_of(dist.begin(), dist.end(), [](std::size_t d) { return d == kUnreached; });
}

CouplingMap all_to_all(std::size_t k) {
  std::vector<Edge> edges;
  edges.reserve(k * (k > 0 ? k - 1 : 0) / 2);
  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t b = a + 1; b < k; ++b) edges.emplace_back(a, b);
  }
  return CouplingMap(k, std::move(edges));
}

CouplingMap line_map(std::size_t k) {
  std::vector<Edge> edges;
  for (std::size_t a = 0; a + 1 < k; ++a) edges.emplace_back(a, a + 1);
  return CouplingMap(k, std::move(edges));
}

CouplingMap heavy_hex_map(std::string_view preset) {
  if (preset == "eagle127") return eagle127();
  throw CouplingMapError("coupling map: unknown heavy-hex preset '" + std::string(preset) + "'");
}

CouplingMap resolve_coupling_map(std::string_view name) {
  auto sized = [&](std::string_view prefix) -> std::optional<std::size_t> {
    if (name.substr(0, prefix.size()) != prefix) return std::nullopt;
    const auto digits = name.substr(prefix.size());
    std::size_t k = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), k);
    if (ec != std::errc() || ptr != digits.data() + digits.size()) {
      throw CouplingMapError("coupling map: bad size in '" + std::string(name) + "'");
    }
    return k;
  };
  if (auto k = sized("all-to-all:")) return all_to_all(*k);
  if (auto k = sized("line:")) return line_map(*k);
  if (name == "eagle127") return heavy_hex_map(name);
  return CouplingMap::load(std::filesystem::path(std::string(name)));
}

std::optional<std::size_t> shortest_path_distance(const CouplingMap& map, std::size_t a,
                                                  std::size_t b) {
  check_qubit(map, a);
  check_qubit(map, b);
  const auto dist = bfs_distances(map, a, {});
  if (dist[b] == kUnreached) return std::nullopt;
  return dist[b];
}

std::vector<std::size_t> shortest_path(const CouplingMap& map, std::size_t from, std::size_t to,
                                       const std::vector<bool>& allowed) {
  check_qubit(map, from);
  check_qubit(map, to);
  // Distances measured from the destination, so walking from `from` can pick
  // the lowest-index neighbor that is one hop closer at every step.
  const auto dist = bfs_distances(map, to, allowed);
  if (dist[from] == kUnreached) return {};
  std::vector<std::size_t> path{from};
  auto v = from;
  while (v != to) {
    for (auto w : map.neighbors(v)) {
      if (dist[w] != kUnreached && dist[w] + 1 == dist[v]) {
        v = w;
        break;
      }
    }
    path.push_back(v);
  }
  return path;
}

}  // namespace simonbench
