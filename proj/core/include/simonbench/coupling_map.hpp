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

#ifndef SIMONBENCH_COUPLING_MAP_HPP
#define SIMONBENCH_COUPLING_MAP_HPP

#include <cstddef>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace simonbench {

class CouplingMapError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using Edge = std::pair<std::size_t, std::size_t>;

/// Undirected connectivity graph over physical qubits.
class CouplingMap {
 public:
  /// Throws CouplingMapError naming the offending edge index on a self-loop,
  /// a duplicate edge or an out-of-range endpoint.
  CouplingMap(std::size_t num_qubits, std::vector<Edge> edges);

  /// Document form: {"num_qubits": int, "edges": [[int, int], ...]}.
  static CouplingMap from_json_text(std::string_view text);
  static CouplingMap load(const std::filesystem::path& path);
  std::string to_json_text() const;

  std::size_t size() const { return num_qubits_; }
  const std::vector<Edge>& edges() const { return edges_; }
  /// Sorted ascending.
  const std::vector<std::size_t>& neighbors(std::size_t q) const { return adjacency_.at(q); }
  std::size_t degree(std::size_t q) const { return adjacency_.at(q).size(); }
  std::size_t max_degree() const;
  bool adjacent(std::size_t a, std::size_t b) const;
  bool is_connected() const;

 private:
  std::size_t num_qubits_;
  std::vector<Edge> edges_;
  std::vector<std::vector<std::size_t>> adjacency_;
};

CouplingMap all_to_all(std::size_t k);
/// Path graph 0-1-...-(k-1).
CouplingMap line_map(std::size_t k);
/// Known presets: "eagle127" (127-qubit heavy-hex, 144 edges).
/// Throws CouplingMapError for unknown names.
CouplingMap heavy_hex_map(std::string_view preset);

/// Resolves "all-to-all:<k>", "line:<k>", a heavy-hex preset name, or a path
/// to a coupling-map document.
CouplingMap resolve_coupling_map(std::string_view name);

/// Unweighted hop count, std::nullopt when unreachable.
std::optional<std::size_t> shortest_path_distance(const CouplingMap& map, std::size_t a,
                                                  std::size_t b);

/// Vertices from `from` to `to` inclusive along a shortest path. Among equal
/// length paths, each step takes the lowest-index neighbor that is one hop
/// closer. If `allowed` is non-empty only vertices with allowed[v] are used.
/// Empty result when unreachable.
std::vector<std::size_t> shortest_path(const CouplingMap& map, std::size_t from, std::size_t to,
                                       const std::vector<bool>& allowed = {});

}  // namespace simonbench

#endif  // SIMONBENCH_COUPLING_MAP_HPP
