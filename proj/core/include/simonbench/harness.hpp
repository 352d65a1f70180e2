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

#ifndef SIMONBENCH_HARNESS_HPP
#define SIMONBENCH_HARNESS_HPP

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "simonbench/bitstring.hpp"
#include "simonbench/coupling_map.hpp"
#include "simonbench/noise.hpp"
#include "simonbench/oracle.hpp"
#include "simonbench/simulator.hpp"
#include "simonbench/transpile.hpp"

namespace simonbench {

/// Failure inside an experiment, tagged with where it happened.
class ExperimentError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Shots per job, matching the per-value-of-n count used on the trapped-ion
/// hardware runs.
inline constexpr std::size_t kDefaultShots = 4096;
inline constexpr std::size_t kDeviceRepetitions = 3;
inline constexpr std::size_t kSimulatorRepetitions = 30;
/// Qubit count at which quantum advantage is expected to emerge.
inline constexpr double kAdvantageQubits = 53.0;
/// Error rate of guessing: a uniformly random z is orthogonal to s half the time.
inline constexpr double kRandomGuessRate = 0.5;

struct Backend {
  enum class Kind { kIdeal, kDevice, kCustom };
  Kind kind = Kind::kIdeal;
  std::string device;    ///< kDevice only
  NoiseModel custom;     ///< kCustom only

  /// "ideal", "noisy:<device>" or "noisy:custom".
  std::string label() const;
  static Backend parse(std::string_view label);
};

struct Topology {
  enum class Kind { kAllToAll, kEagle127, kFile };
  Kind kind = Kind::kAllToAll;
  std::filesystem::path file;

  std::string label() const;
  /// All-to-all maps are sized to the circuit width.
  CouplingMap build(std::size_t width) const;
};

struct ExperimentConfig {
  std::size_t n_min = 2;
  std::size_t n_max = 12;
  std::vector<OracleKind> oracles{OracleKind::kComplex, OracleKind::kSimple};
  Backend backend;
  Topology topology;
  PlacementStrategy placement = PlacementStrategy::kGreedySubgraph;
  std::size_t shots = kDefaultShots;
  std::size_t repetitions = kDeviceRepetitions;
  std::uint64_t seed = 0;
  double swap_error_multiplier = 1.0;
  std::size_t workers = 1;
  std::size_t qubit_cap = kDefaultQubitCap;
  /// Overrides s = 1^n; only allowed when n_min == n_max.
  std::optional<Bitstring> secret;
  /// Device table; the built-in table when unset.
  std::optional<std::filesystem::path> devices_file;

  /// Throws std::invalid_argument on any violated invariant.
  void validate() const;
  Bitstring secret_for(std::size_t n) const;
  /// The noise model of a noisy backend, with the multiplier applied.
  NoiseModel noise_model() const;

  /// Keys: n (pair [min, max]), oracles, backend, noise (custom only),
  /// topology, topology_file, placement, shots, repetitions, seed,
  /// swap_error_multiplier, workers, qubit_cap, secret, devices_file.
  /// Omitted keys keep their defaults.
  static ExperimentConfig from_json_text(std::string_view text);
  static ExperimentConfig load(const std::filesystem::path& path);
  std::string to_json_text() const;
};

struct ErrorRateRecord {
  std::size_t n = 0;
  OracleKind oracle = OracleKind::kComplex;
  std::string backend;
  /// Empty for the mean row that pools all repetitions of one (n, oracle).
  std::optional<std::size_t> repetition;
  std::size_t shots = 0;
  std::size_t invalid_shots = 0;
  double error_rate = 0.0;
  std::uint64_t seed = 0;

  friend bool operator==(const ErrorRateRecord&, const ErrorRateRecord&) = default;
};

using ErrorRateTable = std::vector<ErrorRateRecord>;

/// Sorts by (n, oracle, repetition), the mean row last within its group.
void canonical_order(ErrorRateTable& table);

/// Fraction of shots whose register-1 outcome z has z . s = 1.
/// Throws std::invalid_argument on an empty list or a length mismatch.
double algorithmic_error_rate(std::span<const ShotRecord> records, const Bitstring& secret);
std::size_t count_invalid(std::span<const ShotRecord> records, const Bitstring& secret);

/// One (n, oracle) cell: the logical circuit and its routing on the
/// configured topology.
struct CompiledJob {
  std::size_t n;
  OracleKind oracle;
  Bitstring secret;
  Circuit logical;
  RoutedCircuit routed;
};

CompiledJob compile_job(const ExperimentConfig& config, std::size_t n, OracleKind oracle);

/// Seed of repetition `rep` of (n, oracle); a pure function of the master seed.
std::uint64_t job_seed(std::uint64_t master, std::size_t n, OracleKind oracle, std::size_t rep);

/// One row per (n, oracle, repetition) plus a pooled mean row per (n, oracle),
/// in canonical order. Deterministic in config.seed for any worker count.
ErrorRateTable run_experiment(const ExperimentConfig& config);

struct RecoveryReport {
  std::optional<Bitstring> secret;
  std::size_t attempts = 0;
  /// Accepted rows with z . s = 1 against the configured secret.
  std::size_t non_orthogonal_rows = 0;
  /// Candidate secrets rejected by the f(0) == f(s) check.
  std::size_t verification_failures = 0;
  std::string failure;

  bool ok() const { return secret.has_value(); }
};

/// Feeds single shots into a GF(2) basis until it reaches rank n-1, solves,
/// and checks f(0) == f(candidate) on the classical oracle. A failed check
/// discards the basis and keeps sampling. Uses config.n_min == config.n_max
/// and the first configured oracle.
RecoveryReport recover_secret_end_to_end(const ExperimentConfig& config, std::size_t max_attempts);

struct CnotDistanceRow {
  std::size_t control = 0;
  std::size_t target = 0;
  std::size_t distance = 0;
  std::size_t inserted_swaps = 0;
  std::size_t shots = 0;
  std::size_t failures = 0;
  double observed = 0.0;
  /// 1 - (1 - p2 * m)^(3(d-1)+1): every CNOT, including the three inside
  /// each SWAP, failing independently.
  double predicted = 0.0;
};

/// X on control, CNOT control -> target, measure both; a shot fails when the
/// outcome is not 11. Throws ExperimentError for unreachable targets.
std::vector<CnotDistanceRow> cnot_distance_experiment(const CouplingMap& map,
                                                      const NoiseModel& model, std::size_t control,
                                                      std::span<const std::size_t> targets,
                                                      std::size_t shots, std::uint64_t seed = 0,
                                                      std::size_t workers = 1);

double predicted_cnot_failure(double p2, double multiplier, std::size_t distance);

struct FitResult {
  double slope = 0.0;
  double intercept = 0.0;
  double projected_n = kAdvantageQubits;
  double raw_projection = 0.0;
  /// raw_projection clipped to [0, 0.5].
  double projected_rate = 0.0;
};

/// Least squares through (n, mean error rate). Uses the mean rows when the
/// table has them, otherwise pools all rows per n. Throws
/// std::invalid_argument with fewer than two distinct n.
/// `oracle` restricts the fit to one oracle kind.
FitResult linear_fit_extrapolate(const ErrorRateTable& table,
                                 double projected_n = kAdvantageQubits,
                                 std::optional<OracleKind> oracle = std::nullopt);

}  // namespace simonbench

#endif  // SIMONBENCH_HARNESS_HPP
