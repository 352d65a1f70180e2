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

#include "simonbench/harness.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>

#include <json.hpp>

#include "simonbench/gf2.hpp"
#include "simonbench/stats.hpp"

namespace simonbench {

namespace {

std::vector<DeviceParams> device_table(const ExperimentConfig& config) {
  if (config.devices_file) return load_devices(*config.devices_file);
  return builtin_devices();
}

std::string where(std::size_t n, OracleKind oracle, std::optional<std::size_t> rep) {
  std::string out = "n=" + std::to_string(n) + " oracle=" + std::string(oracle_name(oracle));
  if (rep) out += " repetition=" + std::to_string(*rep);
  return out;
}

}  // namespace

// --- Backend / Topology -----------------------------------------------------

std::string Backend::label() const {
  switch (kind) {
    case Kind::kIdeal:
      return "ideal";
    case Kind::kDevice:
      return "noisy:" + device;
    case Kind::kCustom:
      return "noisy:custom";
  }
  return "?";
}

Backend Backend::parse(std::string_view label) {
  Backend b;
  if (label == "ideal") return b;
  constexpr std::string_view kPrefix = "noisy:";
  if (label.substr(0, kPrefix.size()) != kPrefix || label.size() == kPrefix.size()) {
    throw std::invalid_argument("unknown backend '" + std::string(label) +
                                "' (expected ideal, noisy:<device> or noisy:custom)");
  }
  const auto rest = label.substr(kPrefix.size());
  if (rest == "custom") {
    b.kind = Kind::kCustom;
  } else {
    b.kind = Kind::kDevice;
    b.device = std::string(rest);
  }
  return b;
}

std::string Topology::label() const {
  switch (kind) {
    case Kind::kAllToAll:
      return "all-to-all";
    case Kind::kEagle127:
      return "eagle127";
    case Kind::kFile:
      return "file";
  }
  return "?";
}

CouplingMap Topology::build(std::size_t width) const {
  switch (kind) {
    case Kind::kAllToAll:
      return all_to_all(width);
    case Kind::kEagle127:
      return heavy_hex_map("eagle127");
    case Kind::kFile:
      return CouplingMap::load(file);
  }
  throw std::logic_error("unreachable topology kind");
}

// --- ExperimentConfig -------------------------------------------------------

void ExperimentConfig::validate() const {
  if (n_min < 2) throw std::invalid_argument("config: n must be at least 2");
  if (n_min > n_max) throw std::invalid_argument("config: n range is empty");
  if (2 * n_max > qubit_cap) {
    throw std::invalid_argument("config: n = " + std::to_string(n_max) + " needs " +
                                std::to_string(2 * n_max) + " qubits, cap is " +
                                std::to_string(qubit_cap));
  }
  if (shots < 1) throw std::invalid_argument("config: shots must be >= 1");
  if (repetitions < 1) throw std::invalid_argument("config: repetitions must be >= 1");
  if (workers < 1) throw std::invalid_argument("config: workers must be >= 1");
  if (oracles.empty()) throw std::invalid_argument("config: no oracle kinds selected");
  if (!std::isfinite(swap_error_multiplier) || swap_error_multiplier < 1.0) {
    throw std::invalid_argument("config: swap_error_multiplier must be finite and >= 1");
  }
  if (secret) {
    if (n_min != n_max) throw std::invalid_argument("config: secret override needs a single n");
    if (secret->size() != n_min) {
      throw std::invalid_argument("config: secret length " + std::to_string(secret->size()) +
                                  " does not match n = " + std::to_string(n_min));
    }
    if (secret->none()) throw std::invalid_argument("config: secret must be nonzero");
  }
  if (topology.kind == Topology::Kind::kFile && topology.file.empty()) {
    throw std::invalid_argument("config: topology 'file' needs topology_file");
  }
  noise_model();
}

Bitstring ExperimentConfig::secret_for(std::size_t n) const {
  if (secret && secret->size() == n) return *secret;
  return Bitstring::ones(n);
}

NoiseModel ExperimentConfig::noise_model() const {
  switch (backend.kind) {
    case Backend::Kind::kIdeal: {
      NoiseModel model;
      model.swap_error_multiplier = swap_error_multiplier;
      return model;
    }
    case Backend::Kind::kDevice:
      return noise_model_from_device(find_device(device_table(*this), backend.device),
                                     swap_error_multiplier);
    case Backend::Kind::kCustom: {
      NoiseModel model = backend.custom;
      model.swap_error_multiplier = swap_error_multiplier;
      model.validate();
      return model;
    }
  }
  throw std::logic_error("unreachable backend kind");
}

ExperimentConfig ExperimentConfig::from_json_text(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(std::string("config: malformed JSON: ") + e.what());
  }
  if (!doc.is_object()) throw std::invalid_argument("config: expected a JSON object");

  ExperimentConfig c;
  NoiseModel custom;
  try {
    for (const auto& [key, value] : doc.items()) {
      if (key == "n") {
        if (value.is_number_unsigned()) {
          c.n_min = c.n_max = value.get<std::size_t>();
        } else if (value.is_array() && value.size() == 2) {
          c.n_min = value[0].get<std::size_t>();
          c.n_max = value[1].get<std::size_t>();
        } else {
          throw std::invalid_argument("config: n must be an integer or [min, max]");
        }
      } else if (key == "oracles") {
        c.oracles.clear();
        for (const auto& o : value) c.oracles.push_back(parse_oracle_kind(o.get<std::string>()));
      } else if (key == "oracle") {
        c.oracles = {parse_oracle_kind(value.get<std::string>())};
      } else if (key == "backend") {
        c.backend = Backend::parse(value.get<std::string>());
      } else if (key == "noise") {
        custom.p1 = value.value("p1", 0.0);
        custom.p2 = value.value("p2", 0.0);
        custom.readout = value.value("readout", 0.0);
      } else if (key == "topology") {
        const auto t = value.get<std::string>();
        if (t == "all-to-all") {
          c.topology.kind = Topology::Kind::kAllToAll;
        } else if (t == "eagle127") {
          c.topology.kind = Topology::Kind::kEagle127;
        } else if (t == "file") {
          c.topology.kind = Topology::Kind::kFile;
        } else {
          throw std::invalid_argument("config: unknown topology '" + t + "'");
        }
      } else if (key == "topology_file") {
        c.topology.file = value.get<std::string>();
      } else if (key == "placement") {
        c.placement = parse_placement(value.get<std::string>());
      } else if (key == "shots") {
        c.shots = value.get<std::size_t>();
      } else if (key == "repetitions") {
        c.repetitions = value.get<std::size_t>();
      } else if (key == "seed") {
        c.seed = value.get<std::uint64_t>();
      } else if (key == "swap_error_multiplier") {
        c.swap_error_multiplier = value.get<double>();
      } else if (key == "workers") {
        c.workers = value.get<std::size_t>();
      } else if (key == "qubit_cap") {
        c.qubit_cap = value.get<std::size_t>();
      } else if (key == "secret") {
        c.secret = Bitstring::from_string(value.get<std::string>());
      } else if (key == "devices_file") {
        c.devices_file = value.get<std::string>();
      } else {
        throw std::invalid_argument("config: unknown key '" + key + "'");
      }
    }
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("config: ") + e.what());
  }
  if (c.backend.kind == Backend::Kind::kCustom && !doc.contains("noise")) {
    throw std::invalid_argument("config: backend noisy:custom needs a noise object");
  }
  c.backend.custom = custom;
  c.validate();
  return c;
}

ExperimentConfig ExperimentConfig::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("config: cannot open " + path.string());
  std::stringstream buffer;
  buffer << in.rdbuf();
  return from_json_text(buffer.str());
}

std::string ExperimentConfig::to_json_text() const {
  nlohmann::ordered_json doc;
  doc["n"] = {n_min, n_max};
  doc["oracles"] = nlohmann::ordered_json::array();
  for (auto o : oracles) doc["oracles"].push_back(std::string(oracle_name(o)));
  doc["backend"] = backend.label();
  if (backend.kind == Backend::Kind::kCustom) {
    doc["noise"] = {{"p1", backend.custom.p1},
                    {"p2", backend.custom.p2},
                    {"readout", backend.custom.readout}};
  }
  doc["topology"] = topology.label();
  if (topology.kind == Topology::Kind::kFile) doc["topology_file"] = topology.file.string();
  doc["placement"] = placement == PlacementStrategy::kTrivial ? "trivial" : "greedy-subgraph";
  doc["shots"] = shots;
  doc["repetitions"] = repetitions;
  doc["seed"] = seed;
  doc["swap_error_multiplier"] = swap_error_multiplier;
  doc["workers"] = workers;
  doc["qubit_cap"] = qubit_cap;
  if (secret) doc["secret"] = secret->to_string();
  if (devices_file) doc["devices_file"] = devices_file->string();
  return doc.dump(2);
}

// --- Error rates ------------------------------------------------------------

void canonical_order(ErrorRateTable& table) {
  std::stable_sort(table.begin(), table.end(), [](const ErrorRateRecord& a, const ErrorRateRecord& b) {
    const auto rep = [](const ErrorRateRecord& r) {
      return r.repetition ? *r.repetition : std::numeric_limits<std::size_t>::max();
    };
    return std::tuple(a.n, oracle_name(a.oracle), rep(a)) <
           std::tuple(b.n, oracle_name(b.oracle), rep(b));
  });
}

std::size_t count_invalid(std::span<const ShotRecord> records, const Bitstring& secret) {
  std::size_t invalid = 0;
  for (const auto& r : records) {
    if (r.register1.size() != secret.size()) {
      throw std::invalid_argument("error rate: register-1 length " +
                                  std::to_string(r.register1.size()) +
                                  " does not match secret length " + std::to_string(secret.size()));
    }
    if (dot_mod2(r.register1, secret)) ++invalid;
  }
  return invalid;
}

double algorithmic_error_rate(std::span<const ShotRecord> records, const Bitstring& secret) {
  if (records.empty()) throw std::invalid_argument("error rate: no shots");
  return static_cast<double>(count_invalid(records, secret)) / static_cast<double>(records.size());
}

// --- Experiments ------------------------------------------------------------

std::uint64_t job_seed(std::uint64_t master, std::size_t n, OracleKind oracle, std::size_t rep) {
  const auto oracle_stream = oracle == OracleKind::kComplex ? 1U : 2U;
  return derive_seed(derive_seed(derive_seed(master, n), oracle_stream), rep);
}

CompiledJob compile_job(const ExperimentConfig& config, std::size_t n, OracleKind oracle) {
  const auto secret = config.secret_for(n);
  auto logical = build_simon_circuit(oracle, secret);
  const auto map = config.topology.build(logical.width());
  const auto layout = place(logical, map, config.placement, derive_seed(config.seed, n));
  auto routed = route(logical, map, layout, RouteOptions{.restrict_to_layout = true});
  return CompiledJob{n, oracle, secret, std::move(logical), std::move(routed)};
}

ErrorRateTable run_experiment(const ExperimentConfig& config) {
  config.validate();
  const auto model = config.noise_model();
  const bool ideal = config.backend.kind == Backend::Kind::kIdeal;
  const SimOptions options{config.qubit_cap, config.workers, NoisyEngine::kPauliFrame};
  const auto backend = config.backend.label();

  ErrorRateTable table;
  for (std::size_t n = config.n_min; n <= config.n_max; ++n) {
    for (auto oracle : config.oracles) {
      std::optional<CompiledJob> job;
      std::optional<PreparedCircuit> prepared;
      try {
        job.emplace(compile_job(config, n, oracle));
        prepared.emplace(job->routed.circuit, config.qubit_cap);
      } catch (const std::exception& e) {
        throw ExperimentError(where(n, oracle, std::nullopt) + ": " + e.what());
      }

      ErrorRateRecord pooled{n, oracle, backend, std::nullopt, 0, 0, 0.0, config.seed};
      for (std::size_t rep = 0; rep < config.repetitions; ++rep) {
        const auto seed = job_seed(config.seed, n, oracle, rep);
        try {
          const auto records = ideal ? run_ideal(*prepared, config.shots, seed, options)
                                     : run_noisy(*prepared, model, config.shots, seed, options);
          const auto invalid = count_invalid(records, job->secret);
          table.push_back(ErrorRateRecord{
              n, oracle, backend, rep, config.shots, invalid,
              static_cast<double>(invalid) / static_cast<double>(config.shots), seed});
          pooled.shots += config.shots;
          pooled.invalid_shots += invalid;
        } catch (const std::exception& e) {
          throw ExperimentError(where(n, oracle, rep) + ": " + e.what());
        }
      }
      pooled.error_rate =
          static_cast<double>(pooled.invalid_shots) / static_cast<double>(pooled.shots);
      table.push_back(pooled);
    }
  }
  canonical_order(table);
  return table;
}

RecoveryReport recover_secret_end_to_end(const ExperimentConfig& config, std::size_t max_attempts) {
  config.validate();
  if (config.n_min != config.n_max) {
    throw std::invalid_argument("recover: needs a single n");
  }
  const auto n = config.n_min;
  if (max_attempts < n - 1) {
    throw std::invalid_argument("recover: max_attempts must be at least n-1 = " +
                                std::to_string(n - 1));
  }
  const auto oracle = config.oracles.front();
  const auto model = config.noise_model();
  const SimOptions options{config.qubit_cap, config.workers, NoisyEngine::kPauliFrame};

  const CompiledJob job = [&] {
    try {
      return compile_job(config, n, oracle);
    } catch (const std::exception& e) {
      throw ExperimentError(where(n, oracle, std::nullopt) + ": " + e.what());
    }
  }();
  const PreparedCircuit prepared(job.routed.circuit, config.qubit_cap);
  // Attempt i consumes shot i of one seeded run, which is the same as running
  // single-shot jobs with per-shot streams.
  const auto seed = job_seed(config.seed, n, oracle, 0);
  const auto shots = config.backend.kind == Backend::Kind::kIdeal
              ? run_ideal(prepared, max_attempts, seed, options)
              : run_noisy(prepared, model, max_attempts, seed, options);

  const Bitstring zero(n);
  const auto f_zero = classical_oracle_eval(oracle, zero, job.secret);
  RecoveryReport report;
  Gf2Basis basis(n);
  for (const auto& shot : shots) {
    ++report.attempts;
    if (!basis.add_if_independent(shot.register1)) continue;
    if (dot_mod2(shot.register1, job.secret)) ++report.non_orthogonal_rows;
    if (basis.rank() < n - 1) continue;
    const auto candidate = solve_secret(basis);
    if (classical_oracle_eval(oracle, candidate, job.secret) == f_zero) {
      report.secret = candidate;
      return report;
    }
    ++report.verification_failures;
    basis.clear();
  }
  report.failure = "attempt budget of " + std::to_string(max_attempts) + " exhausted with rank " +
                   std::to_string(basis.rank()) + " of " + std::to_string(n - 1) + ", " +
                   std::to_string(report.verification_failures) + " failed verification(s)";
  return report;
}

double predicted_cnot_failure(double p2, double multiplier, std::size_t distance) {
  const double cnots = 3.0 * static_cast<double>(distance == 0 ? 0 : distance - 1) + 1.0;
  return 1.0 - std::pow(1.0 - p2 * multiplier, cnots);
}

std::vector<CnotDistanceRow> cnot_distance_experiment(const CouplingMap& map,
                                                      const NoiseModel& model, std::size_t control,
                                                      std::span<const std::size_t> targets,
                                                      std::size_t shots, std::uint64_t seed,
                                                      std::size_t workers) {
  model.validate();
  if (control >= map.size()) {
    throw ExperimentError("cnot-distance: control " + std::to_string(control) + " not on map");
  }
  Circuit test(2, 2, 2);  // both bits in register 1
  test.x(0).cnot(0, 1).measure(0, 0).measure(1, 1);
  const auto expected = Bitstring::from_string("11");

  std::vector<CnotDistanceRow> rows;
  for (auto target : targets) {
    if (target >= map.size() || target == control) {
      throw ExperimentError("cnot-distance: invalid target " + std::to_string(target));
    }
    const auto distance = shortest_path_distance(map, control, target);
    if (!distance) {
      throw ExperimentError("cnot-distance: target " + std::to_string(target) +
                            " unreachable from " + std::to_string(control));
    }
    const auto routed = route(test, map, Layout{{control, target}});
    const PreparedCircuit prepared(routed.circuit);
    const auto records =
        run_noisy(prepared, model, shots, derive_seed(seed, target), SimOptions{.workers = workers});
    std::size_t failures = 0;
    for (const auto& r : records) {
      if (r.register1 != expected) ++failures;
    }
    rows.push_back(CnotDistanceRow{
        control, target, *distance, routed.inserted_swap_count, shots, failures,
        static_cast<double>(failures) / static_cast<double>(shots),
        predicted_cnot_failure(model.p2, model.swap_error_multiplier, *distance)});
  }
  return rows;
}

FitResult linear_fit_extrapolate(const ErrorRateTable& table, double projected_n,
                                 std::optional<OracleKind> oracle) {
  const bool has_means = std::any_of(table.begin(), table.end(), [&](const ErrorRateRecord& r) {
    return !r.repetition && (!oracle || r.oracle == *oracle);
  });
  // Per n: summed rates and count of contributing groups.
  std::map<std::size_t, std::pair<double, double>> per_n;
  std::map<std::pair<std::size_t, std::string>, std::pair<std::size_t, std::size_t>> pooled;
  for (const auto& r : table) {
    if (oracle && r.oracle != *oracle) continue;
    if (has_means) {
      if (r.repetition) continue;
      per_n[r.n].first += r.error_rate;
      per_n[r.n].second += 1.0;
    } else {
      auto& [invalid, shots] = pooled[{r.n, std::string(oracle_name(r.oracle)) + r.backend}];
      invalid += r.invalid_shots;
      shots += r.shots;
    }
  }
  for (const auto& [key, counts] : pooled) {
    per_n[key.first].first += static_cast<double>(counts.first) / static_cast<double>(counts.second);
    per_n[key.first].second += 1.0;
  }
  if (per_n.size() < 2) {
    throw std::invalid_argument("extrapolate: need at least two distinct n values");
  }
  std::vector<double> xs, ys;
  for (const auto& [n, acc] : per_n) {
    xs.push_back(static_cast<double>(n));
    ys.push_back(acc.first / acc.second);
  }
  const auto line = least_squares(xs, ys);
  FitResult fit;
  fit.slope = line.slope;
  fit.intercept = line.intercept;
  fit.projected_n = projected_n;
  fit.raw_projection = line.intercept + line.slope * projected_n;
  fit.projected_rate = std::clamp(fit.raw_projection, 0.0, kRandomGuessRate);
  return fit;
}

}  // namespace simonbench
