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

#ifndef SIMONBENCH_NOISE_HPP
#define SIMONBENCH_NOISE_HPP

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace simonbench {

/// Stochastic Pauli noise plus classical readout flips.
///
/// After a one-qubit gate, with probability p1 a uniformly random X, Y or Z
/// hits its qubit. After a two-qubit gate, with probability p2 one of the 15
/// non-identity two-qubit Paulis hits its pair; router-inserted SWAPs use
/// p2 * swap_error_multiplier and count as three CNOTs. Each measured bit
/// flips with probability `readout`.
struct NoiseModel {
  double p1 = 0.0;
  double p2 = 0.0;
  double readout = 0.0;
  double swap_error_multiplier = 1.0;

  /// Throws std::invalid_argument unless every probability is in [0, 1], the
  /// multiplier is finite and >= 1, and p2 * multiplier <= 1.
  void validate() const;
  bool is_noiseless() const { return p1 == 0.0 && p2 == 0.0 && readout == 0.0; }

  friend bool operator==(const NoiseModel&, const NoiseModel&) = default;
};

/// One column of the vendor calibration table. Error figures are percentages.
/// T1, T2 and gate time are carried along but unused by NoiseModel.
struct DeviceParams {
  std::string name;
  double one_qubit_gate_error_pct = 0.0;
  double two_qubit_gate_error_pct = 0.0;
  double readout_error_pct = 0.0;
  /// "eagle127" or "all-to-all".
  std::string topology;
  double t1_s = 0.0;
  double t2_s = 0.0;
  double two_qubit_gate_time_s = 0.0;

  void validate() const;
  friend bool operator==(const DeviceParams&, const DeviceParams&) = default;
};

/// p = percentage / 100 for each error channel.
NoiseModel noise_model_from_device(const DeviceParams& params, double swap_error_multiplier = 1.0);

/// Brisbane, Osaka, Kyoto, Forte, Aria 1, Harmony as published in June 2024.
const std::vector<DeviceParams>& builtin_devices();

/// JSON: {"devices": [{"name", "one_qubit_gate_error_pct", ...}, ...]}.
std::vector<DeviceParams> parse_devices_json(std::string_view text);
std::vector<DeviceParams> load_devices(const std::filesystem::path& path);
std::string devices_to_json(const std::vector<DeviceParams>& devices);

/// Case-, space- and punctuation-insensitive lookup ("aria1" == "Aria 1").
/// Throws std::invalid_argument for unknown names.
const DeviceParams& find_device(const std::vector<DeviceParams>& devices, std::string_view name);

}  // namespace simonbench

#endif  // SIMONBENCH_NOISE_HPP
