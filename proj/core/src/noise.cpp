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

#include "simonbench/noise.hpp"

#include <cctype>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace simonbench {

namespace {

void check_probability(double p, const char* what) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw std::invalid_argument(std::string("noise model: ") + what + " = " + std::to_string(p) +
                                " is not a probability");
  }
}

void check_percentage(double pct, const std::string& device, const char* what) {
  if (!(pct >= 0.0 && pct <= 100.0)) {
    throw std::invalid_argument("device " + device + ": " + what + " = " + std::to_string(pct) +
                                "% outside [0, 100]");
  }
}

std::string normalize(std::string_view name) {
  std::string out;
  for (char c : name) {
    if (std::isalnum(static_cast<unsigned char>(c))) {
      out.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    }
  }
  return out;
}

}  // namespace

void NoiseModel::validate() const {
  check_probability(p1, "p1");
  check_probability(p2, "p2");
  check_probability(readout, "readout");
  if (!std::isfinite(swap_error_multiplier) || swap_error_multiplier < 1.0) {
    throw std::invalid_argument("noise model: swap_error_multiplier must be finite and >= 1");
  }
  if (p2 * swap_error_multiplier > 1.0) {
    throw std::invalid_argument("noise model: p2 * swap_error_multiplier = " +
                                std::to_string(p2 * swap_error_multiplier) + " exceeds 1");
  }
}

void DeviceParams::validate() const {
  check_percentage(one_qubit_gate_error_pct, name, "one_qubit_gate_error_pct");
  check_percentage(two_qubit_gate_error_pct, name, "two_qubit_gate_error_pct");
  check_percentage(readout_error_pct, name, "readout_error_pct");
}

NoiseModel noise_model_from_device(const DeviceParams& params, double swap_error_multiplier) {
  params.validate();
  NoiseModel model{params.one_qubit_gate_error_pct / 100.0, params.two_qubit_gate_error_pct / 100.0,
                   params.readout_error_pct / 100.0, swap_error_multiplier};
  model.validate();
  return model;
}

const std::vector<DeviceParams>& builtin_devices() {
  static const std::vector<DeviceParams> devices = {
      {"Brisbane", 0.03, 0.74, 1.32, "eagle127", 213.12e-6, 145.97e-6, 660e-9},
      {"Osaka", 0.03, 0.93, 2.18, "eagle127", 297.17e-6, 127.23e-6, 660e-9},
      {"Kyoto", 0.03, 0.92, 1.48, "eagle127", 215.43e-6, 109.44e-6, 660e-9},
      {"Forte", 0.09, 0.74, 0.5, "all-to-all", 100.0, 1.0, 970e-6},
      {"Aria 1", 0.06, 8.57, 0.52, "all-to-all", 100.0, 1.0, 600e-6},
      {"Harmony", 0.67, 3.07, 0.42, "all-to-all", 10000.0, 0.2, 200e-6},
  };
  return devices;
}

std::vector<DeviceParams> parse_devices_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(std::string("devices: malformed JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("devices") || !doc["devices"].is_array()) {
    throw std::invalid_argument("devices: expected {\"devices\": [...]}");
  }
  std::vector<DeviceParams> out;
  for (const auto& d : doc["devices"]) {
    try {
      DeviceParams p;
      p.name = d.at("name").get<std::string>();
      p.one_qubit_gate_error_pct = d.at("one_qubit_gate_error_pct").get<double>();
      p.two_qubit_gate_error_pct = d.at("two_qubit_gate_error_pct").get<double>();
      p.readout_error_pct = d.at("readout_error_pct").get<double>();
      p.topology = d.at("topology").get<std::string>();
      p.t1_s = d.value("t1_s", 0.0);
      p.t2_s = d.value("t2_s", 0.0);
      p.two_qubit_gate_time_s = d.value("two_qubit_gate_time_s", 0.0);
      p.validate();
      out.push_back(std::move(p));
    } catch (const nlohmann::json::exception& e) {
      throw std::invalid_argument("devices: entry " + std::to_string(out.size()) + ": " + e.what());
    }
  }
  return out;
}

std::vector<DeviceParams> load_devices(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("devices: cannot open " + path.string());
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_devices_json(buffer.str());
}

std::string devices_to_json(const std::vector<DeviceParams>& devices) {
  nlohmann::ordered_json doc;
  doc["devices"] = nlohmann::ordered_json::array();
  for (const auto& d : devices) {
    nlohmann::ordered_json e;
    e["name"] = d.name;
    e["one_qubit_gate_error_pct"] = d.one_qubit_gate_error_pct;
    e["two_qubit_gate_error_pct"] = d.two_qubit_gate_error_pct;
    e["readout_error_pct"] = d.readout_error_pct;
    e["topology"] = d.topology;
    e["t1_s"] = d.t1_s;
    e["t2_s"] = d.t2_s;
    e["two_qubit_gate_time_s"] = d.two_qubit_gate_time_s;
    doc["devices"].push_back(std::move(e));
  }
  return doc.dump(2) + "\n";
}

const DeviceParams& find_device(const std::vector<DeviceParams>& devices, std::string_view name) {
  const auto key = normalize(name);
  for (const auto& d : devices) {
    if (normalize(d.name) == key) return d;
  }
  throw std::invalid_argument("unknown device '" + std::string(name) + "'");
}

}  // namespace simonbench
