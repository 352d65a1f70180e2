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
// simonbench: command line front end for the Simon benchmark harness.
//
// Exit codes: 0 success, 1 usage error, 2 experiment failure.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <unordered_set>
#include <vector>

#include <CLI11.hpp>

#include "simonbench/coupling_map.hpp"
#include "simonbench/gf2.hpp"
#include "simonbench/harness.hpp"
#include "simonbench/noise.hpp"
#include "simonbench/oracle.hpp"
#include "simonbench/qasm.hpp"
#include "simonbench/report.hpp"
#include "simonbench/transpile.hpp"

namespace sb = simonbench;

namespace {

constexpr int kExitUsage = 1;
constexpr int kExitFailure = 2;

// Bad input from the user, as opposed to a failure while running.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw UsageError("cannot write " + path);
  out << text;
}

template <class F>
auto as_usage(F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  } catch (const sb::CouplingMapError& e) {
    throw UsageError(e.what());
  }
}

// "40-45" or "40,41,47".
std::vector<std::size_t> parse_targets(const std::string& text) {
  std::vector<std::size_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto dash = item.find('-');
    try {
      if (dash == std::string::npos) {
        out.push_back(std::stoul(item));
      } else {
        const auto lo = std::stoul(item.substr(0, dash));
        const auto hi = std::stoul(item.substr(dash + 1));
        if (hi < lo) throw UsageError("bad target range '" + item + "'");
        for (auto t = lo; t <= hi; ++t) out.push_back(t);
      }
    } catch (const std::logic_error&) {
      throw UsageError("bad target '" + item + "'");
    }
  }
  if (out.empty()) throw UsageError("no targets given");
  return out;
}

sb::ReportFormat detect_format(const std::string& text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  return first != std::string::npos && text[first] == '{' ? sb::ReportFormat::kJson
                                                          : sb::ReportFormat::kCsv;
}

struct RunArgs {
  std::string config;
  std::string format = "csv";
  std::string output;
  std::size_t workers = 0;
  std::optional<std::uint64_t> seed;
};

int cmd_run(const RunArgs& args) {
  auto config = as_usage([&] { return sb::ExperimentConfig::load(args.config); });
  if (args.workers > 0) config.workers = args.workers;
  if (args.seed) config.seed = *args.seed;
  const auto format = as_usage([&] { return sb::parse_report_format(args.format); });
  as_usage([&] { config.validate(); });
  const auto table = sb::run_experiment(config);
  write_output(args.output, sb::report(table, format));
  return 0;
}

struct OracleCheckArgs {
  std::size_t n = 0;
  std::string kind = "complex";
};

int cmd_oracle_check(const OracleCheckArgs& args) {
  if (args.n < 2 || args.n > 16) throw UsageError("--n must be in [2, 16]");
  const auto kind = as_usage([&] { return sb::parse_oracle_kind(args.kind); });
  const auto expected = sb::Bitstring::ones(args.n);
  auto f = [&](const sb::Bitstring& x) { return sb::classical_oracle_eval(kind, args.n, x); };

  std::unordered_set<std::string> images;
  std::size_t period_violations = 0;
  const std::uint64_t count = std::uint64_t{1} << args.n;
  for (std::uint64_t v = 0; v < count; ++v) {
    const auto x = sb::Bitstring::from_index(v, args.n);
    const auto fx = f(x);
    if (fx != f(x ^ expected)) ++period_violations;
    images.insert(fx.to_string());
  }
  const auto found = sb::brute_force_secret(f, args.n);
  const bool two_to_one = images.size() == count / 2 && period_violations == 0;
  const bool ok = two_to_one && found == expected;

  std::cout << "oracle=" << sb::oracle_name(kind) << " n=" << args.n
            << " images=" << images.size() << " period_violations=" << period_violations
            << " secret=" << found.to_string() << " status=" << (ok ? "ok" : "FAIL") << '\n';
  return ok ? 0 : kExitFailure;
}

struct TranspileArgs {
  std::size_t n = 0;
  std::string kind = "complex";
  std::string map;
  std::string placement = "greedy";
  std::uint64_t seed = 0;
  std::string qasm_out;
  std::string layout_out;
};

int cmd_transpile(const TranspileArgs& args) {
  const auto kind = as_usage([&] { return sb::parse_oracle_kind(args.kind); });
  const auto placement = as_usage([&] { return sb::parse_placement(args.placement); });
  const auto circuit = as_usage([&] { return sb::build_simon_circuit(args.n, kind); });
  const auto map = as_usage([&] {
    // "all-to-all" with no size means just wide enough for the circuit.
    return args.map == "all-to-all" ? sb::all_to_all(circuit.width())
                                    : sb::resolve_coupling_map(args.map);
  });
  const auto layout = sb::place(circuit, map, placement, args.seed);
  const auto routed = sb::route(circuit, map, layout);
  if (const auto bad = sb::validate_routed(routed.circuit, map)) {
    std::cerr << "error: routed op " << bad->op_index << ": " << bad->message << '\n';
    return kExitFailure;
  }
  const auto qasm = sb::emit_qasm(routed.circuit);
  const auto layout_json = sb::layout_report(routed, map).to_json_text();
  if (args.qasm_out.empty() && args.layout_out.empty()) {
    std::cout << qasm << '\n' << layout_json << '\n';
  } else {
    write_output(args.qasm_out, qasm);
    write_output(args.layout_out, layout_json + "\n");
  }
  std::cerr << "inserted swaps: " << routed.inserted_swap_count
            << ", two-qubit gates: " << routed.circuit.two_qubit_count() << '\n';
  return 0;
}

struct CnotDistanceArgs {
  std::string map = "eagle127";
  std::string device = "brisbane";
  std::string devices_file;
  std::size_t control = 39;
  std::string targets = "40-49";
  std::size_t shots = 100000;
  double multiplier = 1.0;
  std::uint64_t seed = 0;
  std::size_t workers = 1;
  bool gate_only = false;
};

int cmd_cnot_distance(const CnotDistanceArgs& args) {
  const auto map = as_usage([&] { return sb::resolve_coupling_map(args.map); });
  const auto devices = as_usage([&] {
    return args.devices_file.empty() ? sb::builtin_devices() : sb::load_devices(args.devices_file);
  });
  auto model = as_usage([&] {
    return sb::noise_model_from_device(sb::find_device(devices, args.device), args.multiplier);
  });
  if (args.gate_only) {
    model.p1 = 0.0;
    model.readout = 0.0;
  }
  const auto targets = parse_targets(args.targets);
  const auto rows = sb::cnot_distance_experiment(map, model, args.control, targets, args.shots,
                                                 args.seed, args.workers);
  std::cout << sb::cnot_distance_csv(rows);
  return 0;
}

struct ExtrapolateArgs {
  std::string input;
  double target_n = sb::kAdvantageQubits;
  std::string oracle;
};

int cmd_extrapolate(const ExtrapolateArgs& args) {
  const auto text = read_file(args.input);
  const auto table = as_usage([&] { return sb::parse_table(text, detect_format(text)); });
  std::optional<sb::OracleKind> oracle;
  if (!args.oracle.empty()) oracle = as_usage([&] { return sb::parse_oracle_kind(args.oracle); });
  const auto fit =
      as_usage([&] { return sb::linear_fit_extrapolate(table, args.target_n, oracle); });
  std::cout << sb::fit_to_json(fit);
  return 0;
}

struct ReportArgs {
  std::string input;
  std::string format = "csv";
  std::string output;
};

int cmd_report(const ReportArgs& args) {
  const auto text = read_file(args.input);
  const auto format = as_usage([&] { return sb::parse_report_format(args.format); });
  const auto table = as_usage([&] { return sb::parse_table(text, detect_format(text)); });
  write_output(args.output, as_usage([&] { return sb::report(table, format); }));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Simon's algorithm benchmark harness"};
  app.require_subcommand(1);
  std::function<int()> action;

  RunArgs run;
  auto* run_cmd = app.add_subcommand("run", "Run an experiment grid and print its error-rate table");
  run_cmd->add_option("--config", run.config, "Experiment config (JSON)")->required();
  run_cmd->add_option("--format", run.format, "csv or json")->capture_default_str();
  run_cmd->add_option("--output,-o", run.output, "Output file (default stdout)");
  run_cmd->add_option("--workers", run.workers, "Override the worker count");
  run_cmd->add_option("--seed", run.seed, "Override the master seed");
  run_cmd->callback([&] { action = [&] { return cmd_run(run); }; });

  OracleCheckArgs oc;
  auto* oc_cmd = app.add_subcommand("oracle-check", "Enumerate an oracle and confirm its period");
  oc_cmd->add_option("--n", oc.n, "Register width")->required();
  oc_cmd->add_option("--kind", oc.kind, "complex or simple")->capture_default_str();
  oc_cmd->callback([&] { action = [&] { return cmd_oracle_check(oc); }; });

  TranspileArgs tr;
  auto* tr_cmd = app.add_subcommand("transpile", "Place and route a Simon circuit, emit QASM");
  tr_cmd->add_option("--n", tr.n, "Register width")->required();
  tr_cmd->add_option("--kind", tr.kind, "complex or simple")->capture_default_str();
  tr_cmd->add_option("--map", tr.map, "eagle127, all-to-all[:k], line:k or a JSON file")
      ->required();
  tr_cmd->add_option("--placement", tr.placement, "trivial or greedy")->capture_default_str();
  tr_cmd->add_option("--seed", tr.seed, "Placement tie-break seed")->capture_default_str();
  tr_cmd->add_option("--qasm-out", tr.qasm_out, "Write QASM here");
  tr_cmd->add_option("--layout-out", tr.layout_out, "Write the layout report here");
  tr_cmd->callback([&] { action = [&] { return cmd_transpile(tr); }; });

  CnotDistanceArgs cd;
  auto* cd_cmd = app.add_subcommand("cnot-distance", "CNOT failure rate against hop distance");
  cd_cmd->add_option("--map", cd.map, "Coupling map")->capture_default_str();
  cd_cmd->add_option("--device", cd.device, "Device whose error rates are used")
      ->capture_default_str();
  cd_cmd->add_option("--devices-file", cd.devices_file, "Device table (JSON)");
  cd_cmd->add_option("--control", cd.control, "Control qubit")->capture_default_str();
  cd_cmd->add_option("--targets", cd.targets, "Targets, e.g. 40-45 or 40,41")
      ->capture_default_str();
  cd_cmd->add_option("--shots", cd.shots, "Shots per target")->capture_default_str();
  cd_cmd->add_option("--multiplier", cd.multiplier, "SWAP error multiplier")->capture_default_str();
  cd_cmd->add_option("--seed", cd.seed, "Master seed")->capture_default_str();
  cd_cmd->add_option("--workers", cd.workers, "Worker threads")->capture_default_str();
  cd_cmd->add_flag("--gate-only", cd.gate_only, "Drop single-qubit and readout noise");
  cd_cmd->callback([&] { action = [&] { return cmd_cnot_distance(cd); }; });

  ExtrapolateArgs ex;
  auto* ex_cmd = app.add_subcommand("extrapolate", "Linear fit of mean error rate against n");
  ex_cmd->add_option("--input", ex.input, "Error-rate table (CSV or JSON)")->required();
  ex_cmd->add_option("--target-n", ex.target_n, "Projection point")->capture_default_str();
  ex_cmd->add_option("--oracle", ex.oracle, "Fit one oracle kind only");
  ex_cmd->callback([&] { action = [&] { return cmd_extrapolate(ex); }; });

  ReportArgs rp;
  auto* rp_cmd = app.add_subcommand("report", "Re-emit an error-rate table as CSV or JSON");
  rp_cmd->add_option("--input", rp.input, "Error-rate table (CSV or JSON)")->required();
  rp_cmd->add_option("--format", rp.format, "csv or json")->capture_default_str();
  rp_cmd->add_option("--output,-o", rp.output, "Output file (default stdout)");
  rp_cmd->callback([&] { action = [&] { return cmd_report(rp); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    return action();
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitFailure;
  }
}
