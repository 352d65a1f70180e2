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

#include "simonbench/qasm.hpp"

#include <charconv>
#include <optional>
#include <sstream>
#include <vector>

namespace simonbench {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

// Parses "<reg>[<index>]" and checks the register name.
std::size_t parse_ref(std::string_view token, char reg, std::size_t line) {
  token = trim(token);
  if (token.size() < 4 || token[0] != reg || token[1] != '[' || token.back() != ']') {
    throw QasmParseError(line, "expected " + std::string(1, reg) + "[i], got '" +
                                   std::string(token) + "'");
  }
  std::size_t value = 0;
  const auto digits = token.substr(2, token.size() - 3);
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
  if (ec != std::errc() || ptr != digits.data() + digits.size()) {
    throw QasmParseError(line, "bad index in '" + std::string(token) + "'");
  }
  return value;
}

std::vector<std::string_view> split_args(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const auto comma = s.find(',', start);
    out.push_back(trim(s.substr(start, comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

}  // namespace

std::string emit_qasm(const Circuit& circuit) {
  std::ostringstream out;
  out << "OPENQASM 2.0;\n";
  out << "include \"qelib1.inc\";\n";
  out << "qreg q[" << circuit.width() << "];\n";
  if (circuit.num_clbits() > 0) out << "creg c[" << circuit.num_clbits() << "];\n";
  for (const auto& op : circuit.ops()) {
    switch (op.kind) {
      case GateKind::kH:
      case GateKind::kX:
        out << gate_name(op.kind) << " q[" << op.qubits[0] << "];\n";
        break;
      case GateKind::kCnot:
      case GateKind::kSwap:
        out << gate_name(op.kind) << " q[" << op.qubits[0] << "],q[" << op.qubits[1] << "];\n";
        break;
      case GateKind::kMeasure:
        out << "measure q[" << op.qubits[0] << "] -> c[" << op.clbit << "];\n";
        break;
    }
  }
  return out.str();
}

Circuit parse_qasm(std::string_view text) {
  std::optional<std::size_t> width;
  std::size_t num_clbits = 0;
  std::optional<Circuit> circuit;
  bool saw_header = false;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto eol = text.find('\n', pos);
    std::string_view line = text.substr(pos, eol == std::string_view::npos ? text.npos : eol - pos);
    pos = (eol == std::string_view::npos) ? text.size() + 1 : eol + 1;
    ++line_no;

    if (auto comment = line.find("//"); comment != std::string_view::npos) {
      line = line.substr(0, comment);
    }
    line = trim(line);
    if (line.empty()) continue;
    if (line.back() != ';') throw QasmParseError(line_no, "missing ';'");
    line = trim(line.substr(0, line.size() - 1));

    const auto space = line.find(' ');
    const auto keyword = line.substr(0, space);
    const auto rest = space == std::string_view::npos ? std::string_view{} : trim(line.substr(space));

    if (keyword == "OPENQASM") {
      if (rest != "2.0") throw QasmParseError(line_no, "unsupported version");
      saw_header = true;
      continue;
    }
    if (!saw_header) throw QasmParseError(line_no, "missing OPENQASM 2.0 header");
    if (keyword == "include") continue;
    if (keyword == "qreg") {
      if (width) throw QasmParseError(line_no, "only one qreg is supported");
      width = parse_ref(rest, 'q', line_no);
      continue;
    }
    if (keyword == "creg") {
      if (circuit) throw QasmParseError(line_no, "creg after first gate");
      num_clbits = parse_ref(rest, 'c', line_no);
      continue;
    }
    if (!width) throw QasmParseError(line_no, "gate before qreg");
    if (!circuit) circuit.emplace(*width, num_clbits);

    try {
      if (keyword == "h" || keyword == "x") {
        const auto q = parse_ref(rest, 'q', line_no);
        keyword == "h" ? circuit->h(q) : circuit->x(q);
      } else if (keyword == "cx" || keyword == "swap") {
        const auto args = split_args(rest);
        if (args.size() != 2) throw QasmParseError(line_no, "expected two qubit arguments");
        const auto a = parse_ref(args[0], 'q', line_no);
        const auto b = parse_ref(args[1], 'q', line_no);
        keyword == "cx" ? circuit->cnot(a, b) : circuit->swap(a, b);
      } else if (keyword == "measure") {
        const auto arrow = rest.find("->");
        if (arrow == std::string_view::npos) throw QasmParseError(line_no, "measure without '->'");
        circuit->measure(parse_ref(rest.substr(0, arrow), 'q', line_no),
                         parse_ref(rest.substr(arrow + 2), 'c', line_no));
      } else {
        throw QasmParseError(line_no, "unsupported statement '" + std::string(keyword) + "'");
      }
    } catch (const std::invalid_argument& e) {
      throw QasmParseError(line_no, e.what());
    }
  }
  if (!width) throw QasmParseError(line_no, "no qreg declaration");
  if (!circuit) circuit.emplace(*width, num_clbits);
  return *std::move(circuit);
}

}  // namespace simonbench
