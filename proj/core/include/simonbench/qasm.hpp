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

#ifndef SIMONBENCH_QASM_HPP
#define SIMONBENCH_QASM_HPP

#include <stdexcept>
#include <string>
#include <string_view>

#include "simonbench/circuit.hpp"

namespace simonbench {

class QasmParseError : public std::runtime_error {
 public:
  QasmParseError(std::size_t line, const std::string& message)
      : std::runtime_error("qasm line " + std::to_string(line) + ": " + message), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// OpenQASM 2.0 text with one `qreg q[width]`, a `creg c[...]` when the circuit
/// has classical bits, and one statement per op using h, x, cx, swap, measure.
std::string emit_qasm(const Circuit& circuit);

/// Reads back the subset written by emit_qasm. The register split and the
/// inserted-SWAP flags are not represented in QASM and come back as 0/false.
Circuit parse_qasm(std::string_view text);

}  // namespace simonbench

#endif  // SIMONBENCH_QASM_HPP
