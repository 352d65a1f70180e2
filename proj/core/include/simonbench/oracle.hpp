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

#ifndef SIMONBENCH_ORACLE_HPP
#define SIMONBENCH_ORACLE_HPP

#include <cstddef>
#include <string_view>

#include "simonbench/bitstring.hpp"
#include "simonbench/circuit.hpp"

namespace simonbench {

/// The two oracle extremes: Complex uses the most two-qubit gates, Simple the
/// fewest. Both implement a two-to-one function with period `secret`.
enum class OracleKind { kComplex, kSimple };

std::string_view oracle_name(OracleKind kind);
/// Accepts "complex" / "simple". Throws std::invalid_argument.
OracleKind parse_oracle_kind(std::string_view text);

// Oracle fragments act on a width-2n circuit: x register on lines [0, n),
// y register on lines [n, 2n). Only CNOTs are emitted.
//
// Simple, s = 1^n:  f(x)_i = x_i ^ x_{i+1} for i < n-1, f(x)_{n-1} = 0.
//   For a general s the chain runs over the set positions of s, and
//   positions where s is 0 are copied: 2(|s|-1) + (n-|s|) CNOTs.
// Complex, s = 1^n: f(x) = x ^ (x_0 * 1^n). Copy every x_i into y_i, then
//   CNOT from line 0 onto every y_i. For a general s, the control is the first
//   set position p of s and the second pass targets only the set positions:
//   n + |s| CNOTs. The back-to-back CNOT pair on y_p is intentional.

Circuit build_simple_oracle(std::size_t n);
Circuit build_complex_oracle(std::size_t n);
/// Throws std::invalid_argument if `secret` is all-zero or shorter than 2.
Circuit build_oracle(OracleKind kind, const Bitstring& secret);

/// H on register 1, oracle, H on register 1, MEASURE every line into the
/// classical bit of the same index. Register 2 is not measured mid-circuit.
Circuit build_simon_circuit(std::size_t n, OracleKind kind);
Circuit build_simon_circuit(OracleKind kind, const Bitstring& secret);

/// Classical evaluation of the oracle function. Throws std::invalid_argument
/// on length mismatch.
Bitstring classical_oracle_eval(OracleKind kind, std::size_t n, const Bitstring& x);
Bitstring classical_oracle_eval(OracleKind kind, const Bitstring& x, const Bitstring& secret);

}  // namespace simonbench

#endif  // SIMONBENCH_ORACLE_HPP
