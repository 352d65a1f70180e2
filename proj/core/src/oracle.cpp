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

#include "simonbench/oracle.hpp"

#include <optional>
#include <stdexcept>
#include <string>

namespace simonbench {

namespace {

void check_secret(const Bitstring& secret) {
  if (secret.size() < 2) {
    throw std::invalid_argument("oracle: register size must be at least 2, got " +
                                std::to_string(secret.size()));
  }
  if (secret.none()) {
    throw std::invalid_argument("oracle: secret must be nonzero");
  }
}

// Next set position of `secret` after i.
std::optional<std::size_t> next_set(const Bitstring& secret, std::size_t i) {
  for (std::size_t j = i + 1; j < secret.size(); ++j) {
    if (secret[j]) return j;
  }
  return std::nullopt;
}

Circuit simple_fragment(const Bitstring& secret) {
  const std::size_t n = secret.size();
  Circuit fragment(2 * n, 0, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (!secret[i]) {
      fragment.cnot(i, n + i);
    } else if (auto next = next_set(secret, i)) {
      fragment.cnot(i, n + i);
      fragment.cnot(*next, n + i);
    }
  }
  return fragment;
}

Circuit complex_fragment(const Bitstring& secret) {
  const std::size_t n = secret.size();
  const std::size_t control = *secret.first_set();
  Circuit fragment(2 * n, 0, n);
  for (std::size_t i = 0; i < n; ++i) fragment.cnot(i, n + i);
  for (std::size_t i = 0; i < n; ++i) {
    if (secret[i]) fragment.cnot(control, n + i);
  }
  return fragment;
}

}  // namespace

std::string_view oracle_name(OracleKind kind) {
  return kind == OracleKind::kComplex ? "complex" : "simple";
}

OracleKind parse_oracle_kind(std::string_view text) {
  if (text == "complex") return OracleKind::kComplex;
  if (text == "simple") return OracleKind::kSimple;
  throw std::invalid_argument("unknown oracle kind '" + std::string(text) +
                              "' (expected complex or simple)");
}

Circuit build_simple_oracle(std::size_t n) {
  return build_oracle(OracleKind::kSimple, Bitstring::ones(n));
}

Circuit build_complex_oracle(std::size_t n) {
  return build_oracle(OracleKind::kComplex, Bitstring::ones(n));
}

Circuit build_oracle(OracleKind kind, const Bitstring& secret) {
  check_secret(secret);
  return kind == OracleKind::kComplex ? complex_fragment(secret) : simple_fragment(secret);
}

Circuit build_simon_circuit(std::size_t n, OracleKind kind) {
  if (n < 2) {
    throw std::invalid_argument("oracle: register size must be at least 2, got " +
                                std::to_string(n));
  }
  return build_simon_circuit(kind, Bitstring::ones(n));
}

Circuit build_simon_circuit(OracleKind kind, const Bitstring& secret) {
  const std::size_t n = secret.size();
  Circuit circuit = new_circuit(n);
  for (std::size_t i = 0; i < n; ++i) circuit.h(i);
  circuit.append(build_oracle(kind, secret));
  for (std::size_t i = 0; i < n; ++i) circuit.h(i);
  for (std::size_t q = 0; q < 2 * n; ++q) circuit.measure(q, q);
  return circuit;
}

Bitstring classical_oracle_eval(OracleKind kind, std::size_t n, const Bitstring& x) {
  if (x.size() != n) {
    throw std::invalid_argument("oracle: input length " + std::to_string(x.size()) +
                                " does not match n = " + std::to_string(n));
  }
  return classical_oracle_eval(kind, x, Bitstring::ones(n));
}

Bitstring classical_oracle_eval(OracleKind kind, const Bitstring& x, const Bitstring& secret) {
  check_secret(secret);
  if (x.size() != secret.size()) {
    throw std::invalid_argument("oracle: input length " + std::to_string(x.size()) +
                                " does not match secret length " + std::to_string(secret.size()));
  }
  const std::size_t n = secret.size();
  Bitstring out(n);
  if (kind == OracleKind::kComplex) {
    out = x;
    if (x[*secret.first_set()]) out ^= secret;
    return out;
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (!secret[i]) {
      out.set(i, x[i]);
    } else if (auto next = next_set(secret, i)) {
      out.set(i, x[i] != x[*next]);
    }
  }
  return out;
}

}  // namespace simonbench
