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

#include <doctest.h>

#include <map>
#include <random>
#include <set>

#include "simonbench/bitstring.hpp"
#include "simonbench/circuit.hpp"
#include "simonbench/gf2.hpp"
#include "simonbench/oracle.hpp"
#include "simonbench/qasm.hpp"
#include "simonbench/simulator.hpp"

using namespace simonbench;

namespace {

std::vector<GateOp> cnots(std::initializer_list<std::pair<std::size_t, std::size_t>> pairs) {
  std::vector<GateOp> out;
  for (auto [c, t] : pairs) out.push_back(GateOp{GateKind::kCnot, {c, t}, 0, false});
  return out;
}

// Exhaustive check that f is two-to-one with period s.
void check_two_to_one(OracleKind kind, const Bitstring& s) {
  const auto n = s.size();
  std::map<std::string, std::vector<std::uint64_t>> preimages;
  for (std::uint64_t v = 0; v < (std::uint64_t{1} << n); ++v) {
    const auto x = Bitstring::from_index(v, n);
    const auto fx = classical_oracle_eval(kind, x, s);
    REQUIRE(fx == classical_oracle_eval(kind, x ^ s, s));
    preimages[fx.to_string()].push_back(v);
  }
  REQUIRE(preimages.size() == (std::size_t{1} << (n - 1)));
  for (const auto& [image, xs] : preimages) {
    REQUIRE(xs.size() == 2);
    CHECK((xs[0] ^ xs[1]) == s.to_index());
  }
}

}  // namespace

TEST_CASE("bitstring text and index forms") {
  const auto b = Bitstring::from_string("1011");
  CHECK(b.size() == 4);
  CHECK(b.test(0));
  CHECK_FALSE(b.test(1));
  CHECK(b.to_index() == 0b1011);
  CHECK(Bitstring::from_index(0b1011, 4) == b);
  CHECK(b.count() == 3);
  CHECK(b.first_set() == 0);
  CHECK(Bitstring(5).none());
  CHECK_FALSE(Bitstring(5).first_set());
  CHECK(Bitstring::ones(70).count() == 70);
  CHECK_THROWS_AS(Bitstring::from_string("10x"), std::invalid_argument);
  CHECK_THROWS_AS(b ^ Bitstring(3), std::invalid_argument);
  CHECK((b ^ Bitstring::ones(4)).to_string() == "0100");

  // Words pack bit i at position i % 64, across word boundaries too.
  Bitstring wide(130);
  wide.set(129);
  wide.set(64);
  CHECK(wide.words()[1] == 1);
  CHECK(wide.words()[2] == 2);
}

TEST_CASE("new_circuit") {
  const auto c = new_circuit(2);
  CHECK(c.width() == 4);
  CHECK(c.empty());
  CHECK(new_circuit(12).width() == 24);
  CHECK_THROWS_AS(new_circuit(1), std::invalid_argument);
}

TEST_CASE("circuit append validation") {
  Circuit c(3, 3);
  CHECK_THROWS_AS(c.h(3), std::invalid_argument);
  CHECK_THROWS_AS(c.cnot(1, 1), std::invalid_argument);
  CHECK_THROWS_AS(c.measure(0, 3), std::invalid_argument);
  c.h(0).cnot(0, 2).measure(2, 0);
  CHECK_THROWS_AS(c.x(1), std::invalid_argument);
  CHECK(c.count(GateKind::kH) == 1);
  CHECK(c.two_qubit_count() == 1);
  CHECK(c.has_measurements());
  CHECK_THROWS_AS(Circuit(2, 0, 3), std::invalid_argument);
}

TEST_CASE("simple oracle structure") {
  CHECK(build_simple_oracle(2).ops() == cnots({{0, 2}, {1, 2}}));
  CHECK(build_simple_oracle(3).size() == 4);
  for (std::size_t n = 2; n <= 12; ++n) {
    CHECK(build_simple_oracle(n).count(GateKind::kCnot) == 2 * (n - 1));
  }
  CHECK(classical_oracle_eval(OracleKind::kSimple, 3, Bitstring::from_string("110")).to_string() ==
        "010");
  check_two_to_one(OracleKind::kSimple, Bitstring::ones(5));
}

TEST_CASE("complex oracle structure") {
  CHECK(build_complex_oracle(2).ops() == cnots({{0, 2}, {1, 3}, {0, 2}, {0, 3}}));
  CHECK(build_complex_oracle(12).count(GateKind::kCnot) == 24);
  const auto f = [](const char* x) {
    return classical_oracle_eval(OracleKind::kComplex, 3, Bitstring::from_string(x)).to_string();
  };
  CHECK(f("010") == "010");
  CHECK(f("101") == "010");
  CHECK_THROWS_AS(build_complex_oracle(1), std::invalid_argument);
}

TEST_CASE("oracles are two-to-one with period 1^n up to n = 10") {
  for (auto kind : {OracleKind::kComplex, OracleKind::kSimple}) {
    for (std::size_t n = 2; n <= 10; ++n) {
      CAPTURE(n);
      check_two_to_one(kind, Bitstring::ones(n));
    }
  }
}

TEST_CASE("oracles with arbitrary secrets") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 2 + rng() % 7;
    Bitstring s(n);
    while (s.none()) s = Bitstring::from_index(rng() & ((1ULL << n) - 1), n);
    for (auto kind : {OracleKind::kComplex, OracleKind::kSimple}) {
      CAPTURE(s.to_string());
      check_two_to_one(kind, s);
      const auto f = [&](const Bitstring& x) { return classical_oracle_eval(kind, x, s); };
      CHECK(brute_force_secret(f, n) == s);
    }
  }
  CHECK_THROWS_AS(build_oracle(OracleKind::kSimple, Bitstring(3)), std::invalid_argument);
}

TEST_CASE("oracle circuit agrees with the classical evaluator on basis states") {
  for (auto kind : {OracleKind::kComplex, OracleKind::kSimple}) {
    for (std::size_t n = 2; n <= 5; ++n) {
      const auto oracle = build_oracle(kind, Bitstring::ones(n));
      for (std::uint64_t v = 0; v < (1ULL << n); ++v) {
        const auto x = Bitstring::from_index(v, n);
        for (std::uint64_t yv : {std::uint64_t{0}, (std::uint64_t{1} << n) - 1, v}) {
          const auto y = Bitstring::from_index(yv, n);
          Circuit c(2 * n, 0);
          for (std::size_t i = 0; i < n; ++i) {
            if (x[i]) c.x(i);
            if (y[i]) c.x(n + i);
          }
          c.append(oracle);
          const auto state = simulate_unitary(c);
          const auto fy = classical_oracle_eval(kind, n, x) ^ y;
          const std::uint64_t expected = (v << n) | fy.to_index();
          CHECK(state.probability(expected) == doctest::Approx(1.0));
        }
      }
    }
  }
}

TEST_CASE("simon circuit composition") {
  const auto c = build_simon_circuit(2, OracleKind::kSimple);
  CHECK(c.size() == 10);  // 2 H, 2 CNOT, 2 H, 4 MEASURE
  CHECK(c.count(GateKind::kH) == 4);
  CHECK(c.count(GateKind::kMeasure) == 4);
  CHECK(c.register_split() == 2);

  const auto records = run_ideal(build_simon_circuit(2, OracleKind::kComplex), 2000, 3);
  std::set<std::string> seen;
  for (const auto& r : records) seen.insert(r.register1.to_string());
  CHECK(seen == std::set<std::string>{"00", "11"});

  for (auto kind : {OracleKind::kComplex, OracleKind::kSimple}) {
    const auto state = simulate_unitary(build_simon_circuit(3, kind));
    const auto s = Bitstring::ones(3);
    for (std::uint64_t i = 0; i < state.dimension(); ++i) {
      if (state.probability(i) < 1e-12) continue;
      CHECK_FALSE(dot_mod2(Bitstring::from_index(i >> 3, 3), s));
    }
  }
}

TEST_CASE("qasm emission") {
  Circuit one(1, 0);
  one.h(0);
  const auto text = emit_qasm(one);
  CHECK(text.find("h q[0];") != std::string::npos);
  CHECK(text.find("creg") == std::string::npos);

  const auto empty = emit_qasm(Circuit(3, 2));
  CHECK(empty == "OPENQASM 2.0;\ninclude \"qelib1.inc\";\nqreg q[3];\ncreg c[2];\n");

  const auto simon = emit_qasm(build_simon_circuit(2, OracleKind::kSimple));
  std::size_t statements = 0;
  for (char ch : simon) statements += ch == ';';
  CHECK(statements == 4 + 10);  // header, then one per op
  CHECK(simon.find("cx q[0],q[2];") < simon.find("cx q[1],q[2];"));
}

TEST_CASE("qasm round trip") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t w = 2 + rng() % 8;
    Circuit c(w, w, rng() % (w + 1));
    for (int g = 0; g < 30; ++g) {
      const auto a = rng() % w;
      auto b = rng() % w;
      if (b == a) b = (a + 1) % w;
      switch (rng() % 4) {
        case 0: c.h(a); break;
        case 1: c.x(a); break;
        case 2: c.cnot(a, b); break;
        default: c.swap(a, b); break;
      }
    }
    for (std::size_t q = 0; q < w; ++q) c.measure(q, w - 1 - q);
    const auto parsed = parse_qasm(emit_qasm(c));
    CHECK(parsed.ops() == c.ops());
    CHECK(parsed.width() == c.width());
    CHECK(parsed.num_clbits() == c.num_clbits());
  }
}

TEST_CASE("qasm parse errors carry the line") {
  try {
    parse_qasm("OPENQASM 2.0;\ninclude \"qelib1.inc\";\nqreg q[2];\nrz(0.1) q[0];\n");
    FAIL("expected QasmParseError");
  } catch (const QasmParseError& e) {
    CHECK(e.line() == 4);
  }
  CHECK_THROWS_AS(parse_qasm("OPENQASM 2.0;\nqreg q[2];\nh q[5];\n"), QasmParseError);
}
