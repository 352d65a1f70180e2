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

#include <random>

#include "simonbench/gf2.hpp"
#include "simonbench/oracle.hpp"
#include "simonbench/simulator.hpp"

using namespace simonbench;

namespace {

Bitstring bits(const char* text) { return Bitstring::from_string(text); }

Bitstring random_bits(std::size_t n, std::mt19937_64& rng) {
  Bitstring b(n);
  for (std::size_t i = 0; i < n; ++i) b.set(i, rng() & 1U);
  return b;
}

}  // namespace

TEST_CASE("dot_mod2") {
  CHECK_FALSE(dot_mod2(bits("110"), bits("111")));
  CHECK(dot_mod2(bits("100"), bits("111")));
  CHECK_FALSE(dot_mod2(bits("000"), bits("101")));
  CHECK_THROWS_AS(dot_mod2(bits("10"), bits("101")), std::invalid_argument);
  Bitstring a(100), b(100);
  a.set(3);
  a.set(90);
  b.set(90);
  CHECK(dot_mod2(a, b));
}

TEST_CASE("add_if_independent") {
  Gf2Basis basis(3);
  CHECK_FALSE(basis.add_if_independent(bits("000")));
  CHECK(basis.add_if_independent(bits("110")));
  CHECK_FALSE(basis.add_if_independent(bits("110")));
  CHECK(basis.add_if_independent(bits("011")));
  CHECK_FALSE(basis.add_if_independent(bits("101")));
  CHECK(basis.rank() == 2);
  CHECK(basis.in_span(bits("101")));
  basis.clear();
  CHECK(basis.rank() == 0);
}

TEST_CASE("solve_secret") {
  Gf2Basis b3(3);
  b3.add_if_independent(bits("110"));
  try {
    solve_secret(b3);
    FAIL("expected RankError");
  } catch (const RankError& e) {
    CHECK(e.kind() == RankError::Kind::kInsufficient);
    CHECK(e.rank() == 1);
  }
  b3.add_if_independent(bits("011"));
  CHECK(solve_secret(b3) == bits("111"));

  Gf2Basis b2(2);
  b2.add_if_independent(bits("11"));
  CHECK(solve_secret(b2) == bits("11"));

  Gf2Basis full(2);
  full.add_if_independent(bits("10"));
  full.add_if_independent(bits("01"));
  try {
    solve_secret(full);
    FAIL("expected RankError");
  } catch (const RankError& e) {
    CHECK(e.kind() == RankError::Kind::kOverdetermined);
  }
}

TEST_CASE("reduced row echelon invariant") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = 2 + rng() % 150;
    Gf2Basis basis(n);
    for (int i = 0; i < 200; ++i) basis.add_if_independent(random_bits(n, rng));
    CHECK(basis.rank() <= n);
    const auto& pivots = basis.pivots();
    for (std::size_t r = 0; r < basis.rank(); ++r) {
      if (r > 0) CHECK(pivots[r] > pivots[r - 1]);
      CHECK(basis.rows()[r].first_set() == pivots[r]);
      for (std::size_t o = 0; o < basis.rank(); ++o) {
        if (o != r) CHECK_FALSE(basis.rows()[o].test(pivots[r]));
      }
    }
    Gf2Matrix m{n, basis.rows()};
    CHECK(m.rank() == basis.rank());
  }
}

TEST_CASE("random nullspace fuzz") {
  // Rows orthogonal to a hidden s always solve back to s.
  std::mt19937_64 rng(123);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 2 + rng() % 80;
    Bitstring s(n);
    while (s.none()) s = random_bits(n, rng);
    Gf2Basis basis(n);
    std::vector<Bitstring> accepted;
    for (int guard = 0; basis.rank() < n - 1 && guard < 100000; ++guard) {
      auto z = random_bits(n, rng);
      if (dot_mod2(z, s)) continue;
      if (basis.add_if_independent(z)) accepted.push_back(z);
    }
    REQUIRE(basis.rank() == n - 1);
    const auto solved = solve_secret(basis);
    CHECK(solved == s);
    for (const auto& row : accepted) CHECK_FALSE(dot_mod2(row, solved));
  }
}

TEST_CASE("brute force secret") {
  const auto complex4 = [](const Bitstring& x) {
    return classical_oracle_eval(OracleKind::kComplex, 4, x);
  };
  CHECK(brute_force_secret(complex4, 4) == bits("1111"));
  const auto simple6 = [](const Bitstring& x) {
    return classical_oracle_eval(OracleKind::kSimple, 6, x);
  };
  CHECK(brute_force_secret(simple6, 6) == bits("111111"));
  CHECK_THROWS_AS(brute_force_secret([](const Bitstring& x) { return x; }, 3), NoPeriodError);
  CHECK_THROWS_AS(brute_force_secret([](const Bitstring& x) { return x; }, 17),
                  std::invalid_argument);
}

TEST_CASE("round trip from ideal Simon shots") {
  for (auto kind : {OracleKind::kComplex, OracleKind::kSimple}) {
    for (std::size_t n = 2; n <= 8; ++n) {
      const auto s = Bitstring::ones(n);
      Gf2Basis basis(n);
      for (const auto& shot : run_ideal(build_simon_circuit(n, kind), 400, n)) {
        basis.add_if_independent(shot.register1);
        CHECK(basis.rank() <= n - 1);
      }
      REQUIRE(basis.rank() == n - 1);
      const auto f = [&](const Bitstring& x) { return classical_oracle_eval(kind, n, x); };
      CHECK(solve_secret(basis) == brute_force_secret(f, n));
      CHECK(solve_secret(basis) == s);
    }
  }
}
