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

#include "simonbench/gf2.hpp"

#include <algorithm>
#include <bit>
#include <string>
#include <unordered_map>

namespace simonbench {

RankError::RankError(Kind kind, std::size_t rank, std::size_t n)
    : std::runtime_error(kind == Kind::kInsufficient
                             ? "gf2: rank " + std::to_string(rank) + " is below n-1 = " +
                                   std::to_string(n - 1) + "; not enough independent rows"
                             : "gf2: rank " + std::to_string(rank) +
                                   " leaves only the zero vector; the system is overdetermined"),
      kind_(kind),
      rank_(rank) {}

bool dot_mod2(const Bitstring& a, const Bitstring& b) {
  if (a.size() != b.size()) {
    throw std::invalid_argument("gf2: dot product of lengths " + std::to_string(a.size()) +
                                " and " + std::to_string(b.size()));
  }
  unsigned parity = 0;
  const auto wa = a.words();
  const auto wb = b.words();
  for (std::size_t i = 0; i < wa.size(); ++i) parity ^= std::popcount(wa[i] & wb[i]) & 1U;
  return parity != 0;
}

std::size_t Gf2Matrix::rank() const {
  Gf2Basis basis(n);
  for (const auto& row : rows) basis.add_if_independent(row);
  return basis.rank();
}

Bitstring Gf2Basis::reduce(Bitstring v) const {
  if (v.size() != n_) {
    throw std::invalid_argument("gf2: vector of length " + std::to_string(v.size()) +
                                " for basis of width " + std::to_string(n_));
  }
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    if (v[pivots_[r]]) v ^= rows_[r];
  }
  return v;
}

bool Gf2Basis::add_if_independent(const Bitstring& v) {
  auto residue = reduce(v);
  const auto pivot = residue.first_set();
  if (!pivot) return false;
  // Clear the new pivot column from existing rows to stay fully reduced.
  for (auto& row : rows_) {
    if (row[*pivot]) row ^= residue;
  }
  const auto pos = static_cast<std::size_t>(
      std::lower_bound(pivots_.begin(), pivots_.end(), *pivot) - pivots_.begin());
  rows_.insert(rows_.begin() + static_cast<std::ptrdiff_t>(pos), std::move(residue));
  pivots_.insert(pivots_.begin() + static_cast<std::ptrdiff_t>(pos), *pivot);
  return true;
}

void Gf2Basis::clear() {
  rows_.clear();
  pivots_.clear();
}

Bitstring solve_secret(const Gf2Basis& basis) {
  const auto n = basis.n();
  if (n == 0 || basis.rank() < n - 1) {
    throw RankError(RankError::Kind::kInsufficient, basis.rank(), n);
  }
  if (basis.rank() == n) throw RankError(RankError::Kind::kOverdetermined, basis.rank(), n);

  // Exactly one free column; set it and read each pivot variable off its row.
  std::size_t free_col = n - 1;
  for (std::size_t c = 0, r = 0; c < n; ++c) {
    if (r < basis.pivots().size() && basis.pivots()[r] == c) {
      ++r;
    } else {
      free_col = c;
      break;
    }
  }
  Bitstring secret(n);
  secret.set(free_col);
  for (std::size_t r = 0; r < basis.rank(); ++r) {
    if (basis.rows()[r][free_col]) secret.set(basis.pivots()[r]);
  }
  return secret;
}

Bitstring brute_force_secret(const std::function<Bitstring(const Bitstring&)>& f, std::size_t n) {
  if (n == 0 || n > 16) {
    throw std::invalid_argument("gf2: brute force supports 1 <= n <= 16, got " +
                                std::to_string(n));
  }
  std::unordered_map<std::string, std::uint64_t> first_preimage;
  const std::uint64_t count = std::uint64_t{1} << n;
  for (std::uint64_t x = 0; x < count; ++x) {
    const auto input = Bitstring::from_index(x, n);
    auto [it, inserted] = first_preimage.emplace(f(input).to_string(), x);
    if (!inserted) return Bitstring::from_index(it->second ^ x, n);
  }
  throw NoPeriodError("gf2: function is one-to-one on " + std::to_string(n) + "-bit inputs");
}

}  // namespace simonbench
