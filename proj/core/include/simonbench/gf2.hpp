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

#ifndef SIMONBENCH_GF2_HPP
#define SIMONBENCH_GF2_HPP

#include <cstddef>
#include <functional>
#include <stdexcept>
#include <vector>

#include "simonbench/bitstring.hpp"

namespace simonbench {

/// Raised by solve_secret when the accumulated system does not pin down a
/// single nonzero secret.
class RankError : public std::runtime_error {
 public:
  enum class Kind { kInsufficient, kOverdetermined };
  RankError(Kind kind, std::size_t rank, std::size_t n);
  Kind kind() const { return kind_; }
  std::size_t rank() const { return rank_; }

 private:
  Kind kind_;
  std::size_t rank_;
};

class NoPeriodError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Inner product over GF(2). Throws std::invalid_argument on length mismatch.
bool dot_mod2(const Bitstring& a, const Bitstring& b);

/// Rows of equal width n.
struct Gf2Matrix {
  std::size_t n = 0;
  std::vector<Bitstring> rows;

  /// Rank by elimination on a copy.
  std::size_t rank() const;
};

/// Incrementally built reduced row-echelon basis.
///
/// Pivots are the lowest set position of each row and strictly increase
/// down the rows; every pivot column is zero in all other rows.
class Gf2Basis {
 public:
  explicit Gf2Basis(std::size_t n) : n_(n) {}

  std::size_t n() const { return n_; }
  std::size_t rank() const { return rows_.size(); }
  const std::vector<Bitstring>& rows() const { return rows_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  /// Reduces `v` against the basis; the residue is zero iff v is in the span.
  Bitstring reduce(Bitstring v) const;
  bool in_span(const Bitstring& v) const { return reduce(v).none(); }

  /// Accepts v iff it lies outside the current span, growing rank by one.
  /// The zero vector is always rejected.
  bool add_if_independent(const Bitstring& v);

  void clear();

 private:
  std::size_t n_;
  std::vector<Bitstring> rows_;
  std::vector<std::size_t> pivots_;
};

/// The nonzero vector orthogonal to every row of a rank n-1 basis.
/// Throws RankError when rank != n - 1.
Bitstring solve_secret(const Gf2Basis& basis);

/// Exhaustive search for the period of a two-to-one function on n-bit inputs:
/// returns x ^ x' for the first colliding pair. Requires n <= 16. Throws
/// NoPeriodError when f is one-to-one.
Bitstring brute_force_secret(const std::function<Bitstring(const Bitstring&)>& f, std::size_t n);

}  // namespace simonbench

#endif  // SIMONBENCH_GF2_HPP
