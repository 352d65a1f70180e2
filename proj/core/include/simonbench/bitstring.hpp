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

#ifndef SIMONBENCH_BITSTRING_HPP
#define SIMONBENCH_BITSTRING_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace simonbench {

/// Fixed-length string of bits.
///
/// Textual form is MSB-left: character i of `to_string()` is bit i, and bit i
/// corresponds to qubit line i. Storage is packed 64 bits per word with bit i
/// in word i / 64 at position i % 64, so word-wide XOR works for elimination.
class Bitstring {
 public:
  Bitstring() = default;
  explicit Bitstring(std::size_t length);

  /// Parses a string of '0'/'1' characters. Throws std::invalid_argument.
  static Bitstring from_string(std::string_view text);
  static Bitstring ones(std::size_t length);
  /// Bit i of the result is bit (length - 1 - i) of `value`, so that the
  /// string reads as the binary numeral of `value`.
  static Bitstring from_index(std::uint64_t value, std::size_t length);

  std::size_t size() const { return size_; }
  bool empty() const { return size_ == 0; }

  bool test(std::size_t i) const;
  bool operator[](std::size_t i) const { return test(i); }
  void set(std::size_t i, bool value = true);
  void flip(std::size_t i);

  /// Inverse of from_index. Requires size() <= 64.
  std::uint64_t to_index() const;
  std::string to_string() const;

  bool none() const;
  std::size_t count() const;
  /// Lowest set position, if any.
  std::optional<std::size_t> first_set() const;

  Bitstring& operator^=(const Bitstring& other);
  friend Bitstring operator^(Bitstring lhs, const Bitstring& rhs) {
    lhs ^= rhs;
    return lhs;
  }

  std::span<const std::uint64_t> words() const { return words_; }

  friend bool operator==(const Bitstring&, const Bitstring&) = default;
  friend std::strong_ordering operator<=>(const Bitstring& a, const Bitstring& b);

 private:
  std::vector<std::uint64_t> words_;
  std::size_t size_ = 0;
};

}  // namespace simonbench

#endif  // SIMONBENCH_BITSTRING_HPP
