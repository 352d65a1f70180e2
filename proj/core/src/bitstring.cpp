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

#include "simonbench/bitstring.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace simonbench {

namespace {

constexpr std::size_t kWordBits = 64;

std::size_t words_for(std::size_t length) {
  return (length + kWordBits - 1) / kWordBits;
}

}  // namespace

Bitstring::Bitstring(std::size_t length) : words_(words_for(length), 0), size_(length) {}

Bitstring Bitstring::from_string(std::string_view text) {
  Bitstring out(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '1') {
      out.set(i);
    } else if (text[i] != '0') {
      throw std::invalid_argument("bitstring: invalid character '" + std::string(1, text[i]) +
                                  "' at position " + std::to_string(i));
    }
  }
  return out;
}

Bitstring Bitstring::ones(std::size_t length) {
  Bitstring out(length);
  for (auto& w : out.words_) w = ~std::uint64_t{0};
  if (length % kWordBits != 0 && !out.words_.empty()) {
    out.words_.back() = (std::uint64_t{1} << (length % kWordBits)) - 1;
  }
  return out;
}

Bitstring Bitstring::from_index(std::uint64_t value, std::size_t length) {
  if (length > kWordBits) {
    throw std::invalid_argument("bitstring: from_index supports at most 64 bits");
  }
  Bitstring out(length);
  for (std::size_t i = 0; i < length; ++i) {
    if ((value >> (length - 1 - i)) & 1U) out.set(i);
  }
  return out;
}

bool Bitstring::test(std::size_t i) const {
  if (i >= size_) throw std::out_of_range("bitstring: index out of range");
  return (words_[i / kWordBits] >> (i % kWordBits)) & 1U;
}

void Bitstring::set(std::size_t i, bool value) {
  if (i >= size_) throw std::out_of_range("bitstring: index out of range");
  const std::uint64_t mask = std::uint64_t{1} << (i % kWordBits);
  if (value) {
    words_[i / kWordBits] |= mask;
  } else {
    words_[i / kWordBits] &= ~mask;
  }
}

void Bitstring::flip(std::size_t i) {
  if (i >= size_) throw std::out_of_range("bitstring: index out of range");
  words_[i / kWordBits] ^= std::uint64_t{1} << (i % kWordBits);
}

std::uint64_t Bitstring::to_index() const {
  if (size_ > kWordBits) {
    throw std::invalid_argument("bitstring: to_index supports at most 64 bits");
  }
  std::uint64_t value = 0;
  for (std::size_t i = 0; i < size_; ++i) {
    value = (value << 1) | static_cast<std::uint64_t>(test(i));
  }
  return value;
}

std::string Bitstring::to_string() const {
  std::string out(size_, '0');
  for (std::size_t i = 0; i < size_; ++i) {
    if (test(i)) out[i] = '1';
  }
  return out;
}

bool Bitstring::none() const {
  return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
}

std::size_t Bitstring::count() const {
  std::size_t total = 0;
  for (auto w : words_) total += static_cast<std::size_t>(std::popcount(w));
  return total;
}

std::optional<std::size_t> Bitstring::first_set() const {
  for (std::size_t w = 0; w < words_.size(); ++w) {
    if (words_[w] != 0) {
      return w * kWordBits + static_cast<std::size_t>(std::countr_zero(words_[w]));
    }
  }
  return std::nullopt;
}

Bitstring& Bitstring::operator^=(const Bitstring& other) {
  if (other.size_ != size_) {
    throw std::invalid_argument("bitstring: length mismatch (" + std::to_string(size_) + " vs " +
                                std::to_string(other.size_) + ")");
  }
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] ^= other.words_[w];
  return *this;
}

std::strong_ordering operator<=>(const Bitstring& a, const Bitstring& b) {
  if (auto c = a.size_ <=> b.size_; c != 0) return c;
  // Lexicographic on the textual form.
  for (std::size_t i = 0; i < a.size_; ++i) {
    if (auto c = a.test(i) <=> b.test(i); c != 0) return c;
  }
  return std::strong_ordering::equal;
}

}  // namespace simonbench
