/* Copyright (C) 2026 The quintrace Authors
 * This program is Licensed under the Apache License, Version 2.0
 * (the "License"); you may not use this file except in compliance
 * with the License. You may obtain a copy of the License at
 *   http://www.apache.org/licenses/LICENSE-2.0
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License. See accompanying LICENSE file.
 */

#ifndef QUINTRACE_BITS_HPP
#define QUINTRACE_BITS_HPP

#include <bit>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace quintrace {

/// Fixed-length vector over GF(2), 64 bits per word, unused tail bits zero.
class BitVector {
 public:
  BitVector() = default;
  explicit BitVector(std::size_t n) : size_(n), words_((n + 63) / 64, 0) {}

  std::size_t size() const noexcept { return size_; }
  bool get(std::size_t i) const noexcept { return (words_[i >> 6] >> (i & 63)) & 1u; }
  void set(std::size_t i, bool value = true) noexcept {
    const std::uint64_t bit = std::uint64_t{1} << (i & 63);
    if (value) words_[i >> 6] |= bit;
    else words_[i >> 6] &= ~bit;
  }
  void flip(std::size_t i) noexcept { words_[i >> 6] ^= std::uint64_t{1} << (i & 63); }

  BitVector& operator^=(const BitVector& other);
  friend BitVector operator^(BitVector a, const BitVector& b) { return a ^= b; }
  friend bool operator==(const BitVector&, const BitVector&) = default;

  std::size_t weight() const noexcept;
  bool none() const noexcept;
  /// <this, other> over GF(2).
  bool dot(const BitVector& other) const;
  /// support(this) is a subset of support(other)
  bool covered_by(const BitVector& other) const;

  std::vector<std::size_t> support() const;
  std::string to_string() const;

  const std::vector<std::uint64_t>& words() const noexcept { return words_; }

 private:
  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

/// Row-major binary matrix with at most 64 rows, so every column packs
/// into one machine word.
class BinaryMatrix {
 public:
  BinaryMatrix(std::size_t rows, std::size_t cols);

  std::size_t rows() const noexcept { return rows_.size(); }
  std::size_t cols() const noexcept { return cols_; }
  const BitVector& row(std::size_t r) const { return rows_.at(r); }
  BitVector& row(std::size_t r) { return rows_.at(r); }
  bool get(std::size_t r, std::size_t c) const { return rows_[r].get(c); }
  void set(std::size_t r, std::size_t c, bool value = true) { rows_[r].set(c, value); }

  /// Bit r of the result is entry (r, c).
  std::uint64_t column(std::size_t c) const;
  std::vector<std::uint64_t> columns() const;

  /// GF(2) rank by elimination on a copy.
  std::size_t rank() const;

  /// sum_r message_r * row_r
  BitVector encode(std::uint64_t message) const;

  /// H * x^T as a packed row-indexed word: bit r = <row_r, x>.
  std::uint64_t syndrome(const BitVector& x) const;

 private:
  std::size_t cols_;
  std::vector<BitVector> rows_;
};

}  // namespace quintrace

#endif  // QUINTRACE_BITS_HPP
