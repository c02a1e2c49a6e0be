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

#include "quintrace/bits.hpp"

#include <stdexcept>

namespace quintrace {

BitVector& BitVector::operator^=(const BitVector& other) {
  if (other.size_ != size_) throw std::invalid_argument("BitVector length mismatch");
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= other.words_[i];
  return *this;
}

std::size_t BitVector::weight() const noexcept {
  std::size_t w = 0;
  for (const auto word : words_) w += static_cast<std::size_t>(std::popcount(word));
  return w;
}

bool BitVector::none() const noexcept {
  for (const auto word : words_) {
    if (word != 0) return false;
  }
  return true;
}

bool BitVector::dot(const BitVector& other) const {
  if (other.size_ != size_) throw std::invalid_argument("BitVector length mismatch");
  unsigned parity = 0;
  for (std::size_t i = 0; i < words_.size(); ++i) parity ^= static_cast<unsigned>(std::popcount(words_[i] & other.words_[i]));
  return parity & 1u;
}

bool BitVector::covered_by(const BitVector& other) const {
  if (other.size_ != size_) throw std::invalid_argument("BitVector length mismatch");
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if (words_[i] & ~other.words_[i]) return false;
  }
  return true;
}

std::vector<std::size_t> BitVector::support() const {
  std::vector<std::size_t> out;
  for (std::size_t w = 0; w < words_.size(); ++w) {
    for (std::uint64_t word = words_[w]; word != 0; word &= word - 1) {
      out.push_back(w * 64 + static_cast<std::size_t>(std::countr_zero(word)));
    }
  }
  return out;
}

std::string BitVector::to_string() const {
  std::string s(size_, '0');
  for (std::size_t i = 0; i < size_; ++i) {
    if (get(i)) s[i] = '1';
  }
  return s;
}

BinaryMatrix::BinaryMatrix(std::size_t rows, std::size_t cols) : cols_(cols), rows_(rows, BitVector(cols)) {
  if (rows > 64) throw std::invalid_argument("BinaryMatrix supports at most 64 rows");
}

std::uint64_t BinaryMatrix::column(std::size_t c) const {
  if (c >= cols_) throw std::out_of_range("column index");
  std::uint64_t col = 0;
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    if (rows_[r].get(c)) col |= std::uint64_t{1} << r;
  }
  return col;
}

std::vector<std::uint64_t> BinaryMatrix::columns() const {
  std::vector<std::uint64_t> out(cols_, 0);
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    const auto& words = rows_[r].words();
    for (std::size_t w = 0; w < words.size(); ++w) {
      for (std::uint64_t word = words[w]; word != 0; word &= word - 1) {
        out[w * 64 + static_cast<std::size_t>(std::countr_zero(word))] |= std::uint64_t{1} << r;
      }
    }
  }
  return out;
}

std::size_t BinaryMatrix::rank() const {
  // Column vectors are at most 64 bits; an XOR basis keyed by top bit.
  std::uint64_t basis[64] = {};
  std::size_t rank = 0;
  for (auto col : columns()) {
    for (int b = 63; b >= 0 && col != 0; --b) {
      if (!((col >> b) & 1u)) continue;
      if (basis[b] == 0) {
        basis[b] = col;
        ++rank;
        col = 0;
      } else {
        col ^= basis[b];
      }
    }
  }
  return rank;
}

BitVector BinaryMatrix::encode(std::uint64_t message) const {
  BitVector out(cols_);
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    if ((message >> r) & 1u) out ^= rows_[r];
  }
  return out;
}

std::uint64_t BinaryMatrix::syndrome(const BitVector& x) const {
  std::uint64_t s = 0;
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    if (rows_[r].dot(x)) s |= std::uint64_t{1} << r;
  }
  return s;
}

}  // namespace quintrace
