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

#ifndef QUINTRACE_GF2M_HPP
#define QUINTRACE_GF2M_HPP

#include <bit>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace quintrace {

/// An element of GF(2^m) in the polynomial basis of the context modulus.
/// Bit b is the coefficient of x^b. m <= 12 fits comfortably.
using Elem = std::uint16_t;

/// Polynomials over GF(2) packed as bit strings, bit b = coefficient of x^b.
using Gf2Poly = std::uint32_t;

int gf2_degree(Gf2Poly p);
Gf2Poly gf2_mod(Gf2Poly a, Gf2Poly modulus);

/// Exhaustive trial division by every polynomial of degree 1..deg/2.
bool is_irreducible(Gf2Poly p);

/// One modulus per degree 1..12: lowest weight with nonzero constant term,
/// smallest integer value among those. Index 0 is unused.
std::span<const Gf2Poly> modulus_table();

/// Renders a GF(2) polynomial as "x^4+x+1".
std::string poly_to_string(Gf2Poly p);

/**
 * A concrete model of GF(2^m), 1 <= m <= 12.
 *
 * Immutable after construction. Multiplication is shift-and-XOR with
 * reduction by the modulus. Inverses come from a table filled once at
 * construction (at most 4096 entries), and the absolute trace is the
 * parity of x AND a fixed trace mask, which follows from F2-linearity.
 */
class FieldContext {
 public:
  static constexpr int kMaxDegree = 12;

  /// Throws std::out_of_range unless 1 <= m <= kMaxDegree. Validates the
  /// table modulus and searches the generator from the smallest candidate.
  explicit FieldContext(int m);

  int degree() const noexcept { return m_; }
  Gf2Poly modulus() const noexcept { return modulus_; }
  Elem generator() const noexcept { return generator_; }
  /// 2^m
  std::uint32_t size() const noexcept { return std::uint32_t{1} << m_; }
  /// 2^m - 1
  std::uint32_t group_order() const noexcept { return size() - 1; }

  bool contains(std::uint32_t x) const noexcept { return x < size(); }

  static Elem add(Elem a, Elem b) noexcept { return static_cast<Elem>(a ^ b); }

  Elem mul(Elem a, Elem b) const noexcept {
    std::uint32_t r = 0;
    std::uint32_t x = a;
    const std::uint32_t top = size();
    while (b != 0) {
      if (b & 1u) r ^= x;
      b >>= 1;
      x <<= 1;
      if (x & top) x ^= modulus_;
    }
    return static_cast<Elem>(r);
  }

  Elem square(Elem a) const noexcept { return mul(a, a); }

  /// Throws std::domain_error on zero.
  Elem inv(Elem a) const;

  Elem pow(Elem a, std::uint64_t e) const noexcept;

  /// Absolute trace to GF(2), returned as 0 or 1.
  int trace(Elem x) const noexcept { return std::popcount(static_cast<unsigned>(x & trace_mask_)) & 1; }

  /// x + x^2 + ... + x^(2^(m-1)) evaluated literally. Slow; used to build
  /// the trace mask and as a test oracle.
  Elem trace_by_frobenius(Elem x) const noexcept;

  /// Bit b set iff tr(x^b) = 1.
  Elem trace_mask() const noexcept { return trace_mask_; }

  /// The m-bit vector t(c) with tr(c*y) = parity(t(c) & y) for every y.
  Elem trace_form(Elem c) const noexcept;

  /// Smallest k >= 1 with a^k = 1. Throws std::domain_error on zero.
  std::uint64_t multiplicative_order(Elem a) const;

  /// generator^((2^m-1)/n). Throws std::invalid_argument when n does not
  /// divide 2^m - 1.
  Elem element_of_order(std::uint64_t n) const;

 private:
  int m_;
  Gf2Poly modulus_;
  Elem generator_ = 1;
  Elem trace_mask_ = 0;
  std::vector<Elem> inverse_;
  std::vector<std::uint64_t> order_prime_factors_;
};

}  // namespace quintrace

#endif  // QUINTRACE_GF2M_HPP
