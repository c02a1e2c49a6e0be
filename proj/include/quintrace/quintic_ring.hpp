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

#ifndef QUINTRACE_QUINTIC_RING_HPP
#define QUINTRACE_QUINTIC_RING_HPP

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "quintrace/gf2m.hpp"

namespace quintrace {

/// An element of R_m = GF(2^m)[v]/(v^5 - 1), coefficients of 1, v, ..., v^4.
/// The degree tag ties the element to the ring that produced it.
struct RingElement {
  int degree = 1;
  std::array<Elem, 5> c{};

  friend bool operator==(const RingElement&, const RingElement&) = default;
};

/// m mod 4: odd, 2 (mod 4), or 0 (mod 4). Selects how v^5 - 1 splits.
enum class ParityClass { Odd, SinglyEven, DoublyEven };

ParityClass parity_class_of(int m);
std::string to_string(ParityClass p);

/**
 * Class invariants of a ring element.
 *
 * Odd m:         values = (I, I1, I2, I3, I4).
 * Singly-even m: values = (H, H1, H2, H3, H4), where H2 and H4 are the
 *                residue forms that actually vanish on the quadratic
 *                factors of v^5 - 1; `printed` keeps the published variant
 *                whose h4 terms should read h3.
 * Doubly-even m: values = the five CRT components r_j with a = sum eta_j r_j.
 */
struct UnitProfile {
  ParityClass parity = ParityClass::Odd;
  std::array<Elem, 5> values{};
  std::array<Elem, 5> printed{};

  /// The membership test for the unit group in this class.
  bool unit_criterion() const noexcept;
  /// Same test evaluated on `printed`.
  bool printed_unit_criterion() const noexcept;

  /// Zero-pattern class of the element. For odd and singly-even m the id is
  /// the row of the published weight table the class is predicted to hit.
  ///   Odd:         0 zero, 1 unit, 2 (I = 0, rest != 0), 3 (I != 0, rest = 0)
  ///   Singly-even: 0 zero, 1 (H != 0, one pair = 0),
  ///                2 (H = 0, both pairs != 0), 3 unit,
  ///                4 (H = 0, one pair = 0), 5 (H != 0, both pairs = 0)
  ///   Doubly-even: number of nonzero CRT components
  int weight_class() const noexcept;
};

struct IdempotentBasis {
  std::array<RingElement, 5> eta;
};

/**
 * Arithmetic in the quintic ring R_m over a fixed model of GF(2^m).
 *
 * Packed form: bits [j*m, (j+1)*m) hold coefficient c_j, so c0 sits in
 * the low bits. Ascending packed value is the canonical element order
 * (lexicographic on c4 || c3 || c2 || c1 || c0).
 */
class QuinticRing {
 public:
  explicit QuinticRing(int m);

  const FieldContext& field() const noexcept { return field_; }
  int degree() const noexcept { return field_.degree(); }
  ParityClass parity_class() const noexcept { return parity_; }
  /// 2^(5m)
  std::uint64_t element_count() const noexcept { return std::uint64_t{1} << (5 * degree()); }
  /// |R_m^*| from the CRT splitting for this parity class.
  std::uint64_t unit_count() const noexcept;

  /// Throws std::invalid_argument if a coefficient is not reduced.
  RingElement element(const std::array<Elem, 5>& coeffs) const;
  RingElement zero() const noexcept { return RingElement{degree(), {}}; }
  RingElement one() const noexcept { return RingElement{degree(), {1, 0, 0, 0, 0}}; }
  /// v^k for k mod 5.
  RingElement v_power(int k) const noexcept;
  RingElement scalar(Elem s) const;

  RingElement add(const RingElement& a, const RingElement& b) const;
  RingElement mul(const RingElement& a, const RingElement& b) const;
  RingElement scale(Elem s, const RingElement& a) const;

  /// Coefficientwise absolute trace; the result lives in R = R_1.
  RingElement trace(const RingElement& a) const;

  /// gcd(a(v), v^5 - 1) = 1 in GF(2^m)[v].
  bool is_unit(const RingElement& a) const;

  std::uint64_t pack(const RingElement& a) const;
  RingElement unpack(std::uint64_t bits) const;

  /// Visits every unit in canonical order, or the units whose packed value
  /// lies in [begin, end).
  void for_each_unit(const std::function<void(const RingElement&)>& visit) const;
  void for_each_unit(std::uint64_t begin, std::uint64_t end,
                     const std::function<void(const RingElement&)>& visit) const;
  /// All units, packed, ascending. Requires m <= 4.
  std::vector<std::uint64_t> enumerate_units() const;

  /// Requires 2 | m for singly-even and 4 | m for doubly-even profiles.
  UnitProfile unit_profile(const RingElement& a) const;

  /// omega = generator^((2^m-1)/3). Throws unless m is even.
  Elem omega() const;
  /// epsilon = generator^((2^m-1)/5). Throws unless 4 | m.
  Elem epsilon() const;

  IdempotentBasis idempotent_basis() const;
  /// r_j = a(epsilon^j). Throws std::domain_error unless 4 | m.
  std::array<Elem, 5> crt_decompose(const RingElement& a) const;
  RingElement crt_recompose(const std::array<Elem, 5>& components) const;

 private:
  void check(const RingElement& a) const;

  FieldContext field_;
  ParityClass parity_;
  std::optional<Elem> omega_;
  std::optional<Elem> epsilon_;
};

/// Renders a ring element as the 5m-bit packed value in hex.
std::string to_hex(const QuinticRing& ring, const RingElement& a);

}  // namespace quintrace

#endif  // QUINTRACE_QUINTIC_RING_HPP
