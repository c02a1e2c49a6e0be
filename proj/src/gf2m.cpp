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

#include "quintrace/gf2m.hpp"

#include <array>
#include <stdexcept>

namespace quintrace {

namespace {

constexpr std::array<Gf2Poly, FieldContext::kMaxDegree + 1> kModuli = {
    0,       // unused
    0x3,     // x+1
    0x7,     // x^2+x+1
    0xb,     // x^3+x+1
    0x13,    // x^4+x+1
    0x25,    // x^5+x^2+1
    0x43,    // x^6+x+1
    0x83,    // x^7+x+1
    0x11b,   // x^8+x^4+x^3+x+1
    0x203,   // x^9+x+1
    0x409,   // x^10+x^3+1
    0x805,   // x^11+x^2+1
    0x1009,  // x^12+x^3+1
};

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      out.push_back(p);
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

}  // namespace

int gf2_degree(Gf2Poly p) { return p == 0 ? -1 : std::bit_width(p) - 1; }

Gf2Poly gf2_mod(Gf2Poly a, Gf2Poly modulus) {
  const int dm = gf2_degree(modulus);
  if (dm < 0) throw std::domain_error("gf2_mod: zero modulus");
  for (int da = gf2_degree(a); da >= dm; da = gf2_degree(a)) a ^= modulus << (da - dm);
  return a;
}

bool is_irreducible(Gf2Poly p) {
  const int d = gf2_degree(p);
  if (d < 1) return false;
  for (Gf2Poly q = 2; gf2_degree(q) <= d / 2; ++q) {
    if (gf2_mod(p, q) == 0) return false;
  }
  return true;
}

std::span<const Gf2Poly> modulus_table() { return kModuli; }

std::string poly_to_string(Gf2Poly p) {
  if (p == 0) return "0";
  std::string out;
  for (int b = gf2_degree(p); b >= 0; --b) {
    if (!((p >> b) & 1u)) continue;
    if (!out.empty()) out += '+';
    if (b == 0) out += '1';
    else if (b == 1) out += 'x';
    else out += "x^" + std::to_string(b);
  }
  return out;
}

FieldContext::FieldContext(int m) : m_(m) {
  if (m < 1 || m > kMaxDegree) {
    throw std::out_of_range("field degree must lie in 1..12, got " + std::to_string(m));
  }
  modulus_ = kModuli[static_cast<std::size_t>(m)];
  if (gf2_degree(modulus_) != m || !is_irreducible(modulus_)) {
    throw std::logic_error("modulus table entry for degree " + std::to_string(m) + " is not irreducible");
  }

  for (int b = 0; b < m_; ++b) {
    const Elem basis = static_cast<Elem>(gf2_mod(Gf2Poly{1} << b, modulus_));
    if (trace_by_frobenius(basis) == 1) trace_mask_ |= static_cast<Elem>(1u << b);
  }

  order_prime_factors_ = prime_factors(group_order());
  inverse_.assign(size(), 0);
  if (m_ == 1) {
    generator_ = 1;
    inverse_[1] = 1;
    return;
  }
  bool found = false;
  for (std::uint32_t g = 2; g < size() && !found; ++g) {
    bool primitive = true;
    for (const auto p : order_prime_factors_) {
      if (pow(static_cast<Elem>(g), group_order() / p) == 1) {
        primitive = false;
        break;
      }
    }
    if (primitive) {
      generator_ = static_cast<Elem>(g);
      found = true;
    }
  }
  if (!found) throw std::logic_error("no primitive element found");

  // g^k and g^(N-k) are mutually inverse.
  Elem x = 1;
  for (std::uint32_t k = 0; k < group_order(); ++k) {
    inverse_[x] = pow(generator_, (group_order() - k) % group_order());
    x = mul(x, generator_);
  }
}

Elem FieldContext::inv(Elem a) const {
  if (a == 0) throw std::domain_error("inverse of zero in GF(2^m)");
  return inverse_[a];
}

Elem FieldContext::pow(Elem a, std::uint64_t e) const noexcept {
  Elem result = 1;
  Elem base = a;
  while (e != 0) {
    if (e & 1u) result = mul(result, base);
    base = mul(base, base);
    e >>= 1;
  }
  return result;
}

Elem FieldContext::trace_by_frobenius(Elem x) const noexcept {
  Elem sum = 0;
  Elem y = x;
  for (int i = 0; i < m_; ++i) {
    sum ^= y;
    y = mul(y, y);
  }
  return sum;
}

Elem FieldContext::trace_form(Elem c) const noexcept {
  Elem form = 0;
  for (int b = 0; b < m_; ++b) {
    const Elem basis = static_cast<Elem>(gf2_mod(Gf2Poly{1} << b, modulus_));
    if (trace(mul(c, basis))) form |= static_cast<Elem>(1u << b);
  }
  return form;
}

std::uint64_t FieldContext::multiplicative_order(Elem a) const {
  if (a == 0) throw std::domain_error("zero has no multiplicative order");
  std::uint64_t order = group_order();
  for (const auto p : order_prime_factors_) {
    while (order % p == 0 && pow(a, order / p) == 1) order /= p;
  }
  return order;
}

Elem FieldContext::element_of_order(std::uint64_t n) const {
  if (n == 0 || group_order() % n != 0) {
    throw std::invalid_argument("no element of order " + std::to_string(n) + " in GF(2^" + std::to_string(m_) +
                                "): " + std::to_string(n) + " does not divide " + std::to_string(group_order()));
  }
  return pow(generator_, group_order() / n);
}

}  // namespace quintrace
