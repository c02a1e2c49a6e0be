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

#include "quintrace/quintic_ring.hpp"

#include <algorithm>
#include <cstdio>
#include <stdexcept>

namespace quintrace {

namespace {

// Dense polynomial over GF(2^m) of degree <= 5, coefficient i of v^i.
struct SmallPoly {
  std::array<Elem, 6> c{};
  int deg = -1;

  void normalize() {
    deg = 5;
    while (deg >= 0 && c[static_cast<std::size_t>(deg)] == 0) --deg;
  }
};

// a mod b, b nonzero.
SmallPoly poly_mod(const FieldContext& f, SmallPoly a, const SmallPoly& b) {
  const Elem lead_inv = f.inv(b.c[static_cast<std::size_t>(b.deg)]);
  while (a.deg >= b.deg) {
    const int shift = a.deg - b.deg;
    const Elem factor = f.mul(a.c[static_cast<std::size_t>(a.deg)], lead_inv);
    for (int i = 0; i <= b.deg; ++i) {
      a.c[static_cast<std::size_t>(i + shift)] ^= f.mul(factor, b.c[static_cast<std::size_t>(i)]);
    }
    a.normalize();
  }
  return a;
}

bool nonzero_pair(Elem a, Elem b) { return a != 0 || b != 0; }

}  // namespace

ParityClass parity_class_of(int m) {
  if (m % 2 != 0) return ParityClass::Odd;
  return m % 4 == 2 ? ParityClass::SinglyEven : ParityClass::DoublyEven;
}

std::string to_string(ParityClass p) {
  switch (p) {
    case ParityClass::Odd:
      return "odd";
    case ParityClass::SinglyEven:
      return "singly-even";
    case ParityClass::DoublyEven:
      return "doubly-even";
  }
  return "unknown";
}

bool UnitProfile::unit_criterion() const noexcept {
  const auto& x = values;
  switch (parity) {
    case ParityClass::Odd:
      return x[0] != 0 && (x[1] != 0 || x[2] != 0 || x[3] != 0 || x[4] != 0);
    case ParityClass::SinglyEven:
      return x[0] != 0 && nonzero_pair(x[1], x[2]) && nonzero_pair(x[3], x[4]);
    case ParityClass::DoublyEven:
      return std::all_of(x.begin(), x.end(), [](Elem e) { return e != 0; });
  }
  return false;
}

bool UnitProfile::printed_unit_criterion() const noexcept {
  UnitProfile p = *this;
  p.values = printed;
  return p.unit_criterion();
}

int UnitProfile::weight_class() const noexcept {
  const auto& x = values;
  switch (parity) {
    case ParityClass::Odd: {
      const bool head = x[0] != 0;
      const bool rest = x[1] != 0 || x[2] != 0 || x[3] != 0 || x[4] != 0;
      if (!head && !rest) return 0;
      if (head && rest) return 1;
      return rest ? 2 : 3;
    }
    case ParityClass::SinglyEven: {
      const bool head = x[0] != 0;
      const int pairs = static_cast<int>(nonzero_pair(x[1], x[2])) + static_cast<int>(nonzero_pair(x[3], x[4]));
      if (head) {
        if (pairs == 2) return 3;
        return pairs == 1 ? 1 : 5;
      }
      if (pairs == 2) return 2;
      return pairs == 1 ? 4 : 0;
    }
    case ParityClass::DoublyEven:
      return static_cast<int>(std::count_if(x.begin(), x.end(), [](Elem e) { return e != 0; }));
  }
  return -1;
}

QuinticRing::QuinticRing(int m) : field_(m), parity_(parity_class_of(m)) {
  if (m % 2 == 0) omega_ = field_.element_of_order(3);
  if (m % 4 == 0) epsilon_ = field_.element_of_order(5);
}

std::uint64_t QuinticRing::unit_count() const noexcept {
  const std::uint64_t q = field_.size();
  switch (parity_) {
    case ParityClass::Odd:
      return (q - 1) * (q * q * q * q - 1);
    case ParityClass::SinglyEven:
      return (q - 1) * (q * q - 1) * (q * q - 1);
    case ParityClass::DoublyEven:
      return (q - 1) * (q - 1) * (q - 1) * (q - 1) * (q - 1);
  }
  return 0;
}

void QuinticRing::check(const RingElement& a) const {
  if (a.degree != degree()) {
    throw std::invalid_argument("ring element over GF(2^" + std::to_string(a.degree) + ") used in R_" +
                                std::to_string(degree()));
  }
}

RingElement QuinticRing::element(const std::array<Elem, 5>& coeffs) const {
  for (const auto e : coeffs) {
    if (!field_.contains(e)) throw std::invalid_argument("coefficient not reduced for GF(2^" + std::to_string(degree()) + ")");
  }
  return RingElement{degree(), coeffs};
}

RingElement QuinticRing::v_power(int k) const noexcept {
  RingElement r = zero();
  r.c[static_cast<std::size_t>(((k % 5) + 5) % 5)] = 1;
  return r;
}

RingElement QuinticRing::scalar(Elem s) const { return element({s, 0, 0, 0, 0}); }

RingElement QuinticRing::add(const RingElement& a, const RingElement& b) const {
  check(a);
  check(b);
  RingElement r = zero();
  for (std::size_t i = 0; i < 5; ++i) r.c[i] = static_cast<Elem>(a.c[i] ^ b.c[i]);
  return r;
}

RingElement QuinticRing::mul(const RingElement& a, const RingElement& b) const {
  check(a);
  check(b);
  RingElement r = zero();
  for (std::size_t i = 0; i < 5; ++i) {
    if (a.c[i] == 0) continue;
    for (std::size_t j = 0; j < 5; ++j) r.c[(i + j) % 5] ^= field_.mul(a.c[i], b.c[j]);
  }
  return r;
}

RingElement QuinticRing::scale(Elem s, const RingElement& a) const {
  check(a);
  RingElement r = zero();
  for (std::size_t i = 0; i < 5; ++i) r.c[i] = field_.mul(s, a.c[i]);
  return r;
}

RingElement QuinticRing::trace(const RingElement& a) const {
  check(a);
  RingElement r{1, {}};
  for (std::size_t i = 0; i < 5; ++i) r.c[i] = static_cast<Elem>(field_.trace(a.c[i]));
  return r;
}

bool QuinticRing::is_unit(const RingElement& a) const {
  check(a);
  SmallPoly r0;
  r0.c[0] = 1;
  r0.c[5] = 1;  // v^5 + 1
  r0.normalize();
  SmallPoly r1;
  std::copy(a.c.begin(), a.c.end(), r1.c.begin());
  r1.normalize();
  while (r1.deg >= 0) {
    SmallPoly next = poly_mod(field_, r0, r1);
    r0 = r1;
    r1 = next;
  }
  return r0.deg == 0;
}

std::uint64_t QuinticRing::pack(const RingElement& a) const {
  check(a);
  std::uint64_t bits = 0;
  for (std::size_t j = 0; j < 5; ++j) bits |= std::uint64_t{a.c[j]} << (j * static_cast<std::size_t>(degree()));
  return bits;
}

RingElement QuinticRing::unpack(std::uint64_t bits) const {
  if (bits >= element_count()) throw std::out_of_range("packed ring element has more than 5m bits");
  RingElement r = zero();
  const std::uint64_t mask = field_.size() - 1;
  for (std::size_t j = 0; j < 5; ++j) r.c[j] = static_cast<Elem>((bits >> (j * static_cast<std::size_t>(degree()))) & mask);
  return r;
}

void QuinticRing::for_each_unit(const std::function<void(const RingElement&)>& visit) const {
  for_each_unit(0, element_count(), visit);
}

void QuinticRing::for_each_unit(std::uint64_t begin, std::uint64_t end,
                                const std::function<void(const RingElement&)>& visit) const {
  end = std::min(end, element_count());
  for (std::uint64_t x = begin; x < end; ++x) {
    const RingElement e = unpack(x);
    if (is_unit(e)) visit(e);
  }
}

std::vector<std::uint64_t> QuinticRing::enumerate_units() const {
  if (degree() > 4) throw std::length_error("unit materialization is limited to m <= 4; stream with for_each_unit");
  std::vector<std::uint64_t> out;
  out.reserve(unit_count());
  for_each_unit([&](const RingElement& u) { out.push_back(pack(u)); });
  return out;
}

Elem QuinticRing::omega() const {
  if (!omega_) throw std::invalid_argument("omega needs an even extension degree");
  return *omega_;
}

Elem QuinticRing::epsilon() const {
  if (!epsilon_) throw std::invalid_argument("epsilon needs 5 | 2^m - 1, i.e. 4 | m");
  return *epsilon_;
}

UnitProfile QuinticRing::unit_profile(const RingElement& a) const {
  check(a);
  UnitProfile p;
  p.parity = parity_;
  const auto& x = a.c;
  switch (parity_) {
    case ParityClass::Odd:
      p.values = {static_cast<Elem>(x[0] ^ x[1] ^ x[2] ^ x[3] ^ x[4]), static_cast<Elem>(x[1] ^ x[2] ^ x[3] ^ x[4]),
                  static_cast<Elem>(x[0] ^ x[1]), static_cast<Elem>(x[3] ^ x[4]),
                  static_cast<Elem>(x[0] ^ x[1] ^ x[2] ^ x[3])};
      p.printed = p.values;
      break;
    case ParityClass::SinglyEven: {
      const Elem w = *omega_;
      const Elem w2 = field_.square(w);
      auto lin = [&](Elem k0, Elem k1, Elem k2, Elem k3, Elem k4) {
        return static_cast<Elem>(field_.mul(k0, x[0]) ^ field_.mul(k1, x[1]) ^ field_.mul(k2, x[2]) ^
                                 field_.mul(k3, x[3]) ^ field_.mul(k4, x[4]));
      };
      const Elem h = lin(1, 1, 1, 1, 1);
      const Elem h1 = lin(0, w2, w, w, w2);
      const Elem h3 = lin(0, w, w2, w2, w);
      p.values = {h, h1, lin(w2, w, w, w2, 0), h3, lin(w, w2, w2, w, 0)};
      p.printed = {h, h1, lin(w2, w, w, 0, w2), h3, lin(w, w2, w2, 0, w)};
      break;
    }
    case ParityClass::DoublyEven:
      p.values = crt_decompose(a);
      p.printed = p.values;
      break;
  }
  return p;
}

IdempotentBasis QuinticRing::idempotent_basis() const {
  const Elem eps = epsilon();
  IdempotentBasis basis;
  for (std::size_t j = 0; j < 5; ++j) {
    // eta_j = sum_k epsilon^(-jk) v^k
    RingElement eta = zero();
    for (std::size_t k = 0; k < 5; ++k) eta.c[k] = field_.pow(eps, (5 - (j * k) % 5) % 5);
    basis.eta[j] = eta;
  }
  return basis;
}

std::array<Elem, 5> QuinticRing::crt_decompose(const RingElement& a) const {
  check(a);
  if (parity_ != ParityClass::DoublyEven) throw std::domain_error("CRT decomposition into five components needs 4 | m");
  const Elem eps = *epsilon_;
  std::array<Elem, 5> out{};
  Elem point = 1;  // epsilon^j
  for (std::size_t j = 0; j < 5; ++j) {
    Elem acc = 0;  // Horner: a(point)
    for (std::size_t k = 5; k-- > 0;) acc = static_cast<Elem>(field_.mul(acc, point) ^ a.c[k]);
    out[j] = acc;
    point = field_.mul(point, eps);
  }
  return out;
}

RingElement QuinticRing::crt_recompose(const std::array<Elem, 5>& components) const {
  if (parity_ != ParityClass::DoublyEven) throw std::domain_error("CRT recomposition from five components needs 4 | m");
  const IdempotentBasis basis = idempotent_basis();
  RingElement r = zero();
  for (std::size_t j = 0; j < 5; ++j) {
    if (!field_.contains(components[j])) throw std::invalid_argument("CRT component not reduced");
    r = add(r, scale(components[j], basis.eta[j]));
  }
  return r;
}

std::string to_hex(const QuinticRing& ring, const RingElement& a) {
  const int digits = (5 * ring.degree() + 3) / 4;
  char buf[32];
  std::snprintf(buf, sizeof buf, "%0*llx", digits, static_cast<unsigned long long>(ring.pack(a)));
  return buf;
}

}  // namespace quintrace
