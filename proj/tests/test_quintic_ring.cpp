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

#include <doctest.h>

#include <random>
#include <stdexcept>

#include "oracle.hpp"
#include "quintrace/quintic_ring.hpp"

using namespace quintrace;

namespace {

RingElement random_element(const QuinticRing& r, std::mt19937_64& rng) {
  return r.unpack(rng() & (r.element_count() - 1));
}

}  // namespace

TEST_CASE("parity classes") {
  CHECK(parity_class_of(1) == ParityClass::Odd);
  CHECK(parity_class_of(2) == ParityClass::SinglyEven);
  CHECK(parity_class_of(4) == ParityClass::DoublyEven);
  CHECK(parity_class_of(6) == ParityClass::SinglyEven);
  CHECK(parity_class_of(12) == ParityClass::DoublyEven);
}

TEST_CASE("(1 + v) annihilates 1 + v + v^2 + v^3 + v^4") {
  for (int m = 1; m <= 12; ++m) {
    const QuinticRing r(m);
    const auto a = r.element({1, 1, 0, 0, 0});
    const auto b = r.element({1, 1, 1, 1, 1});
    CHECK(r.mul(a, b) == r.zero());
    CHECK_FALSE(r.is_unit(a));
    CHECK_FALSE(r.is_unit(b));
  }
}

TEST_CASE("ring axioms on random elements") {
  std::mt19937_64 rng(11);
  for (int m = 1; m <= 12; ++m) {
    const QuinticRing r(m);
    CHECK(r.mul(r.v_power(4), r.v_power(1)) == r.one());
    for (int i = 0; i < 200; ++i) {
      const auto a = random_element(r, rng);
      const auto b = random_element(r, rng);
      const auto c = random_element(r, rng);
      REQUIRE(r.mul(a, b) == r.mul(b, a));
      REQUIRE(r.mul(r.mul(a, b), c) == r.mul(a, r.mul(b, c)));
      REQUIRE(r.mul(a, r.add(b, c)) == r.add(r.mul(a, b), r.mul(a, c)));
      REQUIRE(r.mul(a, r.one()) == a);
      REQUIRE(r.unpack(r.pack(a)) == a);
    }
  }
}

TEST_CASE("multiplication agrees with cyclic convolution reference") {
  std::mt19937_64 rng(3);
  for (int m = 1; m <= 6; ++m) {
    const QuinticRing r(m);
    const oracle::Field f{m, r.field().modulus()};
    for (int i = 0; i < 500; ++i) {
      const std::uint64_t x = rng() & (r.element_count() - 1);
      const std::uint64_t y = rng() & (r.element_count() - 1);
      const auto p = oracle::mul(f, oracle::unpack(f, x), oracle::unpack(f, y));
      const auto q = r.mul(r.unpack(x), r.unpack(y));
      for (int k = 0; k < 5; ++k) REQUIRE(q.c[static_cast<std::size_t>(k)] == p[static_cast<std::size_t>(k)]);
    }
  }
}

TEST_CASE("element validation") {
  const QuinticRing r2(2);
  const QuinticRing r3(3);
  CHECK_THROWS_AS(r2.element({4, 0, 0, 0, 0}), std::invalid_argument);
  CHECK_THROWS_AS(r2.unpack(std::uint64_t{1} << 10), std::out_of_range);
  CHECK_THROWS_AS(r2.mul(r2.one(), r3.one()), std::invalid_argument);
  CHECK_THROWS_AS(r2.scalar(4), std::invalid_argument);
}

TEST_CASE("unit counts") {
  CHECK(QuinticRing(1).enumerate_units().size() == 15);
  CHECK(QuinticRing(2).enumerate_units().size() == 675);
  CHECK(QuinticRing(3).enumerate_units().size() == 28665);
  CHECK(QuinticRing(4).enumerate_units().size() == 759375);
  CHECK(QuinticRing(4).unit_count() == 759375);
  CHECK_THROWS_AS(QuinticRing(5).enumerate_units(), std::length_error);

  const auto units = QuinticRing(3).enumerate_units();
  CHECK(std::is_sorted(units.begin(), units.end()));
}

TEST_CASE("gcd unit test agrees with inverse search") {
  for (int m = 1; m <= 2; ++m) {
    const QuinticRing r(m);
    const oracle::Field f{m, r.field().modulus()};
    const auto ref = oracle::units_by_inverse(f);
    const auto units = r.enumerate_units();
    REQUIRE(ref.size() == units.size());
    for (std::size_t i = 0; i < units.size(); ++i) {
      const auto a = r.unpack(units[i]);
      for (std::size_t k = 0; k < 5; ++k) REQUIRE(a.c[k] == ref[i][k]);
    }
  }
}

TEST_CASE("unit profiles predict invertibility") {
  for (int m = 1; m <= 4; ++m) {
    const QuinticRing r(m);
    std::uint64_t miss = 0;
    for (std::uint64_t x = 0; x < r.element_count(); ++x) {
      const auto a = r.unpack(x);
      miss += r.unit_profile(a).unit_criterion() != r.is_unit(a);
    }
    CAPTURE(m);
    CHECK(miss == 0);
  }
}

TEST_CASE("published singly-even residue forms misclassify some elements") {
  const QuinticRing r(2);
  std::uint64_t miss = 0;
  for (std::uint64_t x = 0; x < r.element_count(); ++x) {
    const auto a = r.unpack(x);
    miss += r.unit_profile(a).printed_unit_criterion() != r.is_unit(a);
  }
  CHECK(miss == 108);
}

TEST_CASE("roots of unity") {
  const QuinticRing r2(2);
  const auto& f2 = r2.field();
  CHECK(f2.pow(r2.omega(), 3) == 1);
  CHECK(r2.omega() != 1);
  CHECK_THROWS(QuinticRing(3).omega());
  CHECK_THROWS(r2.epsilon());

  const QuinticRing r4(4);
  CHECK(r4.field().multiplicative_order(r4.epsilon()) == 5);
  CHECK(r4.field().multiplicative_order(r4.omega()) == 3);
}

TEST_CASE("idempotent basis") {
  for (const int m : {4, 8, 12}) {
    const QuinticRing r(m);
    const auto basis = r.idempotent_basis();
    RingElement sum = r.zero();
    for (std::size_t i = 0; i < 5; ++i) {
      CHECK(r.mul(basis.eta[i], basis.eta[i]) == basis.eta[i]);
      for (std::size_t j = i + 1; j < 5; ++j) CHECK(r.mul(basis.eta[i], basis.eta[j]) == r.zero());
      sum = r.add(sum, basis.eta[i]);
    }
    CHECK(sum == r.one());
  }
}

TEST_CASE("CRT decomposition") {
  const QuinticRing r(4);
  CHECK(r.crt_decompose(r.one()) == std::array<Elem, 5>{1, 1, 1, 1, 1});
  CHECK_THROWS_AS(QuinticRing(2).crt_decompose(QuinticRing(2).one()), std::domain_error);

  for (std::uint64_t x = 0; x < r.element_count(); ++x) {
    const auto a = r.unpack(x);
    REQUIRE(r.crt_recompose(r.crt_decompose(a)) == a);
  }

  std::mt19937_64 rng(5);
  for (int i = 0; i < 1000; ++i) {
    const auto a = random_element(r, rng);
    const auto b = random_element(r, rng);
    const auto da = r.crt_decompose(a);
    const auto db = r.crt_decompose(b);
    const auto dab = r.crt_decompose(r.mul(a, b));
    for (std::size_t j = 0; j < 5; ++j) REQUIRE(dab[j] == r.field().mul(da[j], db[j]));
  }
}

TEST_CASE("coefficientwise trace lands in R") {
  std::mt19937_64 rng(9);
  const QuinticRing r(5);
  for (int i = 0; i < 100; ++i) {
    const auto t = r.trace(random_element(r, rng));
    CHECK(t.degree == 1);
    for (const auto c : t.c) CHECK(c <= 1);
  }
}
