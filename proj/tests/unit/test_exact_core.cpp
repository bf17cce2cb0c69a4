// Copyright 2026 The nilaut Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include <algorithm>
#include <random>
#include <vector>

#include "doctest.h"
#include "nilaut/arith.hpp"
#include "nilaut/errors.hpp"
#include "nilaut/hurwitz.hpp"
#include "nilaut/rational.hpp"

using namespace nilaut;

namespace {

std::vector<RamifiedPlace> tame_places(const std::vector<std::int64_t>& es) {
  std::vector<RamifiedPlace> out;
  for (auto e : es) out.push_back(RamifiedPlace::tame(e));
  return out;
}

}  // namespace

TEST_CASE("rational normalization and ordering") {
  const Rational a(BigInt(6), BigInt(-4));
  CHECK(a.num() == -3);
  CHECK(a.den() == 2);
  CHECK(a.str() == "-3/2");
  CHECK(Rational(BigInt(8), BigInt(4)).str() == "2");
  CHECK(a.floor() == -2);
  CHECK(Rational(BigInt(7), BigInt(2)).floor() == 3);
  CHECK(Rational(1) / Rational(3) < Rational(BigInt(1), BigInt(2)));
  CHECK_THROWS_AS(Rational(BigInt(1), BigInt(0)), std::domain_error);
  CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
}

TEST_CASE("rational identities on random inputs") {
  std::mt19937_64 rng(20260101);
  std::uniform_int_distribution<std::int64_t> num(-1000000, 1000000);
  std::uniform_int_distribution<std::int64_t> den(1, 1000000);
  auto draw = [&] { return Rational(BigInt(num(rng)), BigInt(den(rng))); };
  for (int i = 0; i < 10000; ++i) {
    const Rational a = draw(), b = draw(), c = draw();
    REQUIRE(a + b == b + a);
    REQUIRE(a * b == b * a);
    REQUIRE((a + b) + c == a + (b + c));
    REQUIRE((a * b) * c == a * (b * c));
    REQUIRE(a * (b + c) == a * b + a * c);
    REQUIRE(a - a == Rational(0));
    if (!b.is_zero()) REQUIRE((a / b) * b == a);
    REQUIRE(boost::multiprecision::gcd(a.num(), a.den()) == 1);
    REQUIRE(a.den() > 0);
  }
}

TEST_CASE("integer helpers") {
  CHECK(is_prime(2));
  CHECK(is_prime(999983));
  CHECK_FALSE(is_prime(1));
  CHECK_FALSE(is_prime(999981));
  CHECK(prime_divisors(360) == std::vector<std::int64_t>{2, 3, 5});
  CHECK(divisors(12) == std::vector<std::int64_t>{1, 2, 3, 4, 6, 12});
  CHECK(valuation(40, 2) == 3);
  CHECK(prime_part(40, 2) == 8);
  CHECK(lcm(4, 6) == 12);
  CHECK(ipow(3, 5) == 243);
}

TEST_CASE("characteristic validation") {
  CHECK_NOTHROW(Characteristic(0));
  CHECK_NOTHROW(Characteristic(7));
  CHECK_THROWS_AS(Characteristic(4), std::invalid_argument);
  CHECK_THROWS_AS(Characteristic(1), std::invalid_argument);
}

TEST_CASE("hurwitz examples") {
  const std::vector<RamifiedPlace> r3 = tame_places({2, 4, 8});
  CHECK(hurwitz_two_g_minus_2(16, 0, r3) == Rational(2));
  CHECK(hurwitz_two_g_minus_2(7, 0, {}) == Rational(-14));
  const Characteristic p2(2);
  const std::vector<RamifiedPlace> r2{RamifiedPlace::make(5, 4, p2),
                                      RamifiedPlace::make(10, 14, p2)};
  CHECK(hurwitz_two_g_minus_2(10, 0, r2) == Rational(2));
}

TEST_CASE("minimal different exponent") {
  CHECK(min_different_exponent(8, Characteristic(5)) == 7);
  CHECK(min_different_exponent(10, Characteristic(2)) == 14);
  CHECK(min_different_exponent(4, Characteristic(2)) == 6);
  CHECK(min_different_exponent(9, Characteristic(0)) == 8);
  for (std::int64_t p : {2, 3, 5, 7}) {
    for (std::int64_t e = 2; e <= 200; ++e) {
      const auto d = min_different_exponent(e, Characteristic(p));
      REQUIRE(d >= e - 1);
      REQUIRE((d == e - 1) == (e % p != 0));
    }
  }
}

TEST_CASE("ramified place validation") {
  const Characteristic p3(3);
  CHECK_THROWS(RamifiedPlace::tame(3, p3));
  CHECK_THROWS(RamifiedPlace::make(3, 2, p3));
  CHECK_THROWS(RamifiedPlace::make(4, 4, p3));
  CHECK(RamifiedPlace::make(3, 4, p3).wild);
  CHECK_FALSE(RamifiedPlace::unknown(4, p3).known());
}

TEST_CASE("solve_genus examples") {
  const auto a = solve_genus(16, 0, tame_places({2, 4, 8}));
  REQUIRE(a.genus);
  CHECK(*a.genus == 2);
  CHECK(a.feasible());
  const auto b = solve_genus(6, 0, tame_places({2, 2, 3, 3}));
  REQUIRE(b.genus);
  CHECK(*b.genus == 2);
  const auto c = solve_genus(2, 0, {});
  REQUIRE(c.genus);
  CHECK(*c.genus == -1);
  CHECK(c.status == GenusStatus::kNegativeGenus);
  CHECK_FALSE(c.feasible());
  const auto d = solve_genus(4, 0, tame_places({3}));
  CHECK_FALSE(d.genus);
  CHECK(d.status == GenusStatus::kNonIntegral);
}

TEST_CASE("back_solve_different examples") {
  const Characteristic p2(2), p0(0);
  std::vector<RamifiedPlace> a{RamifiedPlace::make(5, 4, p2), RamifiedPlace::unknown(10, p2)};
  CHECK(back_solve_different(10, 0, 2, a, p2) == 14);
  std::vector<RamifiedPlace> b{RamifiedPlace::tame(2), RamifiedPlace::tame(4),
                               RamifiedPlace::unknown(8, p0)};
  CHECK(back_solve_different(16, 0, 2, b, p0) == 7);
  std::vector<RamifiedPlace> c{RamifiedPlace::tame(2), RamifiedPlace::tame(2),
                               RamifiedPlace::tame(2), RamifiedPlace::unknown(4, p0)};
  CHECK(back_solve_different(8, 0, 2, c, p0) == 3);
  CHECK_THROWS_AS(back_solve_different(16, 0, 3, b, p0), InconsistentTower);
  std::vector<RamifiedPlace> none = tame_places({2, 4, 8});
  CHECK_THROWS(back_solve_different(16, 0, 2, none, p0));
}

TEST_CASE("tame closed form and permutation invariance") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<std::int64_t> idx(2, 30);
  for (int trial = 0; trial < 500; ++trial) {
    std::vector<std::int64_t> es(1 + trial % 6);
    for (auto& e : es) e = idx(rng);
    std::int64_t n = 1;
    for (auto e : es) n = lcm(n, e);
    const std::int64_t g0 = trial % 3;
    Rational closed(2 * g0 - 2);
    for (auto e : es) closed += Rational(BigInt(e - 1), BigInt(e));
    closed *= Rational(n);
    const auto places = tame_places(es);
    REQUIRE(hurwitz_two_g_minus_2(n, g0, places) == closed);
    auto shuffled = es;
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    REQUIRE(hurwitz_two_g_minus_2(n, g0, tame_places(shuffled)) == closed);
  }
}

TEST_CASE("solve and back-solve round trip") {
  const Characteristic p(3);
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<std::int64_t> idx(2, 27);
  int checked = 0;
  for (int trial = 0; trial < 2000 && checked < 300; ++trial) {
    std::vector<std::int64_t> es(2 + trial % 4);
    for (auto& e : es) e = idx(rng);
    std::int64_t n = 1;
    for (auto e : es) n = lcm(n, e);
    std::vector<RamifiedPlace> places;
    for (auto e : es) places.push_back(RamifiedPlace::minimal(e, p));
    const auto res = solve_genus(n, 0, places);
    if (!res.feasible()) continue;
    const auto known = places.back().different;
    places.back() = RamifiedPlace::unknown(es.back(), p);
    const auto g = static_cast<std::int64_t>(*res.genus);
    REQUIRE(back_solve_different(n, 0, g, places, p) == *known);
    places.back() = RamifiedPlace::make(es.back(), *known, p);
    REQUIRE(*solve_genus(n, 0, places).genus == *res.genus);
    ++checked;
  }
  CHECK(checked > 50);
}

TEST_CASE("signature construction") {
  const Signature s(Characteristic(3), {8, 2, 4}, 16);
  CHECK(s.indices() == std::vector<std::int64_t>{2, 4, 8});
  CHECK(s.str() == "(2,4,8)@p=3,N=16");
  CHECK_THROWS(Signature(Characteristic(3), {2, 3}, 4));
  CHECK_THROWS(Signature(Characteristic(3), {1, 2}));
}
