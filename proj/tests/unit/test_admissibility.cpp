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
#include "nilaut/admissibility.hpp"
#include "nilaut/group.hpp"

using namespace nilaut;

namespace {

Signature sig(std::int64_t p, std::vector<std::int64_t> es,
              std::optional<std::int64_t> n = std::nullopt) {
  return Signature(Characteristic(p), std::move(es), n);
}

}  // namespace

TEST_CASE("prime support") {
  CHECK(check_prime_support(sig(3, {2, 4, 8}, 16)).admissible());
  const auto a = check_prime_support(sig(5, {2, 2}, 6));
  CHECK_FALSE(a.admissible());
  CHECK(a.fired(Rule::kPrimeSupport));
  // 3 | e but 3 does not divide N cannot even form a Signature, so the
  // order-free check must still flag nothing order-dependent.
  CHECK_THROWS(sig(5, {2, 2, 3, 3}, 4));
  CHECK(check_prime_support(sig(5, {2, 2, 3, 3})).conditional);
}

TEST_CASE("lonely prime") {
  CHECK_FALSE(check_lonely_prime(sig(5, {2, 2, 3, 4})).admissible());
  CHECK(check_lonely_prime(sig(3, {2, 2, 3, 4})).admissible());
  CHECK(check_lonely_prime(sig(2, {5, 10})).admissible());
  CHECK_FALSE(check_lonely_prime(sig(0, {3, 4, 3})).admissible());
}

TEST_CASE("two-place saturation") {
  CHECK_FALSE(check_two_place_saturation(sig(7, {2, 2, 3, 3}, 12)).admissible());
  CHECK(check_two_place_saturation(sig(7, {2, 2, 3, 3}, 6)).admissible());
  // Three indices divisible by 2: the check imposes nothing.
  for (int s = 2; s <= 6; ++s) {
    const std::int64_t e = std::int64_t{1} << s;
    CHECK(check_two_place_saturation(sig(3, {2, 4, e}, 2 * e)).admissible());
  }
  CHECK(check_two_place_saturation(sig(3, {2, 4, 8})).conditional);
}

TEST_CASE("unique wild saturation") {
  CHECK(check_unique_wild_saturation(sig(5, {2, 10}, 10)).admissible());
  CHECK_FALSE(check_unique_wild_saturation(sig(5, {2, 10}, 50)).admissible());
  CHECK(check_unique_wild_saturation(sig(2, {3, 3, 3, 12}, 12)).admissible());
  CHECK_FALSE(check_unique_wild_saturation(sig(2, {3, 3, 3, 12}, 24)).admissible());
}

TEST_CASE("example configurations are admissible") {
  CHECK(admissible(sig(3, {2, 4, 8}, 16)).admissible());
  CHECK(admissible(sig(5, {2, 4, 8}, 16)).admissible());
  CHECK(admissible(sig(3, {2, 2, 2, 4}, 8)).admissible());
  CHECK(admissible(sig(2, {5, 10}, 10)).admissible());
  CHECK(admissible(sig(5, {2, 10}, 10)).admissible());
  CHECK(admissible(sig(7, {2, 2, 3, 3}, 6)).admissible());
}

TEST_CASE("excluded configurations are rejected") {
  for (std::int64_t p : {0, 5, 7, 11, 13}) {
    const auto v = admissible(sig(p, {2, 2, 3, 4}));
    CHECK_FALSE(v.admissible());
    CHECK(admissible_orders(sig(p, {2, 2, 3, 4}), 1 << 14).empty());
  }
  for (std::int64_t p : {5, 7, 11}) {
    for (std::int64_t n : {12, 18, 36, 72}) {
      CHECK_FALSE(admissible(sig(p, {2, 2, 3, 3}, n)).admissible());
    }
    CHECK(admissible_orders(sig(p, {2, 2, 3, 3}), 1 << 14) == std::vector<std::int64_t>{6});
  }
  // Type (3,4,3): 2 is lonely unless p = 2. At p = 2 the multiset passes every
  // filter with N = 12; only the index ordering of the r = 3 case analysis
  // rules it out there.
  for (std::int64_t p : {0, 3, 5, 7}) CHECK_FALSE(admissible(sig(p, {3, 3, 4})).admissible());
  CHECK(admissible_orders(sig(2, {3, 3, 4}), 1 << 14) == std::vector<std::int64_t>{12});
  // Lonely non-p primes in general.
  CHECK_FALSE(admissible(sig(0, {2, 3, 3})).admissible());
  CHECK_FALSE(admissible(sig(5, {2, 7, 7})).admissible());
  CHECK(admissible(sig(7, {2, 2, 7})).admissible());
}

TEST_CASE("verdicts report every violation and are monotone") {
  // 3 and 7 are lonely and differ from p = 5; 5 is lonely but equals p.
  const auto v = admissible(sig(5, {2, 3, 4, 5, 7}));
  CHECK(v.violations.size() == 2);
  CHECK(admissible(sig(0, {2, 3, 4, 5, 7})).violations.size() == 3);
  Verdict acc;
  CHECK(acc.admissible());
  acc.merge(check_lonely_prime(sig(5, {2, 2, 3, 4})));
  CHECK_FALSE(acc.admissible());
  acc.merge(check_prime_support(sig(3, {2, 4, 8}, 16)));
  CHECK_FALSE(acc.admissible());
}

TEST_CASE("order-free checks are permutation invariant") {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<std::int64_t> idx(2, 40);
  for (int t = 0; t < 300; ++t) {
    std::vector<std::int64_t> es(2 + t % 5);
    for (auto& e : es) e = idx(rng);
    auto perm = es;
    std::shuffle(perm.begin(), perm.end(), rng);
    const std::int64_t p = std::vector<std::int64_t>{0, 2, 3, 5, 7}[t % 5];
    const Signature a(Characteristic(p), es), b(Characteristic(p), perm);
    REQUIRE(check_lonely_prime(a).violations.size() == check_lonely_prime(b).violations.size());
    REQUIRE(check_prime_support(a).admissible() == check_prime_support(b).admissible());
    REQUIRE(admissible(a).admissible() == admissible(b).admissible());
  }
}

TEST_CASE("group tables and nilpotency") {
  CHECK(is_nilpotent(cyclic_group(10)));
  CHECK(is_nilpotent(dihedral_group(4)));
  CHECK(is_nilpotent(quaternion_group()));
  CHECK(is_nilpotent(direct_product(quaternion_group(), cyclic_group(3))));
  CHECK_FALSE(is_nilpotent(symmetric_group(3)));
  CHECK_FALSE(is_nilpotent(dihedral_group(3)));
  CHECK(lower_central_series(dihedral_group(8)) == std::vector<std::size_t>{16, 4, 2, 1});
  CHECK(symmetric_group(4).order() == 24);
  CHECK(symmetric_group(3).is_associative());
  CHECK_THROWS(CayleyTable(2, {0, 0, 0, 1}));
}

TEST_CASE("normal subgroup for every divisor") {
  CHECK(divisor_normal_subgroup_property(cyclic_group(10)));
  CHECK_FALSE(divisor_normal_subgroup_property(symmetric_group(3)));
  for (std::size_t n = 1; n <= 64; ++n) {
    REQUIRE(divisor_normal_subgroup_property(cyclic_group(n)));
  }
  const std::vector<CayleyTable> nilpotent{
      dihedral_group(4), dihedral_group(8), quaternion_group(),
      direct_product(dihedral_group(4), cyclic_group(3)),
      direct_product(quaternion_group(), cyclic_group(9)),
      direct_product(cyclic_group(4), cyclic_group(6))};
  for (const auto& g : nilpotent) {
    REQUIRE(is_nilpotent(g));
    REQUIRE(divisor_normal_subgroup_property(g));
  }
  CHECK_FALSE(divisor_normal_subgroup_property(symmetric_group(4)));
  CHECK_THROWS(divisor_normal_subgroup_property(cyclic_group(4097)));
}
