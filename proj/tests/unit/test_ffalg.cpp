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


#include <random>
#include <set>
#include <vector>

#include "doctest.h"
#include "nilaut/curve.hpp"
#include "nilaut/errors.hpp"
#include "nilaut/galois_field.hpp"
#include "nilaut/group.hpp"
#include "nilaut/poly.hpp"
#include "nilaut/search.hpp"
#include "nilaut/tower.hpp"

using namespace nilaut;

namespace {

RationalFunction rf(const FieldPtr& f, std::vector<std::int64_t> c) {
  return RationalFunction(Poly::from_ints(f, c));
}

RationalFunction rf_zero(const FieldPtr& f) { return RationalFunction(Poly(f)); }

// y^2 = x^5 - x over F_9 with zeta of order 8, and the maps sigma, eta.
struct Octa {
  FieldPtr F;
  CurvePtr C;
  Fq zeta;
  AutMap sigma, tau, eta;
};

Octa octa() {
  Octa o;
  o.F = fq_construct(3, 1, 8);
  o.zeta = o.F->primitive_root_of_unity(8);
  o.C = make_curve(o.F, Poly(o.F), Poly::from_ints(o.F, {0, -1, 0, 0, 0, 1}));
  const auto& F = o.F;
  const auto z2 = F->mul(o.zeta, o.zeta);
  o.sigma = make_aut(ExtElement(o.C, RationalFunction(Poly::monomial(F, z2, 1)), rf_zero(F)),
                     ExtElement(o.C, rf_zero(F), RationalFunction::constant(F, o.zeta)));
  const RationalFunction x = RationalFunction::x(F);
  o.tau = make_aut(ExtElement::from(o.C, -(x.inverse())),
                   ExtElement(o.C, rf_zero(F), x.pow(3).inverse()));
  o.eta = compose(o.sigma, o.tau);
  return o;
}

}  // namespace

TEST_CASE("field construction") {
  CHECK(fq_construct(3, 1, 8)->size() == 9);
  CHECK(fq_construct(17, 1, 8)->size() == 17);
  CHECK(fq_construct(5, 1, 2)->size() == 5);
  CHECK(fq_construct(2, 1, 5)->size() == 16);
  CHECK_THROWS(fq_construct(3, 1, 6));
  const auto F = GaloisField::create(3, 2);
  const auto z = F->primitive_root_of_unity(8);
  CHECK(F->mult_order(z) == 8);
  CHECK(F->mult_order(F->primitive()) == 8);
  CHECK(GaloisField::create(3, 2)->modulus() == F->modulus());
}

TEST_CASE("field axioms and frobenius on samples") {
  for (auto [p, k] : std::vector<std::pair<int, int>>{{2, 4}, {3, 2}, {5, 2}, {7, 3}, {13, 1}}) {
    const auto F = GaloisField::create(p, k);
    std::mt19937 rng(static_cast<unsigned>(p * 100 + k));
    std::uniform_int_distribution<std::uint32_t> el(0, F->size() - 1);
    for (int i = 0; i < 2000; ++i) {
      const Fq a{el(rng)}, b{el(rng)}, c{el(rng)};
      REQUIRE(F->add(a, b) == F->add(b, a));
      REQUIRE(F->mul(a, F->add(b, c)) == F->add(F->mul(a, b), F->mul(a, c)));
      REQUIRE(F->mul(F->mul(a, b), c) == F->mul(a, F->mul(b, c)));
      REQUIRE(F->add(a, F->neg(a)) == F->zero());
      if (a != F->zero()) REQUIRE(F->mul(a, F->inv(a)) == F->one());
      REQUIRE(F->frobenius(F->add(a, b)) == F->add(F->frobenius(a), F->frobenius(b)));
      REQUIRE(F->frobenius(F->mul(a, b)) == F->mul(F->frobenius(a), F->frobenius(b)));
      REQUIRE(F->frobenius(F->pth_root(a)) == a);
      REQUIRE(F->pow(a, F->size()) == a);
    }
  }
}

TEST_CASE("polynomial arithmetic") {
  const auto F = GaloisField::create(5, 1);
  const Poly f = Poly::from_ints(F, {1, 2, 3});
  const Poly g = Poly::from_ints(F, {4, 1});
  const auto [qq, r] = (f * g + Poly::from_ints(F, {2})).divmod(g);
  CHECK(qq == f);
  CHECK(r == Poly::from_ints(F, {2}));
  CHECK(gcd(f * g, g * g) == g.monic());
  CHECK(Poly::from_ints(F, {0, 0, 1}).compose(g) == g * g);
  CHECK(Poly::from_ints(F, {1, 0, 0, 0, 0, 1}).derivative().is_zero());
  CHECK(Poly::from_ints(F, {1, 0, 0, 0, 0, 1}).pth_root() == Poly::from_ints(F, {1, 1}));
}

TEST_CASE("squarefree decomposition in characteristic p") {
  const auto F = GaloisField::create(3, 1);
  const Poly a = Poly::from_ints(F, {1, 1});     // x + 1
  const Poly b = Poly::from_ints(F, {1, 0, 1});  // x^2 + 1
  const Poly f = a.pow(3) * b.pow(2) * Poly::x(F);
  const auto dec = squarefree_decomposition(f);
  Poly prod = Poly::constant(F, F->one());
  std::set<int> mults;
  for (const auto& [q, m] : dec) {
    prod *= q.pow(static_cast<std::size_t>(m));
    mults.insert(m);
    CHECK(gcd(q, q.derivative()).is_constant());
  }
  CHECK(prod == f.monic());
  CHECK(mults == std::set<int>{1, 2, 3});
  const auto roots = roots_in_field(f);
  CHECK(roots.size() == 2);
}

TEST_CASE("rational functions stay reduced") {
  const auto F = GaloisField::create(7, 1);
  const auto x = RationalFunction::x(F);
  const auto one = RationalFunction::constant(F, F->one());
  const auto r = (x * x - one) / (x - one);
  CHECK(r == x + one);
  CHECK(r.is_polynomial());
  CHECK(x.inverse().valuation_at_infinity() == 1);
  CHECK((x * x * x).valuation_at_infinity() == -3);
}

TEST_CASE("octahedral automorphisms over F_9") {
  const auto o = octa();
  CHECK(aut_order(o.sigma) == 8);
  CHECK(aut_order(o.eta) == 2);
  CHECK(compose(o.eta, o.sigma) == compose(aut_pow(o.sigma, 3), o.eta));
  const auto id = identity_aut(o.C);
  const auto e = ExtElement::x(o.C) * ExtElement::y(o.C) + ExtElement::constant(o.C, o.zeta);
  CHECK(apply_aut(id, e) == e);
  const auto g = group_closure(o.C, {o.sigma, o.eta});
  CHECK(g.order() == 16);
  CHECK(is_nilpotent(g.table));
  CHECK(g.table.is_associative());
  CHECK(divisor_normal_subgroup_property(g.table));
  CHECK(group_closure(o.C, {id}).order() == 1);
  CHECK_THROWS_AS(group_closure(o.C, {o.sigma, o.eta}, 8), CapExceeded);
  for (const auto& m : g.elements) {
    REQUIRE(defining_residue(m).is_zero());
    REQUIRE(compose(m, aut_inverse(m)) == id);
  }
}

TEST_CASE("maps violating the curve equation are rejected") {
  const auto o = octa();
  const auto& F = o.F;
  CHECK_THROWS_AS(make_aut(ExtElement::from(o.C, rf(F, {1, 1})), ExtElement::y(o.C)),
                  NotAnAutomorphism);
  CHECK_THROWS_AS(make_aut(ExtElement::constant(o.C, F->one()), ExtElement::y(o.C)),
                  NotAnAutomorphism);
}

TEST_CASE("function field element arithmetic") {
  const auto o = octa();
  const auto y = ExtElement::y(o.C);
  const auto x = ExtElement::x(o.C);
  CHECK(y * y == ExtElement::from(o.C, o.C->f.is_zero() ? RationalFunction() : RationalFunction(o.C->f)));
  const auto u = x + y * x * x;
  CHECK(u * u.inverse() == ExtElement::constant(o.C, o.F->one()));
  CHECK(u.pow(3) == u * u * u);
  CHECK((u / x) * x == u);
}

TEST_CASE("characteristic-2 Artin-Schreier curve") {
  const auto F = fq_construct(2, 1, 5);
  const auto C = make_curve(F, Poly::constant(F, F->one()), Poly::monomial(F, F->one(), 5));
  const auto z5 = F->primitive_root_of_unity(5);
  const auto sigma = make_aut(
      ExtElement(C, RationalFunction(Poly::monomial(F, z5, 1)), RationalFunction(Poly(F))),
      ExtElement::y(C) + ExtElement::constant(C, F->one()));
  CHECK(aut_order(sigma) == 10);
  CHECK(group_closure(C, {sigma}).order() == 10);
  const auto y = ExtElement::y(C);
  CHECK(y * y - y == ExtElement::x(C).pow(5));
}

TEST_CASE("rational fiber ramification") {
  const auto F = fq_construct(3, 1, 8);
  const RationalStep x4{Poly::monomial(F, F->one(), 4), Poly::from_ints(F, {1}), "z", "x"};
  const auto at0 = rational_fiber_ramification(x4, place_group(F, Place::at(F->zero())));
  REQUIRE(at0.size() == 1);
  CHECK(at0[0].e == 4);
  CHECK(at0[0].count == 1);
  const auto at1 = rational_fiber_ramification(x4, place_group(F, Place::at(F->one())));
  std::int64_t simple = 0;
  for (const auto& g : at1) {
    CHECK(g.e == 1);
    simple += g.count;
  }
  CHECK(simple == 4);
  const auto inf = rational_fiber_ramification(x4, place_group(F, Place::infinity()));
  REQUIRE(inf.size() == 1);
  CHECK(inf[0].infinite);
  CHECK(inf[0].e == 4);

  const RationalStep t{Poly::from_ints(F, {1, 0, 1}), Poly::from_ints(F, {0, 2}), "t", "z"};
  const auto t1 = rational_fiber_ramification(t, place_group(F, Place::at(F->one())));
  REQUIRE(t1.size() == 1);
  CHECK(t1[0].e == 2);
  CHECK(t1[0].poly == Poly::from_ints(F, {-1, 1}));

  const auto F2 = GaloisField::create(2, 1);
  const RationalStep as{Poly::from_ints(F2, {0, 1, 1}), Poly::from_ints(F2, {1}), "z", "y"};
  for (std::uint32_t c = 0; c < 2; ++c) {
    const auto fib = rational_fiber_ramification(as, place_group(F2, Place::at(Fq{c})));
    std::int64_t n = 0;
    for (const auto& g : fib) {
      CHECK(g.e == 1);
      n += g.count;
    }
    CHECK(n == 2);
  }
}

TEST_CASE("kummer ramification and abhyankar") {
  const auto F = fq_construct(3, 1, 8);
  const auto f = rf(F, {0, -1, 0, 0, 0, 1});
  CHECK(kummer_ramification(2, f, Place::at(F->zero())) == 2);
  CHECK(kummer_ramification(2, f, Place::infinity()) == 2);
  CHECK(kummer_ramification(2, f, Place::at(F->from_int(2))) == 2);
  const auto F2 = GaloisField::create(2, 1);
  CHECK(kummer_ramification(5, rf(F2, {0, 1, 1}), Place::infinity()) == 5);
  CHECK(kummer_ramification(5, rf(F2, {0, 1, 1}), Place::at(F2->zero())) == 5);
  CHECK(abhyankar_compose(5, 2, Characteristic(2)) == 10);
  CHECK(abhyankar_compose(5, 1, Characteristic(2)) == 5);
  CHECK(abhyankar_compose(2, 4, Characteristic(3)) == 4);
  CHECK_THROWS(abhyankar_compose(2, 4, Characteristic(2)));
  CHECK(kummer_genus(2, Poly::from_ints(F, {0, -1, 0, 0, 0, 1})) == 2);
  CHECK(kummer_genus(6, Poly::from_ints(GaloisField::create(5, 1), {0, 1, 0, 0, 0, 1})) == 10);
}

TEST_CASE("tower type of the octahedral tower") {
  const auto F = fq_construct(3, 1, 8);
  const Tower tw{F,
                 "t",
                 {RationalStep{Poly::from_ints(F, {1, 0, 1}), Poly::from_ints(F, {0, 2}), "t", "z"},
                  RationalStep{Poly::monomial(F, F->one(), 4), Poly::from_ints(F, {1}), "z", "x"},
                  KummerStep{2, Poly::from_ints(F, {0, -1, 0, 0, 0, 1}), "y"}}};
  CHECK(tw.degree() == 16);
  const auto prof = tower_type(tw);
  CHECK(prof.type() == std::vector<std::int64_t>{2, 4, 8});
  CHECK(prof.index_at(Place::infinity()) == 8);
  CHECK(prof.index_at(Place::at(F->one())) == 4);
  CHECK(prof.index_at(Place::at(F->from_int(-1))) == 2);
  for (const auto& fib : prof.fibers) REQUIRE(fib.degree_sum() == 16);
  const Tower bad{F, "t", {KummerStep{2, Poly::from_ints(F, {0, 1}), "y"},
                           RationalStep{Poly::monomial(F, F->one(), 4), Poly::from_ints(F, {1}), "z", "x"}}};
  CHECK_THROWS(bad.validate());
}

TEST_CASE("r1 count against a brute-force oracle") {
  for (std::int64_t p : {3, 5}) {
    const auto F = GaloisField::create(p, 2);
    const auto q = static_cast<std::uint32_t>(F->size());
    const auto pn1 = static_cast<std::size_t>(p + 1);
    const Poly xp1 = Poly::monomial(F, F->one(), pn1);
    std::uint64_t count = 0;
    for (std::uint32_t d = 0; d < q; ++d) {
      const Poly shift(F, {Fq{d}, F->one()});
      const Poly rhs = shift.pow(pn1) - xp1;
      for (std::uint32_t a = 0; a < q; ++a) {
        for (std::uint32_t c = 0; c < q; ++c) {
          const Poly Q(F, {Fq{c}, Fq{a}});
          if (Q.pow(static_cast<std::size_t>(p)) + Q == rhs) ++count;
        }
      }
    }
    const auto res = count_r1_automorphisms(p, 1);
    CHECK(res.count == count);
    CHECK(count == static_cast<std::uint64_t>(p * p * p));
  }
  CHECK(count_r1_automorphisms(5, 1).count == 125);
  CHECK(count_r1_automorphisms(7, 1).count == 343);
  // Even n: translations live in F_{p^{4n}}, not F_{p^{2n}}.
  const auto even = count_r1_automorphisms(3, 2);
  CHECK(even.count == 243);
  CHECK(even.translations == 81);
  CHECK(even.field->size() == 6561);
  CHECK(count_r1_automorphisms(2, 3).count == 128);
  CHECK_THROWS_AS(count_r1_automorphisms(11, 3), TooLarge);
  const auto maps = r1_maps(3, 1);
  const auto table = r1_group(maps);
  CHECK(table.order() == 27);
  CHECK(is_nilpotent(table));
  CHECK(r1_bound(5, 10) == 125);
}
