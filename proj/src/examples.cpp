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

#include "nilaut/examples.hpp"

#include <algorithm>
#include <stdexcept>

#include "nilaut/arith.hpp"
#include "nilaut/errors.hpp"
#include "nilaut/hurwitz.hpp"
#include "nilaut/search.hpp"

namespace nilaut {
namespace {

std::string tuple_str(const std::vector<std::int64_t>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(v[i]);
  }
  return s + ")";
}

class Claims {
 public:
  explicit Claims(ExampleReport* r) : r_(r) {}
  bool check(std::string lhs, std::string rhs, bool holds) {
    r_->relations.push_back({std::move(lhs), std::move(rhs), holds});
    return holds;
  }
  template <typename A, typename B>
  bool equal(const std::string& lhs, const A& got, const B& want) {
    return check(lhs + " = " + to_str(got), to_str(want), got == want);
  }

 private:
  static std::string to_str(std::int64_t v) { return std::to_string(v); }
  static std::string to_str(std::size_t v) { return std::to_string(v); }
  static std::string to_str(int v) { return std::to_string(v); }
  static std::string to_str(const BigInt& v) { return v.str(); }
  static std::string to_str(const std::string& v) { return v; }
  static std::string to_str(const std::vector<std::int64_t>& v) { return tuple_str(v); }
  ExampleReport* r_;
};

RationalFunction rf(const Poly& num) { return RationalFunction(num); }

std::vector<RamifiedPlace> tame_places(const std::vector<std::int64_t>& type,
                                       Characteristic p) {
  std::vector<RamifiedPlace> out;
  for (auto e : type) out.push_back(RamifiedPlace::tame(e, p));
  return out;
}

void record_field(ExampleReport& r, const FieldPtr& F) {
  r.field_p = F->characteristic();
  r.field_k = F->degree();
  r.field_description = F->describe();
}

void record_fibers(Claims& c, const RamificationProfile& prof) {
  bool ok = true;
  for (const auto& f : prof.fibers) ok = ok && f.degree_sum() == prof.degree;
  c.check("sum of e over each fiber = " + std::to_string(prof.degree),
          "all " + std::to_string(prof.fibers.size()) + " rational base places", ok);
}

// --- y^2 = x(x^4 - 1) ------------------------------------------------------

struct OctaCurve {
  FieldPtr F;
  Fq zeta;  // primitive 8th root of unity
  CurvePtr curve;
  AutMap sigma, tau, eta;
  ExtElement t;  // (x^8 + 1)/(2 x^4)
};

OctaCurve build_octa(std::int64_t p) {
  if (p == 2 || !is_prime(p)) throw std::invalid_argument("this example needs an odd prime p");
  OctaCurve o;
  o.F = fq_construct(p, 1, 8);
  const auto& F = o.F;
  o.zeta = F->primitive_root_of_unity(8);
  o.curve = make_curve(F, Poly(F), Poly::from_ints(F, {0, -1, 0, 0, 0, 1}));
  const auto& C = o.curve;
  const RationalFunction zero = RationalFunction::constant(F, Fq{0});
  o.sigma = make_aut(ExtElement::from(C, rf(Poly::monomial(F, F->pow(o.zeta, 2), 1))),
                     ExtElement(C, zero, RationalFunction::constant(F, o.zeta)));
  o.tau = make_aut(
      ExtElement::from(C, RationalFunction(Poly::constant(F, F->from_int(-1)), Poly::x(F))),
      ExtElement(C, zero,
                 RationalFunction(Poly::constant(F, F->one()), Poly::monomial(F, F->one(), 3))));
  o.eta = compose(o.sigma, o.tau);
  o.t = ExtElement::from(C, RationalFunction(Poly::from_ints(F, {1, 0, 0, 0, 0, 0, 0, 0, 1}),
                                             Poly::monomial(F, F->from_int(2), 4)));
  return o;
}

Tower octa_tower(const OctaCurve& o) {
  const auto& F = o.F;
  return Tower{F,
               "t",
               {RationalStep{Poly::from_ints(F, {1, 0, 1}), Poly::from_ints(F, {0, 2}), "t", "z"},
                RationalStep{Poly::from_ints(F, {0, 0, 0, 0, 1}), Poly::from_ints(F, {1}), "z", "x"},
                KummerStep{2, o.curve->f, "y"}}};
}

// w = (x^4 - 1)/(s x^2) with s = zeta + zeta^-1, so s^2 = 2 and w^2 = t - 1.
RationalFunction octa_w(const OctaCurve& o, Fq* s_out = nullptr) {
  const auto& F = o.F;
  const Fq s = F->add(o.zeta, F->inv(o.zeta));
  if (s_out) *s_out = s;
  return RationalFunction(Poly::from_ints(F, {-1, 0, 0, 0, 1}), Poly::monomial(F, s, 2));
}

std::vector<std::uint32_t> stabilizer(const AutGroup& g, const ExtElement& w) {
  std::vector<std::uint32_t> idx;
  for (std::uint32_t i = 0; i < g.order(); ++i) {
    if (apply_aut(g.elements[i], w) == w) idx.push_back(i);
  }
  return idx;
}

CayleyTable restrict_table(const CayleyTable& t, const std::vector<std::uint32_t>& idx) {
  std::vector<std::int64_t> pos(t.order(), -1);
  for (std::size_t i = 0; i < idx.size(); ++i) pos[idx[i]] = static_cast<std::int64_t>(i);
  const std::size_t n = idx.size();
  std::vector<std::uint32_t> mul(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      const auto prod = pos[t.mul(idx[a], idx[b])];
      if (prod < 0) throw std::logic_error("subset is not closed");
      mul[a * n + b] = static_cast<std::uint32_t>(prod);
    }
  }
  return CayleyTable(n, std::move(mul));
}

ExampleReport verify_r3(const ExampleParams& params) {
  ExampleReport r;
  r.example_id = "r3-kummer";
  Claims c(&r);
  const std::int64_t p = params.p.value_or(3);
  const OctaCurve o = build_octa(p);
  const auto& F = o.F;
  record_field(r, F);
  const Characteristic ch(p);

  c.equal("ord(sigma)", aut_order(o.sigma), std::size_t{8});
  c.equal("ord(eta)", aut_order(o.eta), std::size_t{2});
  c.check("eta*sigma", "sigma^3*eta", compose(o.eta, o.sigma) == compose(aut_pow(o.sigma, 3), o.eta));
  const AutGroup G = group_closure(o.curve, {o.sigma, o.eta}, 64);
  c.equal("|<sigma,eta>|", G.order(), std::size_t{16});
  c.check("sigma(t)", "t", apply_aut(o.sigma, o.t) == o.t);
  c.check("tau(t)", "t", apply_aut(o.tau, o.t) == o.t);
  c.check("<sigma,eta> nilpotent", "true", is_nilpotent(G.table));

  const Tower tw = octa_tower(o);
  r.tower = tw.describe();
  const RamificationProfile prof = tower_type(tw);
  c.equal("[F:K(t)]", prof.degree, static_cast<std::int64_t>(G.order()));
  record_fibers(c, prof);
  r.type = prof.type();
  c.equal("type over K(t)", r.type, std::vector<std::int64_t>{2, 4, 8});
  c.equal("e(t=-1)", prof.index_at(Place::at(F->from_int(-1))), std::int64_t{2});
  c.equal("e(t=1)", prof.index_at(Place::at(F->one())), std::int64_t{4});
  c.equal("e(t=inf)", prof.index_at(Place::infinity()), std::int64_t{8});

  const std::int64_t g_kummer = kummer_genus(2, o.curve->f);
  const auto places = tame_places(r.type, ch);
  const GenusResult g_tower = solve_genus(prof.degree, 0, places);
  c.equal("genus from y^2 = x(x^4-1) over K(x)", g_kummer, std::int64_t{2});
  c.check("genus from Hurwitz over K(t)", std::to_string(g_kummer),
          g_tower.genus && *g_tower.genus == g_kummer);
  r.genus = g_kummer;
  r.order = static_cast<std::int64_t>(G.order());
  r.bound = "16(g-1)";
  r.equality = r.order == 16 * (r.genus - 1);
  c.check("N = " + std::to_string(r.order), "16(g-1) = " + std::to_string(16 * (r.genus - 1)),
          r.equality);
  const RatioReport rep = ratio_sup(Signature(ch, r.type));
  c.check("ratio_sup" + Signature(ch, r.type).str(), "16",
          rep.ratio_sup && *rep.ratio_sup == Rational(16));
  return r;
}

ExampleReport verify_r4(const ExampleParams& params) {
  ExampleReport r;
  r.example_id = "r4-kummer";
  Claims c(&r);
  const std::int64_t p = params.p.value_or(3);
  const OctaCurve o = build_octa(p);
  const auto& F = o.F;
  record_field(r, F);
  const Characteristic ch(p);

  Fq s;
  const RationalFunction w = octa_w(o, &s);
  c.check("s^2", "2", F->mul(s, s) == F->from_int(2));
  const ExtElement we = ExtElement::from(o.curve, w);
  c.check("w^2", "t - 1", we * we == o.t - ExtElement::constant(o.curve, F->one()));

  const AutGroup G = group_closure(o.curve, {o.sigma, o.eta}, 64);
  const auto stab = stabilizer(G, we);
  const CayleyTable H = restrict_table(G.table, stab);
  c.equal("|Stab(w)|", H.order(), std::size_t{8});
  c.check("Stab(w) nilpotent", "true", is_nilpotent(H));

  const Tower tw{F,
                 "w",
                 {RationalStep{w.num(), w.den(), "w", "x"}, KummerStep{2, o.curve->f, "y"}}};
  r.tower = tw.describe();
  const RamificationProfile prof = tower_type(tw);
  c.equal("[F:K(w)]", prof.degree, static_cast<std::int64_t>(H.order()));
  record_fibers(c, prof);
  r.type = prof.type();
  c.equal("type over K(w)", r.type, std::vector<std::int64_t>{2, 2, 2, 4});

  // Transitivity: indices over K(t) divided by those of K(w)/K(t).
  const RamificationProfile over_t = tower_type(octa_tower(o));
  const RationalStep tw_step{Poly::from_ints(F, {1, 0, 1}), Poly::from_ints(F, {1}), "t", "w"};
  std::vector<std::int64_t> quotient;
  bool divisible = true;
  for (const auto& fib : over_t.fibers) {
    for (const auto& g : rational_fiber_ramification(tw_step, place_group(F, fib.base))) {
      divisible = divisible && fib.e % g.e == 0;
      const std::int64_t e = fib.e / g.e;
      if (e > 1) quotient.insert(quotient.end(), static_cast<std::size_t>(g.count), e);
    }
  }
  std::sort(quotient.begin(), quotient.end());
  c.check("type via transitivity from K(t)", tuple_str(quotient), divisible && quotient == r.type);

  const std::int64_t g_kummer = kummer_genus(2, o.curve->f);
  const GenusResult g_tower = solve_genus(prof.degree, 0, tame_places(r.type, ch));
  c.check("genus from Hurwitz over K(w)", std::to_string(g_kummer),
          g_tower.genus && *g_tower.genus == g_kummer);
  std::vector<RamifiedPlace> with_unknown;
  for (std::size_t i = 0; i + 1 < r.type.size(); ++i) {
    with_unknown.push_back(RamifiedPlace::tame(r.type[i], ch));
  }
  with_unknown.push_back(RamifiedPlace::unknown(r.type.back(), ch));
  c.equal("back-solved d(w=inf)", back_solve_different(prof.degree, 0, g_kummer, with_unknown, ch),
          std::int64_t{3});

  r.genus = g_kummer;
  r.order = static_cast<std::int64_t>(H.order());
  r.bound = "8(g-1)";
  r.equality = r.order == 8 * (r.genus - 1);
  c.check("N = " + std::to_string(r.order), "8(g-1) = " + std::to_string(8 * (r.genus - 1)),
          r.equality);
  return r;
}

// --- y^2 - y = x^5 (p = 2) and y^5 - y = x^2 (p = 5) -----------------------

struct CyclicTen {
  FieldPtr F;
  CurvePtr curve;
  AutMap sigma;
  ExtElement z;  // generator of the fixed field
  Tower tower;
  RationalStep sub_x, sub_y;  // the two subfields over K(z)
  std::int64_t kummer_m;
  Poly kummer_f;
};

CyclicTen build_r2(std::int64_t p) {
  CyclicTen t;
  if (p == 2) {
    t.F = fq_construct(2, 1, 5);
    const auto& F = t.F;
    const Fq zeta = F->primitive_root_of_unity(5);
    // y^2 = y + x^5.
    t.curve = make_curve(F, Poly::from_ints(F, {1}), Poly::monomial(F, F->one(), 5));
    const auto& C = t.curve;
    t.sigma = make_aut(ExtElement::from(C, rf(Poly::monomial(F, zeta, 1))),
                       ExtElement::y(C) + ExtElement::constant(C, F->one()));
    t.z = ExtElement::x(C).pow(5);
    const Poly y2y = Poly::from_ints(F, {0, -1, 1});
    t.sub_x = RationalStep{Poly::monomial(F, F->one(), 5), Poly::from_ints(F, {1}), "z", "x"};
    t.sub_y = RationalStep{y2y, Poly::from_ints(F, {1}), "z", "y"};
    t.kummer_m = 5;
    t.kummer_f = y2y;
    t.tower = Tower{F, "z", {t.sub_y, KummerStep{5, y2y, "x"}}};
  } else if (p == 5) {
    t.F = fq_construct(5, 1, 2);
    const auto& F = t.F;
    const Fq zeta = F->primitive_root_of_unity(2);
    // Quadratic in x over K(y): x^2 = y^5 - y.
    const Poly y5y = Poly::from_ints(F, {0, -1, 0, 0, 0, 1});
    t.curve = make_curve(F, Poly(F), y5y, "y", "x");
    const auto& C = t.curve;
    t.sigma = make_aut(ExtElement::x(C) + ExtElement::constant(C, F->one()),
                       ExtElement(C, RationalFunction::constant(F, Fq{0}),
                                  RationalFunction::constant(F, zeta)));
    t.z = ExtElement::y(C) * ExtElement::y(C);
    t.sub_x = RationalStep{Poly::monomial(F, F->one(), 2), Poly::from_ints(F, {1}), "z", "x"};
    t.sub_y = RationalStep{y5y, Poly::from_ints(F, {1}), "z", "y"};
    t.kummer_m = 2;
    t.kummer_f = y5y;
    t.tower = Tower{F, "z", {t.sub_y, KummerStep{2, y5y, "x"}}};
  } else {
    throw std::invalid_argument("r2 examples exist for p = 2 and p = 5");
  }
  return t;
}

ExampleReport verify_r2(std::int64_t p) {
  ExampleReport r;
  r.example_id = p == 2 ? "r2-p2" : "r2-p5";
  Claims c(&r);
  const CyclicTen t = build_r2(p);
  const auto& F = t.F;
  record_field(r, F);
  const Characteristic ch(p);
  r.notes.push_back("curve " + t.curve->str());

  c.equal("ord(sigma)", aut_order(t.sigma), std::size_t{10});
  const AutGroup G = group_closure(t.curve, {t.sigma}, 64);
  c.equal("|<sigma>|", G.order(), std::size_t{10});
  c.check("sigma(z)", "z", apply_aut(t.sigma, t.z) == t.z);
  c.check("<sigma> nilpotent", "true", is_nilpotent(G.table));

  r.tower = t.tower.describe();
  const RamificationProfile prof = tower_type(t.tower);
  c.equal("[F:K(z)]", prof.degree, static_cast<std::int64_t>(G.order()));
  record_fibers(c, prof);
  r.type = prof.type();
  const std::vector<std::int64_t> want = p == 2 ? std::vector<std::int64_t>{5, 10}
                                                : std::vector<std::int64_t>{2, 10};
  c.equal("type over K(z)", r.type, want);

  // Abhyankar: F is the compositum of K(x) and K(y) over K(z).
  const RamificationProfile px = tower_type(Tower{F, "z", {t.sub_x}});
  const RamificationProfile py = tower_type(Tower{F, "z", {t.sub_y}});
  bool abhyankar = true;
  for (std::size_t i = 0; i < prof.fibers.size(); ++i) {
    abhyankar = abhyankar &&
                abhyankar_compose(px.fibers[i].e, py.fibers[i].e, ch) == prof.fibers[i].e;
  }
  c.check("e = lcm(e in K(x), e in K(y))", "at every rational place of K(z)", abhyankar);

  const std::int64_t g_kummer = kummer_genus(t.kummer_m, t.kummer_f);
  c.equal("genus from Kummer step over K(y)", g_kummer, std::int64_t{2});
  std::vector<RamifiedPlace> places;
  std::int64_t wild_e = 0;
  for (auto e : r.type) {
    if (ch.divides(e)) {
      places.push_back(RamifiedPlace::unknown(e, ch));
      wild_e = e;
    } else {
      places.push_back(RamifiedPlace::tame(e, ch));
    }
  }
  const std::int64_t d = back_solve_different(prof.degree, 0, g_kummer, places, ch);
  const std::int64_t dmin = min_different_exponent(wild_e, ch);
  r.notes.push_back("back-solved different exponent at the wild place: " + std::to_string(d));
  c.equal("back-solved d(e=" + std::to_string(wild_e) + ")", d, dmin);
  const GenusResult g_min = solve_genus(prof.degree, 0, Signature(ch, r.type).minimal_places());
  c.check("genus from Hurwitz over K(z) with minimal d", std::to_string(g_kummer),
          g_min.genus && *g_min.genus == g_kummer);

  r.genus = g_kummer;
  r.order = static_cast<std::int64_t>(G.order());
  r.bound = "10(g-1)";
  r.equality = r.order == 10 * (r.genus - 1);
  c.check("N = " + std::to_string(r.order), "10(g-1) = " + std::to_string(10 * (r.genus - 1)),
          r.equality);
  if (p == 5) {
    r.notes.push_back("sigma uses zeta = -1, a primitive square root of unity; the cyclic "
                      "group of order 10 comes from combining it with y -> y + 1");
  }
  return r;
}

// --- y^p + y = x^(p^n + 1) ------------------------------------------------

ExampleReport verify_r1(const ExampleParams& params) {
  ExampleReport r;
  r.example_id = "r1";
  Claims c(&r);
  const std::int64_t p = params.p.value_or(5);
  const int n = params.n;
  const R1Count cnt = count_r1_automorphisms(p, n);
  record_field(r, cnt.field);

  const std::int64_t pn = ipow(p, n);
  // View the curve as x^(p^n + 1) = y^p + y over K(y); p^n + 1 is prime to p.
  const FieldPtr Fp = GaloisField::create(p, 1);
  std::vector<std::int64_t> f(static_cast<std::size_t>(p) + 1, 0);
  f[1] = 1;
  f[static_cast<std::size_t>(p)] = 1;
  r.genus = kummer_genus(pn + 1, Poly::from_ints(Fp, f));
  c.equal("genus", r.genus, pn * (p - 1) / 2);
  r.tower = {"x^" + std::to_string(pn + 1) + " = y^" + std::to_string(p) + " + y"};

  const std::int64_t expected = ipow(p, 2 * n + 1);
  r.order = static_cast<std::int64_t>(cnt.count);
  c.equal("#{(d,Q)}", r.order, expected);
  c.equal("#{d admitting Q}", static_cast<std::int64_t>(cnt.translations), ipow(p, 2 * n));
  if (r.genus >= 2) {
    const BigInt bound = r1_bound(p, r.genus);
    const Rational exact = r1_bound_exact(p, r.genus);
    c.check("N = " + std::to_string(r.order), "4p g^2/(p-1)^2 = " + exact.str(),
            exact == Rational(BigInt(r.order)));
    r.bound = "4p g^2/(p-1)^2";
    r.equality = exact == Rational(BigInt(r.order)) && bound == r.order;
    const Rational displayed = Rational(BigInt(4 * p)) * Rational(BigInt(r.genus)) *
                               Rational(BigInt(r.genus)) / Rational(BigInt(p - 1));
    r.notes.push_back("4p g^2/(p-1) = " + displayed.str() +
                      (displayed == Rational(BigInt(r.order)) ? " also matches"
                                                              : " does not match the count"));
  } else {
    c.check("genus >= 2", std::to_string(r.genus), false);
  }
  if (cnt.count <= 1024) {
    const CayleyTable g = r1_group(r1_maps(p, n));
    c.check("maps closed under composition, nilpotent", "true", is_nilpotent(g));
  } else {
    r.notes.push_back("group table skipped above 1024 elements");
  }
  r.notes.push_back("d ranges over F_" + std::to_string(cnt.field->size()) +
                    (n % 2 ? ": the conditions force d^(p^(2n)) = d"
                           : ": the conditions force d^(p^(2n)) = -d, so d lies outside F_(p^(2n))"));
  return r;
}

}  // namespace

bool ExampleReport::verified() const { return first_failure() == nullptr; }

const Relation* ExampleReport::first_failure() const {
  for (const auto& rel : relations) {
    if (!rel.holds) return &rel;
  }
  return nullptr;
}

std::vector<std::string> example_ids() {
  return {"r3-kummer", "r4-kummer", "r2-p2", "r2-p5", "r1"};
}

ExampleReport verify_example(const std::string& id, const ExampleParams& params) {
  if (id == "r3-kummer") return verify_r3(params);
  if (id == "r4-kummer") return verify_r4(params);
  if (id == "r2-p2") return verify_r2(2);
  if (id == "r2-p5") return verify_r2(5);
  if (id == "r1") return verify_r1(params);
  throw std::invalid_argument("unknown example id: " + id);
}

void require_verified(const ExampleReport& report) {
  if (const Relation* bad = report.first_failure()) {
    throw ClaimMismatch(report.example_id + ": " + bad->lhs, "expected " + bad->rhs);
  }
}

ExampleGroup example_group(const std::string& id, const ExampleParams& params) {
  if (id == "r3-kummer" || id == "r4-kummer") {
    const OctaCurve o = build_octa(params.p.value_or(3));
    AutGroup G = group_closure(o.curve, {o.sigma, o.eta}, 64);
    if (id == "r3-kummer") {
      return {id, {"sigma: " + o.sigma.str(), "eta: " + o.eta.str()}, std::move(G.table)};
    }
    const ExtElement w = ExtElement::from(o.curve, octa_w(o));
    return {id, {"stabilizer of w = " + w.str() + " in <sigma, eta>"},
            restrict_table(G.table, stabilizer(G, w))};
  }
  if (id == "r2-p2" || id == "r2-p5") {
    const CyclicTen t = build_r2(id == "r2-p2" ? 2 : 5);
    AutGroup G = group_closure(t.curve, {t.sigma}, 64);
    return {id, {"sigma: " + t.sigma.str()}, std::move(G.table)};
  }
  if (id == "r1") {
    const std::int64_t p = params.p.value_or(5);
    return {id,
            {"x -> x + d, y -> y + Q(x) on y^" + std::to_string(p) + " + y = x^" +
             std::to_string(ipow(p, params.n) + 1)},
            r1_group(r1_maps(p, params.n))};
  }
  throw std::invalid_argument("unknown example id: " + id);
}

}  // namespace nilaut
