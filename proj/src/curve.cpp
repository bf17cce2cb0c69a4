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

#include "nilaut/curve.hpp"

#include <deque>
#include <map>
#include <optional>
#include <stdexcept>

#include "nilaut/arith.hpp"
#include "nilaut/errors.hpp"

namespace nilaut {

std::string QuadraticCurve::str() const {
  std::string lhs = y_name + "^2";
  if (s.is_one()) {
    lhs += " - " + y_name;
  } else if (!s.is_zero()) {
    lhs += " - (" + s.str(x_name) + ")*" + y_name;
  }
  return lhs + " = " + f.str(x_name);
}

CurvePtr make_curve(FieldPtr field, Poly s, Poly f, std::string x_name,
                    std::string y_name) {
  if (s.is_zero()) s = Poly(field);
  if (f.is_zero()) throw std::invalid_argument("curve needs nonzero f");
  auto c = std::make_shared<QuadraticCurve>();
  c->field = std::move(field);
  c->s = std::move(s);
  c->f = std::move(f);
  c->x_name = std::move(x_name);
  c->y_name = std::move(y_name);
  return c;
}

namespace {

RationalFunction rf(const CurvePtr&, const Poly& p) { return RationalFunction(p); }

RationalFunction zero_rf(const CurvePtr& c) {
  return RationalFunction::constant(c->field, Fq{0});
}

}  // namespace

ExtElement::ExtElement(CurvePtr curve, RationalFunction a, RationalFunction b)
    : curve_(std::move(curve)), a_(std::move(a)), b_(std::move(b)) {}

ExtElement ExtElement::constant(CurvePtr curve, Fq c) {
  auto a = RationalFunction::constant(curve->field, c);
  auto b = zero_rf(curve);
  return ExtElement(std::move(curve), std::move(a), std::move(b));
}

ExtElement ExtElement::from(CurvePtr curve, RationalFunction a) {
  auto b = zero_rf(curve);
  return ExtElement(std::move(curve), std::move(a), std::move(b));
}

ExtElement ExtElement::x(CurvePtr curve) {
  auto a = RationalFunction::x(curve->field);
  return from(std::move(curve), std::move(a));
}

ExtElement ExtElement::y(CurvePtr curve) {
  auto a = zero_rf(curve);
  auto b = RationalFunction::constant(curve->field, Fq{1});
  return ExtElement(std::move(curve), std::move(a), std::move(b));
}

ExtElement ExtElement::operator-() const { return ExtElement(curve_, -a_, -b_); }

ExtElement& ExtElement::operator+=(const ExtElement& o) {
  a_ += o.a_;
  b_ += o.b_;
  return *this;
}

ExtElement& ExtElement::operator-=(const ExtElement& o) {
  a_ -= o.a_;
  b_ -= o.b_;
  return *this;
}

ExtElement& ExtElement::operator*=(const ExtElement& o) {
  // (a1 + b1 y)(a2 + b2 y) with y^2 = s y + f.
  const RationalFunction bb = b_ * o.b_;
  RationalFunction a = a_ * o.a_ + bb * rf(curve_, curve_->f);
  RationalFunction b = a_ * o.b_ + b_ * o.a_ + bb * rf(curve_, curve_->s);
  a_ = std::move(a);
  b_ = std::move(b);
  return *this;
}

ExtElement& ExtElement::operator/=(const ExtElement& o) { return *this *= o.inverse(); }

RationalFunction ExtElement::norm() const {
  return a_ * a_ + a_ * b_ * rf(curve_, curve_->s) - b_ * b_ * rf(curve_, curve_->f);
}

ExtElement ExtElement::inverse() const {
  const RationalFunction n = norm();
  if (n.is_zero()) throw std::domain_error("inverse of zero in function field");
  // Conjugate of a + b y is (a + b s) - b y.
  const RationalFunction ninv = n.inverse();
  return ExtElement(curve_, (a_ + b_ * rf(curve_, curve_->s)) * ninv, -b_ * ninv);
}

ExtElement ExtElement::pow(std::int64_t e) const {
  if (e < 0) return inverse().pow(-e);
  ExtElement result = constant(curve_, Fq{1});
  ExtElement base = *this;
  while (e) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return result;
}

std::vector<std::uint32_t> ExtElement::key() const {
  auto k = a_.key();
  auto kb = b_.key();
  k.insert(k.end(), kb.begin(), kb.end());
  return k;
}

std::string ExtElement::str() const {
  const auto& xn = curve_->x_name;
  if (b_.is_zero()) return a_.str(xn);
  std::string bs = b_.str(xn);
  std::string term = bs == "1" ? curve_->y_name : "(" + bs + ")*" + curve_->y_name;
  if (a_.is_zero()) return term;
  return a_.str(xn) + " + " + term;
}

namespace {

ExtElement evaluate_poly(const Poly& p, const ExtElement& at) {
  const auto& c = at.curve();
  ExtElement r = ExtElement::constant(c, Fq{0});
  const auto& co = p.coeffs();
  for (std::size_t i = co.size(); i-- > 0;) {
    r *= at;
    r += ExtElement::constant(c, co[i]);
  }
  return r;
}

}  // namespace

ExtElement evaluate(const RationalFunction& r, const ExtElement& at) {
  ExtElement num = evaluate_poly(r.num(), at);
  if (r.is_polynomial()) return num;
  return num / evaluate_poly(r.den(), at);
}

std::vector<std::uint32_t> AutMap::key() const {
  auto k = image_x.key();
  auto ky = image_y.key();
  k.insert(k.end(), ky.begin(), ky.end());
  return k;
}

std::string AutMap::str() const {
  const auto& c = image_x.curve();
  return c->x_name + " -> " + image_x.str() + ", " + c->y_name + " -> " + image_y.str();
}

ExtElement defining_residue(const AutMap& m) {
  const auto& c = m.image_x.curve();
  const ExtElement s = evaluate(RationalFunction(c->s), m.image_x);
  const ExtElement f = evaluate(RationalFunction(c->f), m.image_x);
  return m.image_y * m.image_y - s * m.image_y - f;
}

AutMap make_aut(ExtElement image_x, ExtElement image_y) {
  if (image_x.curve() != image_y.curve()) {
    throw std::invalid_argument("images live on different curves");
  }
  AutMap m{std::move(image_x), std::move(image_y)};
  const ExtElement r = defining_residue(m);
  if (!r.is_zero()) {
    throw NotAnAutomorphism("not an automorphism: defining equation leaves residue " +
                            r.str());
  }
  // x must go to a transcendental element; a constant image is not injective.
  if (m.image_x.b().is_zero() && m.image_x.a().num().degree() <= 0 &&
      m.image_x.a().den().degree() <= 0) {
    throw NotAnAutomorphism("not an automorphism: image of x is constant");
  }
  return m;
}

AutMap identity_aut(const CurvePtr& curve) {
  return AutMap{ExtElement::x(curve), ExtElement::y(curve)};
}

ExtElement apply_aut(const AutMap& m, const ExtElement& e) {
  return evaluate(e.a(), m.image_x) + evaluate(e.b(), m.image_x) * m.image_y;
}

AutMap compose(const AutMap& m1, const AutMap& m2) {
  return AutMap{apply_aut(m1, m2.image_x), apply_aut(m1, m2.image_y)};
}

AutMap aut_pow(const AutMap& m, std::size_t e) {
  AutMap result = identity_aut(m.image_x.curve());
  for (std::size_t i = 0; i < e; ++i) result = compose(result, m);
  return result;
}

std::size_t aut_order(const AutMap& m, std::size_t cap) {
  const AutMap id = identity_aut(m.image_x.curve());
  AutMap cur = m;
  for (std::size_t k = 1; k <= cap; ++k) {
    if (cur == id) return k;
    cur = compose(cur, m);
  }
  throw CapExceeded("cap exceeded: order of map exceeds " + std::to_string(cap));
}

AutMap aut_inverse(const AutMap& m, std::size_t cap) {
  return aut_pow(m, aut_order(m, cap) - 1);
}

std::int64_t AutGroup::index_of(const AutMap& m) const {
  for (std::size_t i = 0; i < elements.size(); ++i) {
    if (elements[i] == m) return static_cast<std::int64_t>(i);
  }
  return -1;
}

AutGroup group_closure(const CurvePtr& curve, const std::vector<AutMap>& generators,
                       std::size_t cap) {
  std::vector<AutMap> elems{identity_aut(curve)};
  std::map<std::vector<std::uint32_t>, std::uint32_t> index;
  index.emplace(elems[0].key(), 0);
  std::deque<std::uint32_t> queue{0};
  while (!queue.empty()) {
    const std::uint32_t i = queue.front();
    queue.pop_front();
    for (const auto& g : generators) {
      AutMap h = compose(elems[i], g);
      auto k = h.key();
      if (index.count(k)) continue;
      if (elems.size() == cap) {
        throw CapExceeded("cap exceeded: closure has more than " + std::to_string(cap) +
                          " elements");
      }
      const auto id = static_cast<std::uint32_t>(elems.size());
      index.emplace(std::move(k), id);
      elems.push_back(std::move(h));
      queue.push_back(id);
    }
  }
  const std::size_t n = elems.size();
  std::vector<std::uint32_t> mul(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      auto it = index.find(compose(elems[a], elems[b]).key());
      // Closure under right multiplication by generators of a finite set of
      // invertible maps gives closure under composition.
      if (it == index.end()) throw std::logic_error("closure is not multiplicatively closed");
      mul[a * n + b] = it->second;
    }
  }
  return AutGroup{std::move(elems), CayleyTable(n, std::move(mul))};
}

namespace {

int r1_field_degree(int n) { return n % 2 ? 2 * n : 4 * n; }

struct R1Setup {
  FieldPtr field;
  std::int64_t pn;   // p^n
  std::int64_t deg;  // bound on deg Q, p^(n-1)
};

R1Setup r1_setup(std::int64_t p, int n) {
  if (!is_prime(p)) throw std::invalid_argument("p must be prime");
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  if (2 * n + 1 > 40 || ipow(p, 2 * n + 1) > kMaxR1Order) {
    throw TooLarge("instance too large: p^(2n+1) exceeds " + std::to_string(kMaxR1Order));
  }
  // Solving for Q top-down forces d^(p^(2n)) = (-1)^(n-1) d, so every
  // translation lies in F_{p^(2n)} for odd n and in F_{p^(4n)} for even n.
  const int k = r1_field_degree(n);
  if (k > 40 || ipow(p, k) > kMaxFieldSize) {
    throw TooLarge("instance too large: F_" + std::to_string(p) + "^" + std::to_string(k) +
                   " exceeds the field cap");
  }
  return {GaloisField::create(p, k), ipow(p, n), ipow(p, n - 1)};
}

// Non-constant part of Q, or nothing if the identity has no solution for d.
std::optional<Poly> r1_linear_part(const R1Setup& s, Fq d, Fq* constant) {
  const auto& F = s.field;
  const std::int64_t p = F->characteristic();
  const auto pn = static_cast<std::size_t>(s.pn);
  // (x + d)^(p^n + 1) - x^(p^n + 1) = d x^(p^n) + d^(p^n) x + d^(p^n + 1).
  std::vector<Fq> rc(pn + 1, Fq{0});
  rc[pn] = F->add(rc[pn], d);
  rc[1] = F->add(rc[1], F->pow(d, s.pn));
  rc[0] = F->pow(d, s.pn + 1);
  const Poly r(F, rc);

  const auto deg = static_cast<std::size_t>(s.deg);
  std::vector<Fq> q(deg + 1, Fq{0});
  for (std::size_t j = deg; j >= 1; --j) {
    const std::size_t jp = j * static_cast<std::size_t>(p);
    const Fq higher = jp <= deg ? q[jp] : Fq{0};
    q[j] = F->pth_root(F->sub(r.coeff(jp), higher));
  }
  Poly qp(F, q);
  Poly lhs = qp.pow(static_cast<std::size_t>(p)) + qp - r;
  for (std::size_t k = 1; k < lhs.coeffs().size(); ++k) {
    if (lhs.coeff(k) != Fq{0}) return std::nullopt;
  }
  *constant = F->neg(lhs.coeff(0));  // c^p + c must equal this
  return qp;
}

}  // namespace

R1Count count_r1_automorphisms(std::int64_t p, int n) {
  const R1Setup s = r1_setup(p, n);
  const auto& F = s.field;
  // Tabulate c -> c^p + c once, then count preimages.
  std::vector<std::uint32_t> hits(F->size(), 0);
  for (std::uint32_t i = 0; i < F->size(); ++i) {
    const Fq c = F->element(i);
    ++hits[F->add(F->frobenius(c), c).v];
  }
  R1Count out{p, n, F, 0, 0};
  for (std::uint32_t i = 0; i < F->size(); ++i) {
    Fq target;
    if (!r1_linear_part(s, F->element(i), &target)) continue;
    if (hits[target.v] == 0) continue;
    ++out.translations;
    out.count += hits[target.v];
  }
  return out;
}

std::vector<R1Map> r1_maps(std::int64_t p, int n) {
  const R1Setup s = r1_setup(p, n);
  const auto& F = s.field;
  std::vector<R1Map> out;
  for (std::uint32_t i = 0; i < F->size(); ++i) {
    const Fq d = F->element(i);
    Fq target;
    auto lin = r1_linear_part(s, d, &target);
    if (!lin) continue;
    for (std::uint32_t j = 0; j < F->size(); ++j) {
      const Fq c = F->element(j);
      if (F->add(F->frobenius(c), c) != target) continue;
      out.push_back({d, *lin + Poly::constant(F, c)});
    }
  }
  return out;
}

CayleyTable r1_group(const std::vector<R1Map>& maps) {
  const std::size_t n = maps.size();
  if (n == 0) throw std::invalid_argument("empty map list");
  if (n > kMaxTableOrder) throw TooLarge("group too large for a Cayley table");
  const auto& F = maps[0].q.field() ? maps[0].q.field() : maps.back().q.field();
  std::map<std::pair<std::uint32_t, std::vector<std::uint32_t>>, std::uint32_t> index;
  for (std::size_t i = 0; i < n; ++i) {
    index.emplace(std::make_pair(maps[i].d.v, maps[i].q.key()), static_cast<std::uint32_t>(i));
  }
  std::vector<std::uint32_t> mul(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    // (m1 after m2)(x) = x + d1 + d2, (m1 after m2)(y) = y + Q1(x) + Q2(x + d1).
    const Poly shift(F, {maps[a].d, F->one()});
    for (std::size_t b = 0; b < n; ++b) {
      const Fq d = F->add(maps[a].d, maps[b].d);
      const Poly q = maps[a].q + maps[b].q.compose(shift);
      auto it = index.find(std::make_pair(d.v, q.key()));
      if (it == index.end()) throw std::logic_error("r = 1 maps not closed under composition");
      mul[a * n + b] = it->second;
    }
  }
  return CayleyTable(n, std::move(mul));
}

}  // namespace nilaut
