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

#include "nilaut/poly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace nilaut {

Poly::Poly(FieldPtr field, std::vector<Fq> coeffs)
    : field_(std::move(field)), c_(std::move(coeffs)) {
  trim();
}

Poly Poly::constant(FieldPtr field, Fq c) {
  return Poly(std::move(field), std::vector<Fq>{c});
}

Poly Poly::monomial(FieldPtr field, Fq c, std::size_t n) {
  std::vector<Fq> v(n + 1, Fq{0});
  v[n] = c;
  return Poly(std::move(field), std::move(v));
}

Poly Poly::from_ints(FieldPtr field, const std::vector<std::int64_t>& c) {
  std::vector<Fq> v;
  v.reserve(c.size());
  for (auto n : c) v.push_back(field->from_int(n));
  return Poly(std::move(field), std::move(v));
}

void Poly::trim() {
  while (!c_.empty() && c_.back() == Fq{0}) c_.pop_back();
}

void Poly::require_same_field(const Poly& o) const {
  if (field_ && o.field_ && field_ != o.field_) {
    throw std::invalid_argument("polynomials over different fields");
  }
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& a : r.c_) a = field_->neg(a);
  return r;
}

Poly& Poly::operator+=(const Poly& o) {
  require_same_field(o);
  if (!field_) field_ = o.field_;
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Fq{0});
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = field_->add(c_[i], o.c_[i]);
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) { return *this += -o; }

Poly& Poly::operator*=(const Poly& o) {
  require_same_field(o);
  if (!field_) field_ = o.field_;
  if (c_.empty() || o.c_.empty()) {
    c_.clear();
    return *this;
  }
  std::vector<Fq> r(c_.size() + o.c_.size() - 1, Fq{0});
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == Fq{0}) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j) {
      r[i + j] = field_->add(r[i + j], field_->mul(c_[i], o.c_[j]));
    }
  }
  c_ = std::move(r);
  trim();
  return *this;
}

Poly Poly::scaled(Fq c) const {
  Poly r = *this;
  for (auto& a : r.c_) a = field_->mul(a, c);
  r.trim();
  return r;
}

std::pair<Poly, Poly> Poly::divmod(const Poly& d) const {
  if (d.is_zero()) throw std::domain_error("polynomial division by zero");
  require_same_field(d);
  const auto& f = field_ ? field_ : d.field_;
  Poly rem(f, c_);
  if (rem.degree() < d.degree()) return {Poly(f), rem};
  std::vector<Fq> q(static_cast<std::size_t>(rem.degree() - d.degree() + 1), Fq{0});
  const Fq inv_lead = f->inv(d.leading());
  while (!rem.is_zero() && rem.degree() >= d.degree()) {
    const auto shift = static_cast<std::size_t>(rem.degree() - d.degree());
    const Fq factor = f->mul(rem.leading(), inv_lead);
    q[shift] = factor;
    for (std::size_t i = 0; i < d.c_.size(); ++i) {
      rem.c_[shift + i] = f->sub(rem.c_[shift + i], f->mul(factor, d.c_[i]));
    }
    rem.trim();
  }
  return {Poly(f, std::move(q)), rem};
}

Poly Poly::exact_div(const Poly& d) const {
  auto [q, r] = divmod(d);
  if (!r.is_zero()) throw std::domain_error("inexact polynomial division");
  return q;
}

Poly Poly::pow(std::size_t e) const {
  Poly result = constant(field_, Fq{1});
  Poly base = *this;
  while (e) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return result;
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  return scaled(field_->inv(leading()));
}

Poly Poly::derivative() const {
  if (c_.size() <= 1) return Poly(field_);
  std::vector<Fq> r(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) {
    r[i - 1] = field_->mul(field_->from_int(static_cast<std::int64_t>(i)), c_[i]);
  }
  return Poly(field_, std::move(r));
}

Fq Poly::eval(Fq a) const {
  Fq r{0};
  for (std::size_t i = c_.size(); i-- > 0;) r = field_->add(field_->mul(r, a), c_[i]);
  return r;
}

Poly Poly::compose(const Poly& inner) const {
  Poly r(field_);
  for (std::size_t i = c_.size(); i-- > 0;) {
    r *= inner;
    r += constant(field_, c_[i]);
  }
  return r;
}

Poly Poly::pth_root() const {
  const std::size_t p = field_->characteristic();
  std::vector<Fq> r;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == Fq{0}) continue;
    if (i % p != 0) throw std::domain_error("polynomial is not a p-th power");
    if (r.size() < i / p + 1) r.resize(i / p + 1, Fq{0});
    r[i / p] = field_->pth_root(c_[i]);
  }
  return Poly(field_, std::move(r));
}

std::vector<std::uint32_t> Poly::key() const {
  std::vector<std::uint32_t> k;
  k.reserve(c_.size() + 1);
  k.push_back(static_cast<std::uint32_t>(c_.size()));
  for (auto a : c_) k.push_back(a.v);
  return k;
}

std::string Poly::str(const std::string& var) const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = c_.size(); i-- > 0;) {
    if (c_[i] == Fq{0}) continue;
    if (!first) os << " + ";
    first = false;
    const std::string coef = field_->str(c_[i]);
    const bool compound = coef.find('+') != std::string::npos;
    if (i == 0 || coef != "1") os << (compound ? "(" + coef + ")" : coef);
    if (i >= 1) os << var;
    if (i > 1) os << '^' << i;
  }
  return os.str();
}

Poly gcd(const Poly& a, const Poly& b) {
  Poly x = a, y = b;
  while (!y.is_zero()) {
    Poly r = x.divmod(y).second;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

std::vector<std::pair<Poly, int>> squarefree_decomposition(const Poly& f) {
  if (f.is_zero()) throw std::invalid_argument("squarefree decomposition of zero");
  std::vector<std::pair<Poly, int>> out;
  Poly g = f.monic();
  if (g.degree() <= 0) return out;
  const int p = static_cast<int>(f.field()->characteristic());
  Poly c = gcd(g, g.derivative());
  Poly w = g.exact_div(c);
  for (int i = 1; !w.is_one(); ++i) {
    Poly y = gcd(w, c);
    Poly fac = w.exact_div(y);
    if (fac.degree() > 0) out.emplace_back(fac, i);
    w = std::move(y);
    c = c.exact_div(w);
  }
  if (!c.is_one()) {
    for (auto& [q, m] : squarefree_decomposition(c.pth_root())) {
      out.emplace_back(std::move(q), m * p);
    }
  }
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return a.second < b.second; });
  return out;
}

std::vector<std::pair<Fq, int>> roots_in_field(const Poly& f) {
  if (f.is_zero()) throw std::invalid_argument("roots of zero polynomial");
  std::vector<std::pair<Fq, int>> out;
  const auto& F = f.field();
  for (std::uint32_t i = 0; i < F->size(); ++i) {
    const Fq a = F->element(i);
    Poly rest = f;
    const Poly lin(F, {F->neg(a), F->one()});
    int m = 0;
    while (rest.degree() >= 1 && rest.eval(a) == Fq{0}) {
      rest = rest.exact_div(lin);
      ++m;
    }
    if (m) out.emplace_back(a, m);
  }
  return out;
}

RationalFunction::RationalFunction(Poly num)
    : num_(std::move(num)), den_(Poly::constant(num_.field(), Fq{1})) {}

RationalFunction::RationalFunction(Poly num, Poly den)
    : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::domain_error("rational function with zero denominator");
  normalize();
}

RationalFunction RationalFunction::constant(FieldPtr field, Fq c) {
  return RationalFunction(Poly::constant(std::move(field), c));
}

RationalFunction RationalFunction::x(FieldPtr field) {
  return RationalFunction(Poly::x(std::move(field)));
}

void RationalFunction::normalize() {
  const auto& F = den_.field();
  if (num_.is_zero()) {
    num_ = Poly(F);
    den_ = Poly::constant(F, Fq{1});
    return;
  }
  Poly g = gcd(num_, den_);
  if (!g.is_one()) {
    num_ = num_.exact_div(g);
    den_ = den_.exact_div(g);
  }
  const Fq lead = den_.leading();
  if (lead != Fq{1}) {
    const Fq inv = F->inv(lead);
    num_ = num_.scaled(inv);
    den_ = den_.scaled(inv);
  }
}

RationalFunction RationalFunction::operator-() const {
  RationalFunction r = *this;
  r.num_ = -r.num_;
  return r;
}

RationalFunction& RationalFunction::operator+=(const RationalFunction& o) {
  if (den_ == o.den_) {
    num_ += o.num_;
  } else {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ *= o.den_;
  }
  normalize();
  return *this;
}

RationalFunction& RationalFunction::operator-=(const RationalFunction& o) {
  return *this += -o;
}

RationalFunction& RationalFunction::operator*=(const RationalFunction& o) {
  num_ *= o.num_;
  den_ *= o.den_;
  normalize();
  return *this;
}

RationalFunction& RationalFunction::operator/=(const RationalFunction& o) {
  return *this *= o.inverse();
}

RationalFunction RationalFunction::inverse() const {
  if (num_.is_zero()) throw std::domain_error("inverse of zero rational function");
  return RationalFunction(den_, num_);
}

RationalFunction RationalFunction::pow(std::int64_t e) const {
  if (e < 0) return inverse().pow(-e);
  const auto ue = static_cast<std::size_t>(e);
  return RationalFunction(num_.pow(ue), den_.pow(ue));
}

int RationalFunction::valuation_at_infinity() const {
  if (num_.is_zero()) throw std::domain_error("valuation of zero");
  return den_.degree() - num_.degree();
}

std::vector<std::uint32_t> RationalFunction::key() const {
  auto k = num_.key();
  auto d = den_.key();
  k.insert(k.end(), d.begin(), d.end());
  return k;
}

std::string RationalFunction::str(const std::string& var) const {
  if (den_.is_one()) return num_.str(var);
  return "(" + num_.str(var) + ")/(" + den_.str(var) + ")";
}

}  // namespace nilaut
