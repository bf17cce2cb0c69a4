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

#include "nilaut/tower.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "nilaut/arith.hpp"
#include "nilaut/errors.hpp"

namespace nilaut {
namespace {

// Multiplicity of the root a in p.
int root_multiplicity(const Poly& p, Fq a) {
  const auto& F = p.field();
  const Poly lin(F, {F->neg(a), F->one()});
  Poly rest = p;
  int m = 0;
  while (!rest.is_zero() && rest.degree() >= 1 && rest.eval(a) == Fq{0}) {
    rest = rest.exact_div(lin);
    ++m;
  }
  return m;
}

// P(num/den) * den^deg P for monic squarefree P.
Poly homogenize(const Poly& p, const Poly& num, const Poly& den) {
  const int k = p.degree();
  const auto& F = num.field();
  Poly h(F);
  for (int i = 0; i <= k; ++i) {
    const Fq c = p.coeff(static_cast<std::size_t>(i));
    if (c == Fq{0}) continue;
    h += (num.pow(static_cast<std::size_t>(i)) *
          den.pow(static_cast<std::size_t>(k - i))).scaled(c);
  }
  return h;
}

std::int64_t sum_count_e(const std::vector<PlaceGroup>& groups) {
  std::int64_t s = 0;
  for (const auto& g : groups) s += g.count * g.e;
  return s;
}

std::vector<PlaceGroup> kummer_fiber(const KummerStep& step, const PlaceGroup& below) {
  std::vector<PlaceGroup> out;
  const auto& F = step.f.field();
  auto add = [&](std::int64_t count_below, std::int64_t v) {
    const std::int64_t g = std::gcd(step.m, v < 0 ? -v : v);
    out.push_back({false, Poly(F), count_below * g, below.e * (step.m / g)});
  };
  if (below.infinite) {
    add(1, -static_cast<std::int64_t>(step.f.degree()));
    return out;
  }
  // Split the roots of below.poly by their valuation in f.
  Poly rest = below.poly;
  for (const auto& [s, j] : squarefree_decomposition(step.f)) {
    const Poly g = gcd(rest, s);
    if (g.degree() > 0) {
      add(g.degree(), j);
      rest = rest.exact_div(g);
    }
  }
  if (rest.degree() > 0) add(rest.degree(), 0);
  return out;
}

std::vector<PlaceGroup> step_fiber(const TowerStep& step, const PlaceGroup& below) {
  if (const auto* r = std::get_if<RationalStep>(&step)) {
    return rational_fiber_ramification(*r, below);
  }
  return kummer_fiber(std::get<KummerStep>(step), below);
}

}  // namespace

std::int64_t RationalStep::degree() const { return std::max(num.degree(), den.degree()); }

std::string RationalStep::str() const {
  if (den.is_one()) return lower + " = " + num.str(upper);
  return lower + " = (" + num.str(upper) + ")/(" + den.str(upper) + ")";
}

std::string KummerStep::str(const std::string& below) const {
  return var + "^" + std::to_string(m) + " = " + f.str(below);
}

std::int64_t Tower::degree() const {
  std::int64_t d = 1;
  for (const auto& s : steps) {
    if (const auto* r = std::get_if<RationalStep>(&s)) {
      d *= r->degree();
    } else {
      d *= std::get<KummerStep>(s).m;
    }
  }
  return d;
}

void Tower::validate() const {
  if (!field) throw InconsistentTower("tower has no field");
  std::string var = base;
  for (std::size_t i = 0; i < steps.size(); ++i) {
    if (const auto* r = std::get_if<RationalStep>(&steps[i])) {
      if (r->lower != var) {
        throw InconsistentTower("step " + std::to_string(i) + " does not start at " + var);
      }
      if (r->den.is_zero() || r->degree() < 1) {
        throw InconsistentTower("rational step " + r->str() + " is degenerate");
      }
      if (!gcd(r->num, r->den).is_one()) {
        throw InconsistentTower("rational step " + r->str() + " is not reduced");
      }
      const Poly wronskian = r->num.derivative() * r->den - r->num * r->den.derivative();
      if (wronskian.is_zero()) {
        throw InconsistentTower("rational step " + r->str() + " is inseparable");
      }
      var = r->upper;
    } else {
      const auto& k = std::get<KummerStep>(steps[i]);
      if (i + 1 != steps.size()) throw InconsistentTower("Kummer step must be the last step");
      if (k.m < 2 || Characteristic(field->characteristic()).divides(k.m)) {
        throw InconsistentTower("Kummer exponent must be >= 2 and prime to p");
      }
      if (k.f.degree() < 1) throw InconsistentTower("Kummer step needs nonconstant f");
      std::int64_t g = k.m;
      for (const auto& [s, j] : squarefree_decomposition(k.f)) g = std::gcd(g, std::int64_t{j});
      if (g != 1) throw InconsistentTower("Kummer step " + k.str(var) + " is reducible");
    }
  }
}

std::vector<std::string> Tower::describe() const {
  std::vector<std::string> out;
  std::string var = base;
  for (const auto& s : steps) {
    if (const auto* r = std::get_if<RationalStep>(&s)) {
      out.push_back(r->str());
      var = r->upper;
    } else {
      out.push_back(std::get<KummerStep>(s).str(var));
    }
  }
  return out;
}

std::string Place::label(const GaloisField& field, const std::string& var) const {
  return var + "=" + (infinite ? std::string("inf") : field.str(value));
}

PlaceGroup place_group(const FieldPtr& field, const Place& p) {
  if (p.infinite) return {true, Poly(field), 1, 1};
  return {false, Poly(field, {field->neg(p.value), field->one()}), 1, 1};
}

std::vector<PlaceGroup> rational_fiber_ramification(const RationalStep& step,
                                                    const PlaceGroup& below) {
  const std::int64_t d = step.degree();
  std::vector<PlaceGroup> out;
  Poly h;
  std::int64_t expected;
  if (below.infinite) {
    h = step.den;
    expected = d;
    if (step.num.degree() > step.den.degree()) {
      out.push_back({true, Poly(step.num.field()), 1,
                     below.e * (step.num.degree() - step.den.degree())});
    }
  } else {
    h = homogenize(below.poly, step.num, step.den);
    expected = d * below.poly.degree();
    const std::int64_t drop = expected - h.degree();
    if (drop > 0) out.push_back({true, Poly(step.num.field()), 1, below.e * drop});
  }
  if (h.degree() > 0) {
    for (auto& [q, m] : squarefree_decomposition(h)) {
      const std::int64_t count = q.degree();
      out.push_back({false, std::move(q), count, below.e * m});
    }
  }
  std::int64_t sum = 0;
  for (const auto& g : out) sum += g.count * (g.e / below.e);
  if (sum != expected) {
    throw InconsistentTower("fundamental equality fails in step " + step.str() + ": " +
                            std::to_string(sum) + " != " + std::to_string(expected));
  }
  return out;
}

std::int64_t kummer_ramification(std::int64_t m, const RationalFunction& f,
                                 const Place& place) {
  if (m < 1) throw std::invalid_argument("Kummer exponent must be positive");
  if (f.is_zero()) throw std::invalid_argument("Kummer step needs nonzero f");
  std::int64_t v;
  if (place.infinite) {
    v = f.valuation_at_infinity();
  } else {
    v = root_multiplicity(f.num(), place.value) - root_multiplicity(f.den(), place.value);
  }
  return m / std::gcd(m, v < 0 ? -v : v);
}

std::int64_t abhyankar_compose(std::int64_t e1, std::int64_t e2, Characteristic p) {
  if (e1 < 1 || e2 < 1) throw std::invalid_argument("ramification indices must be positive");
  if (p.divides(e1) && p.divides(e2)) {
    throw std::invalid_argument("Abhyankar's lemma needs one index prime to p");
  }
  return lcm(e1, e2);
}

std::int64_t Fiber::place_count() const {
  std::int64_t n = 0;
  for (const auto& g : places) n += g.count;
  return n;
}

std::int64_t Fiber::degree_sum() const { return sum_count_e(places); }

std::vector<const Fiber*> RamificationProfile::ramified() const {
  std::vector<const Fiber*> out;
  for (const auto& f : fibers) {
    if (f.e > 1) out.push_back(&f);
  }
  return out;
}

std::vector<std::int64_t> RamificationProfile::type() const {
  std::vector<std::int64_t> t;
  for (const auto* f : ramified()) t.push_back(f->e);
  std::sort(t.begin(), t.end());
  return t;
}

std::int64_t RamificationProfile::index_at(const Place& p) const {
  for (const auto& f : fibers) {
    if (f.base.infinite == p.infinite && (p.infinite || f.base.value == p.value)) return f.e;
  }
  throw std::invalid_argument("place not in profile");
}

RamificationProfile tower_type(const Tower& tower) {
  tower.validate();
  RamificationProfile prof;
  prof.degree = tower.degree();
  const auto& F = tower.field;
  std::vector<Place> base_places;
  for (std::uint32_t i = 0; i < F->size(); ++i) base_places.push_back(Place::at(F->element(i)));
  base_places.push_back(Place::infinity());

  for (const auto& bp : base_places) {
    std::vector<PlaceGroup> level{place_group(F, bp)};
    for (const auto& step : tower.steps) {
      std::vector<PlaceGroup> next;
      for (const auto& g : level) {
        auto up = step_fiber(step, g);
        next.insert(next.end(), up.begin(), up.end());
      }
      level = std::move(next);
    }
    Fiber fib{bp, bp.label(*F, tower.base), std::move(level), 0};
    const std::int64_t sum = fib.degree_sum();
    if (sum != prof.degree) {
      throw InconsistentTower("fundamental equality fails over " + fib.label + ": " +
                              std::to_string(sum) + " != " + std::to_string(prof.degree));
    }
    fib.e = fib.places.front().e;
    for (const auto& g : fib.places) {
      if (g.e != fib.e) {
        throw InconsistentTower("ramification indices differ over " + fib.label +
                                "; tower is not Galois");
      }
    }
    prof.fibers.push_back(std::move(fib));
  }
  return prof;
}

std::int64_t kummer_genus(std::int64_t m, const Poly& f) {
  if (m < 2) throw std::invalid_argument("Kummer exponent must be >= 2");
  if (Characteristic(f.field()->characteristic()).divides(m)) {
    throw std::invalid_argument("Kummer exponent must be prime to p");
  }
  if (f.degree() < 1) throw InconsistentTower("Kummer step needs nonconstant f");
  // 2g - 2 = -2m + sum over places of (m - gcd(m, v_P(f))).
  std::int64_t two_g_minus_2 = -2 * m;
  std::int64_t g_all = m;
  for (const auto& [s, j] : squarefree_decomposition(f)) {
    two_g_minus_2 += s.degree() * (m - std::gcd(m, std::int64_t{j}));
    g_all = std::gcd(g_all, std::int64_t{j});
  }
  if (g_all != 1) throw InconsistentTower("Kummer extension is reducible");
  two_g_minus_2 += m - std::gcd(m, std::int64_t{f.degree()});
  if (two_g_minus_2 % 2 != 0) throw InconsistentTower("Kummer genus is not integral");
  return two_g_minus_2 / 2 + 1;
}

}  // namespace nilaut
