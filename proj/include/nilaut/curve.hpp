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

// Quadratic function fields K(x)[y]/(y^2 - s(x) y - f(x)), their elements,
// automorphisms given by images of x and y, and finite groups of them.

#ifndef NILAUT_CURVE_HPP
#define NILAUT_CURVE_HPP

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "nilaut/group.hpp"
#include "nilaut/poly.hpp"

namespace nilaut {

/// y^2 = s(x) y + f(x). s = 0 gives the Kummer form y^2 = f(x).
struct QuadraticCurve {
  FieldPtr field;
  Poly s;
  Poly f;
  std::string x_name = "x";
  std::string y_name = "y";

  std::string str() const;
};
using CurvePtr = std::shared_ptr<const QuadraticCurve>;

CurvePtr make_curve(FieldPtr field, Poly s, Poly f, std::string x_name = "x",
                    std::string y_name = "y");

/// a + b y with a, b in K(x), kept in the normal form of degree <= 1 in y.
class ExtElement {
 public:
  ExtElement() = default;
  ExtElement(CurvePtr curve, RationalFunction a, RationalFunction b);

  static ExtElement constant(CurvePtr curve, Fq c);
  static ExtElement from(CurvePtr curve, RationalFunction a);
  static ExtElement x(CurvePtr curve);
  static ExtElement y(CurvePtr curve);

  const CurvePtr& curve() const { return curve_; }
  const RationalFunction& a() const { return a_; }
  const RationalFunction& b() const { return b_; }
  bool is_zero() const { return a_.is_zero() && b_.is_zero(); }

  ExtElement operator-() const;
  ExtElement& operator+=(const ExtElement& o);
  ExtElement& operator-=(const ExtElement& o);
  ExtElement& operator*=(const ExtElement& o);
  ExtElement& operator/=(const ExtElement& o);
  friend ExtElement operator+(ExtElement a, const ExtElement& b) { return a += b; }
  friend ExtElement operator-(ExtElement a, const ExtElement& b) { return a -= b; }
  friend ExtElement operator*(ExtElement a, const ExtElement& b) { return a *= b; }
  friend ExtElement operator/(ExtElement a, const ExtElement& b) { return a /= b; }

  /// a^2 + a b s - b^2 f, the norm down to K(x).
  RationalFunction norm() const;
  /// Throws std::domain_error on zero.
  ExtElement inverse() const;
  ExtElement pow(std::int64_t e) const;

  friend bool operator==(const ExtElement& u, const ExtElement& v) {
    return u.a_ == v.a_ && u.b_ == v.b_;
  }
  std::vector<std::uint32_t> key() const;
  std::string str() const;

 private:
  CurvePtr curve_;
  RationalFunction a_;
  RationalFunction b_;
};

/// Substitutes an element for x in a rational function.
ExtElement evaluate(const RationalFunction& r, const ExtElement& at);

/// K-automorphism determined by x -> image_x, y -> image_y.
struct AutMap {
  ExtElement image_x;
  ExtElement image_y;

  friend bool operator==(const AutMap&, const AutMap&) = default;
  std::vector<std::uint32_t> key() const;
  std::string str() const;
};

/// Builds the map and checks that it respects the defining equation;
/// throws NotAnAutomorphism otherwise.
AutMap make_aut(ExtElement image_x, ExtElement image_y);
AutMap identity_aut(const CurvePtr& curve);
/// Residue image_y^2 - s(image_x) image_y - f(image_x); zero for valid maps.
ExtElement defining_residue(const AutMap& m);

ExtElement apply_aut(const AutMap& m, const ExtElement& e);
/// m1 after m2: h -> m1(m2(h)).
AutMap compose(const AutMap& m1, const AutMap& m2);
AutMap aut_pow(const AutMap& m, std::size_t e);
/// Order of m; throws CapExceeded if it exceeds cap (which also rejects
/// non-invertible endomorphisms).
std::size_t aut_order(const AutMap& m, std::size_t cap = kMaxTableOrder);
/// m^(ord - 1).
AutMap aut_inverse(const AutMap& m, std::size_t cap = kMaxTableOrder);

struct AutGroup {
  std::vector<AutMap> elements;  // elements[0] is the identity
  CayleyTable table;
  std::size_t order() const { return elements.size(); }
  /// Index of m, or -1 if m is not in the group.
  std::int64_t index_of(const AutMap& m) const;
};

/// Breadth-first closure of the generators under composition; throws
/// CapExceeded("cap exceeded") once more than cap elements appear.
AutGroup group_closure(const CurvePtr& curve, const std::vector<AutMap>& generators,
                       std::size_t cap = kMaxTableOrder);

// Automorphisms x -> x + d, y -> y + Q(x) of y^p + y = x^(p^n + 1).

struct R1Map {
  Fq d;
  Poly q;
};

struct R1Count {
  std::int64_t p = 0;
  int n = 0;
  FieldPtr field;           // F_{p^{2n}} for odd n, F_{p^{4n}} for even n
  std::uint64_t count = 0;  // number of pairs (d, Q)
  std::uint64_t translations = 0;  // number of d admitting some Q
};

/// Largest p^(2n+1) accepted by the r = 1 routines.
inline constexpr std::int64_t kMaxR1Order = 1000000;

/// Counts pairs (d, Q) with p deg Q <= p^n and
/// Q^p + Q = (x + d)^(p^n + 1) - x^(p^n + 1). The non-constant part of Q is
/// forced coefficient by coefficient, which gives d^(p^(2n)) = (-1)^(n-1) d;
/// d therefore ranges over F_{p^{2n}} (n odd) or F_{p^{4n}} (n even). The
/// constant term is found by search in the same field. Throws TooLarge when
/// p^(2n+1) exceeds kMaxR1Order or the field exceeds kMaxFieldSize.
R1Count count_r1_automorphisms(std::int64_t p, int n);

/// All maps counted above, ordered by (d, Q).
std::vector<R1Map> r1_maps(std::int64_t p, int n);
/// Cayley table of the maps under composition; throws TooLarge above
/// kMaxTableOrder elements.
CayleyTable r1_group(const std::vector<R1Map>& maps);

}  // namespace nilaut

#endif  // NILAUT_CURVE_HPP
