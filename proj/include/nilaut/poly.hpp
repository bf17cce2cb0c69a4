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

// Univariate polynomials and rational functions over a GaloisField.

#ifndef NILAUT_POLY_HPP
#define NILAUT_POLY_HPP

#include <string>
#include <utility>
#include <vector>

#include "nilaut/galois_field.hpp"

namespace nilaut {

class Poly {
 public:
  Poly() = default;
  explicit Poly(FieldPtr field) : field_(std::move(field)) {}
  /// Coefficients low degree first; trailing zeros are dropped.
  Poly(FieldPtr field, std::vector<Fq> coeffs);

  static Poly constant(FieldPtr field, Fq c);
  /// c * x^n.
  static Poly monomial(FieldPtr field, Fq c, std::size_t n);
  static Poly x(FieldPtr field) { return monomial(field, {1}, 1); }
  /// From integer coefficients mapped into F_p, low degree first.
  static Poly from_ints(FieldPtr field, const std::vector<std::int64_t>& c);

  const FieldPtr& field() const { return field_; }
  const std::vector<Fq>& coeffs() const { return c_; }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  bool is_one() const { return c_.size() == 1 && c_[0] == Fq{1}; }
  Fq coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Fq{0}; }
  Fq leading() const { return c_.empty() ? Fq{0} : c_.back(); }

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(Poly a, const Poly& b) { return a *= b; }
  Poly scaled(Fq c) const;

  /// Quotient and remainder; throws std::domain_error on a zero divisor.
  std::pair<Poly, Poly> divmod(const Poly& d) const;
  /// Exact division; throws std::domain_error if the remainder is nonzero.
  Poly exact_div(const Poly& d) const;
  Poly pow(std::size_t e) const;
  Poly monic() const;
  Poly derivative() const;
  Fq eval(Fq a) const;
  /// Substitutes x -> inner.
  Poly compose(const Poly& inner) const;
  /// Inverse of the Frobenius on coefficients for a p-th power
  /// sum a_{jp} x^{jp}; throws if some exponent is not a multiple of p.
  Poly pth_root() const;

  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

  /// Key for ordered containers.
  std::vector<std::uint32_t> key() const;
  std::string str(const std::string& var = "x") const;

 private:
  void trim();
  void require_same_field(const Poly& o) const;

  FieldPtr field_;
  std::vector<Fq> c_;
};

/// Monic gcd (zero only if both inputs are zero).
Poly gcd(const Poly& a, const Poly& b);

/// Squarefree decomposition f = lc * prod_i P_i^{m_i} with P_i squarefree,
/// monic, pairwise coprime. Valid in characteristic p (handles p-th power
/// parts). Each entry is (P_i, m_i), multiplicities increasing.
std::vector<std::pair<Poly, int>> squarefree_decomposition(const Poly& f);

/// Roots lying in the ground field with multiplicity, by exhaustive search.
std::vector<std::pair<Fq, int>> roots_in_field(const Poly& f);

/// num / den with gcd(num, den) = 1 and den monic.
class RationalFunction {
 public:
  RationalFunction() = default;
  explicit RationalFunction(Poly num);
  RationalFunction(Poly num, Poly den);

  static RationalFunction constant(FieldPtr field, Fq c);
  static RationalFunction x(FieldPtr field);

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  const FieldPtr& field() const { return num_.field(); }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.is_one(); }

  RationalFunction operator-() const;
  RationalFunction& operator+=(const RationalFunction& o);
  RationalFunction& operator-=(const RationalFunction& o);
  RationalFunction& operator*=(const RationalFunction& o);
  RationalFunction& operator/=(const RationalFunction& o);
  friend RationalFunction operator+(RationalFunction a, const RationalFunction& b) { return a += b; }
  friend RationalFunction operator-(RationalFunction a, const RationalFunction& b) { return a -= b; }
  friend RationalFunction operator*(RationalFunction a, const RationalFunction& b) { return a *= b; }
  friend RationalFunction operator/(RationalFunction a, const RationalFunction& b) { return a /= b; }
  RationalFunction inverse() const;
  RationalFunction pow(std::int64_t e) const;

  /// Valuation at the infinite place: deg den - deg num.
  int valuation_at_infinity() const;

  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  std::vector<std::uint32_t> key() const;
  std::string str(const std::string& var = "x") const;

 private:
  void normalize();
  Poly num_;
  Poly den_;
};

}  // namespace nilaut

#endif  // NILAUT_POLY_HPP
