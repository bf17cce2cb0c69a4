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

// Small finite fields F_{p^k} with table-driven multiplication.
//
// An element is stored as the integer sum c_i p^i of the coefficients of its
// residue modulo a fixed monic irreducible polynomial of degree k.

#ifndef NILAUT_GALOIS_FIELD_HPP
#define NILAUT_GALOIS_FIELD_HPP

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace nilaut {

/// Largest field size accepted; keeps the log tables small.
inline constexpr std::uint32_t kMaxFieldSize = 1u << 20;

struct Fq {
  std::uint32_t v = 0;
  friend bool operator==(Fq, Fq) = default;
  friend auto operator<=>(Fq, Fq) = default;
};

class GaloisField;
using FieldPtr = std::shared_ptr<const GaloisField>;

class GaloisField {
 public:
  /// F_{p^k} with the least monic irreducible modulus in the order where
  /// x^k + sum c_i x^i is ranked by the integer sum c_i p^i.
  static FieldPtr create(std::int64_t p, int k);

  /// Smallest F_{p^k'} with k' >= k_min whose multiplicative group contains
  /// primitive root_order-th roots of unity. Needs gcd(root_order, p) = 1.
  static FieldPtr with_roots_of_unity(std::int64_t p, int k_min,
                                      std::int64_t root_order);

  std::uint32_t characteristic() const { return p_; }
  int degree() const { return k_; }
  std::uint32_t size() const { return q_; }
  /// Coefficients of the modulus, low degree first, monic.
  const std::vector<std::uint32_t>& modulus() const { return modulus_; }

  Fq zero() const { return {0}; }
  Fq one() const { return {1}; }
  /// Image of an integer under Z -> F_p.
  Fq from_int(std::int64_t n) const;
  /// The residue class of x (the field generator over F_p); for k = 1 this
  /// is the integer 0 and should not be used as a generator.
  Fq generator() const { return {k_ > 1 ? p_ : 0}; }
  /// Fixed primitive element (multiplicative generator).
  Fq primitive() const { return {exp_[1]}; }
  /// Element with value index i, for iterating over the field.
  Fq element(std::uint32_t i) const { return {i}; }

  Fq add(Fq a, Fq b) const;
  Fq sub(Fq a, Fq b) const;
  Fq neg(Fq a) const;
  Fq mul(Fq a, Fq b) const;
  /// Throws std::domain_error on zero.
  Fq inv(Fq a) const;
  Fq div(Fq a, Fq b) const { return mul(a, inv(b)); }
  Fq pow(Fq a, std::int64_t e) const;
  Fq frobenius(Fq a) const { return pow(a, p_); }
  /// Unique b with b^p = a.
  Fq pth_root(Fq a) const;
  /// Multiplicative order of a nonzero element.
  std::uint64_t mult_order(Fq a) const;
  /// primitive()^((q-1)/m); throws unless m | q - 1.
  Fq primitive_root_of_unity(std::int64_t m) const;
  /// One square root, or throws std::domain_error if a is a non-square.
  Fq sqrt(Fq a) const;

  std::string str(Fq a) const;
  std::string describe() const;

 private:
  GaloisField(std::uint32_t p, int k, std::vector<std::uint32_t> modulus);

  std::uint32_t p_;
  int k_;
  std::uint32_t q_;
  std::vector<std::uint32_t> modulus_;
  std::vector<std::uint32_t> pow_p_;  // p^i for i < k
  std::vector<std::uint32_t> exp_;    // exp_[i] = g^i, length 2(q-1)
  std::vector<std::uint32_t> log_;    // log_[a] for a != 0
};

/// Smallest F_{p^k'} with k' >= k containing primitive root_order-th roots
/// of unity; same as GaloisField::with_roots_of_unity.
inline FieldPtr fq_construct(std::int64_t p, int k, std::int64_t root_order) {
  return GaloisField::with_roots_of_unity(p, k, root_order);
}

}  // namespace nilaut

#endif  // NILAUT_GALOIS_FIELD_HPP
