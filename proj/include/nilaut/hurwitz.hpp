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

// Hurwitz genus formula for a Galois cover of degree N over a base of
// genus g0, with ramification data (e_i, d_i) per ramified base place:
//
//   2g - 2 = N * (2*g0 - 2 + sum_i d_i / e_i)
//
// together with the lower bound on different exponents of wildly ramified
// places.

#ifndef NILAUT_HURWITZ_HPP
#define NILAUT_HURWITZ_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "nilaut/rational.hpp"

namespace nilaut {

/// Characteristic of the constant field: 0 or a prime.
class Characteristic {
 public:
  /// Throws std::invalid_argument unless value is 0 or prime.
  explicit Characteristic(std::int64_t value = 0);

  static Characteristic zero() { return Characteristic(0); }

  std::int64_t value() const { return value_; }
  bool is_zero() const { return value_ == 0; }
  /// True iff p > 0 and p | n, i.e. ramification index n is wild.
  bool divides(std::int64_t n) const { return value_ != 0 && n % value_ == 0; }

  friend bool operator==(Characteristic, Characteristic) = default;
  friend auto operator<=>(Characteristic, Characteristic) = default;

 private:
  std::int64_t value_;
};

/// Smallest possible different exponent of a place with ramification index
/// e. Tame (p does not divide e): e - 1. Wild, e = p^t * n with gcd(p, n) = 1:
/// (e - 1) + n * (p^t - 1).
std::int64_t min_different_exponent(std::int64_t e, Characteristic p);

/// One ramified place of the base field.
///
/// The different exponent is either known exactly or absent; an absent
/// value is the explicit "unknown" marker consumed by back_solve_different.
struct RamifiedPlace {
  std::int64_t index = 2;
  std::optional<std::int64_t> different;
  bool wild = false;

  /// Validated constructor: e >= 2; wild iff p | e; d >= e - 1 with
  /// equality iff tame; wild places need d >= min_different_exponent.
  static RamifiedPlace make(std::int64_t e, std::int64_t d, Characteristic p);
  /// Tame place, d = e - 1. Throws if p | e.
  static RamifiedPlace tame(std::int64_t e, Characteristic p = Characteristic());
  /// d = min_different_exponent(e, p).
  static RamifiedPlace minimal(std::int64_t e, Characteristic p);
  /// Different exponent unknown.
  static RamifiedPlace unknown(std::int64_t e, Characteristic p);

  bool known() const { return different.has_value(); }
};

/// A ramification type (e_1 <= ... <= e_r) of a Galois cover of a base of
/// genus baseGenus, optionally with the group order N.
class Signature {
 public:
  /// Sorts the indices. Throws std::invalid_argument if an index is < 2,
  /// the order is < 2, or some index fails to divide the order.
  Signature(Characteristic p, std::vector<std::int64_t> indices,
            std::optional<std::int64_t> order = std::nullopt,
            std::int64_t base_genus = 0);

  Characteristic characteristic() const { return p_; }
  const std::vector<std::int64_t>& indices() const { return indices_; }
  std::optional<std::int64_t> order() const { return order_; }
  std::int64_t base_genus() const { return base_genus_; }
  std::size_t r() const { return indices_.size(); }

  Signature with_order(std::optional<std::int64_t> order) const;
  /// Places with minimal different exponents.
  std::vector<RamifiedPlace> minimal_places() const;
  /// "(2,4,8)@p=3" style text.
  std::string str() const;

  friend bool operator==(const Signature&, const Signature&) = default;

 private:
  Characteristic p_;
  std::vector<std::int64_t> indices_;
  std::optional<std::int64_t> order_;
  std::int64_t base_genus_;
};

enum class GenusStatus {
  kFeasible,       // integral genus >= 0
  kNegativeGenus,  // integral but g < 0, configuration impossible
  kNonIntegral,    // 2g - 2 not an even integer, configuration impossible
};

struct GenusResult {
  Rational two_g_minus_2;
  /// Present iff two_g_minus_2 is an even integer.
  std::optional<BigInt> genus;
  GenusStatus status = GenusStatus::kNonIntegral;

  bool feasible() const { return status == GenusStatus::kFeasible; }
  std::string status_text() const;
};

/// N * (2*g0 - 2 + sum d_i / e_i). Throws std::invalid_argument if order < 1
/// or any place has an unknown different exponent.
Rational hurwitz_two_g_minus_2(std::int64_t order, std::int64_t base_genus,
                               std::span<const RamifiedPlace> places);

GenusResult solve_genus(std::int64_t order, std::int64_t base_genus,
                        std::span<const RamifiedPlace> places);

/// Solves the Hurwitz formula for the single place whose different exponent
/// is unknown. Throws InconsistentTower if the solution is not an integer,
/// lies below min_different_exponent, or is not e - 1 at a tame place.
std::int64_t back_solve_different(std::int64_t order, std::int64_t base_genus,
                                  std::int64_t known_genus,
                                  std::span<const RamifiedPlace> places,
                                  Characteristic p);

}  // namespace nilaut

#endif  // NILAUT_HURWITZ_HPP
