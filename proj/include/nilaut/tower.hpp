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

// Towers of function fields over a rational base, built from rational-map
// steps and a final Kummer step, and their ramification.
//
// Places above a base place are tracked geometrically: a group of places
// with a common ramification index is described by a squarefree polynomial
// whose roots (over the algebraic closure) are the places. No root finding
// is needed, so the field only has to contain the base places of interest.

#ifndef NILAUT_TOWER_HPP
#define NILAUT_TOWER_HPP

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "nilaut/hurwitz.hpp"
#include "nilaut/poly.hpp"

namespace nilaut {

/// lower = num(upper) / den(upper).
struct RationalStep {
  Poly num;
  Poly den;
  std::string lower;
  std::string upper;

  std::int64_t degree() const;
  std::string str() const;
};

/// var^m = f(previous variable), with p not dividing m.
struct KummerStep {
  std::int64_t m = 2;
  Poly f;
  std::string var;

  std::string str(const std::string& below) const;
};

using TowerStep = std::variant<RationalStep, KummerStep>;

/// Steps listed from the base upward. A Kummer step may only come last.
struct Tower {
  FieldPtr field;
  std::string base;
  std::vector<TowerStep> steps;

  std::int64_t degree() const;
  /// Checks variable chaining, separability of rational steps, and that the
  /// Kummer step is irreducible and tame. Throws InconsistentTower.
  void validate() const;
  std::vector<std::string> describe() const;
};

/// A rational place: x = value, or the pole of x.
struct Place {
  bool infinite = false;
  Fq value;

  static Place at(Fq v) { return {false, v}; }
  static Place infinity() { return {true, Fq{0}}; }
  std::string label(const GaloisField& field, const std::string& var) const;
};

/// Geometric places over one base place sharing the index e (relative to
/// the base). For finite groups the places are the roots of `poly`.
struct PlaceGroup {
  bool infinite = false;
  Poly poly;
  std::int64_t count = 1;
  std::int64_t e = 1;
};

PlaceGroup place_group(const FieldPtr& field, const Place& p);

/// Places above `below` in the upper field of the step, with indices
/// multiplied into below.e. Multiplicities come from the squarefree
/// decomposition of the fiber polynomial; the pole is handled by degree
/// count. Throws InconsistentTower if the step's Fundamental Equality fails.
std::vector<PlaceGroup> rational_fiber_ramification(const RationalStep& step,
                                                    const PlaceGroup& below);

/// e = m / gcd(m, v_P(f)) with v_infinity(f) = deg den - deg num.
std::int64_t kummer_ramification(std::int64_t m, const RationalFunction& f,
                                 const Place& place);

/// lcm(e1, e2); requires one of them prime to p.
std::int64_t abhyankar_compose(std::int64_t e1, std::int64_t e2, Characteristic p);

struct Fiber {
  Place base;
  std::string label;
  std::vector<PlaceGroup> places;  // in the top field
  std::int64_t e = 1;              // common ramification index
  std::int64_t place_count() const;
  /// Sum of count * e over the fiber; equals the tower degree.
  std::int64_t degree_sum() const;
};

struct RamificationProfile {
  std::int64_t degree = 0;
  std::vector<Fiber> fibers;  // every rational base place, pole last

  /// Ramified fibers only.
  std::vector<const Fiber*> ramified() const;
  /// Sorted ramification indices of the ramified fibers.
  std::vector<std::int64_t> type() const;
  std::int64_t index_at(const Place& p) const;
};

/// Ramification over every base place in F_q and the pole. Asserts the
/// Fundamental Equality on every fiber and that indices agree within a
/// fiber, as they must for a Galois tower; throws InconsistentTower
/// otherwise.
RamificationProfile tower_type(const Tower& tower);

/// Genus of y^m = f(x) over K(x) for tame m, from the valuations of f.
/// Throws InconsistentTower if the extension is reducible.
std::int64_t kummer_genus(std::int64_t m, const Poly& f);

}  // namespace nilaut

#endif  // NILAUT_TOWER_HPP
