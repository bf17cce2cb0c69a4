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

// The extremal curve families, constructed over a finite field and checked
// claim by claim.
//
//   r3-kummer  y^2 = x(x^4 - 1) over K(t), t = (z^2 + 1)/(2z), z = x^4
//   r4-kummer  the same curve over K(w), w^2 = t - 1
//   r2-p2      y^2 - y = x^5 over K(z), z = x^5, characteristic 2
//   r2-p5      y^5 - y = x^2 over K(z), z = x^2, characteristic 5
//   r1         y^p + y = x^(p^n + 1), parameters p and n

#ifndef NILAUT_EXAMPLES_HPP
#define NILAUT_EXAMPLES_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "nilaut/curve.hpp"
#include "nilaut/group.hpp"
#include "nilaut/tower.hpp"

namespace nilaut {

struct ExampleParams {
  /// Characteristic for r3-kummer / r4-kummer (odd, default 3) and r1
  /// (default 5). Ignored by the r2 examples, whose characteristic is fixed.
  std::optional<std::int64_t> p;
  /// Exponent n for r1 (default 1).
  int n = 1;
};

struct Relation {
  std::string lhs;
  std::string rhs;
  bool holds = false;
};

struct ExampleReport {
  std::string example_id;
  std::int64_t field_p = 0;
  int field_k = 0;
  std::string field_description;
  std::vector<std::string> tower;
  std::int64_t genus = 0;
  std::vector<std::int64_t> type;
  std::int64_t order = 0;
  std::string bound;  // e.g. "16(g-1)"
  bool equality = false;
  std::vector<Relation> relations;
  std::vector<std::string> notes;

  bool verified() const;
  /// First relation that fails, if any.
  const Relation* first_failure() const;
};

std::vector<std::string> example_ids();

/// Builds the example and evaluates every claim. Failed claims are recorded
/// as relations with holds = false; errors during construction propagate.
ExampleReport verify_example(const std::string& id, const ExampleParams& params = {});

/// Throws ClaimMismatch naming the first failed relation.
void require_verified(const ExampleReport& report);

struct ExampleGroup {
  std::string example_id;
  std::vector<std::string> generators;
  CayleyTable table;
};

/// The automorphism group attached to an example: the closure of the named
/// generators (r3, r2), the stabilizer of w (r4), or the r = 1 maps.
ExampleGroup example_group(const std::string& id, const ExampleParams& params = {});

}  // namespace nilaut

#endif  // NILAUT_EXAMPLES_HPP
