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

// Necessary conditions for a signature (p, (e_1..e_r), N) to come from a
// Galois cover of the projective line whose group is nilpotent. Each check
// collects every violation it finds so callers can explain an exclusion.

#ifndef NILAUT_ADMISSIBILITY_HPP
#define NILAUT_ADMISSIBILITY_HPP

#include <string>
#include <vector>

#include "nilaut/group.hpp"
#include "nilaut/hurwitz.hpp"

namespace nilaut {

enum class Rule {
  kDivisibility,          // every e_i divides N
  kPrimeSupport,          // l | N  <=>  l | some e_i
  kLonelyPrime,           // a prime dividing exactly one e_i is p
  kTwoPlaceSaturation,    // l != p dividing exactly two e_i: l-part of N divides both
  kUniqueWildSaturation,  // unique wild index carries the full p-part of N
};

/// Stable kebab-case identifier used in reports and JSON.
std::string rule_id(Rule r);

struct Violation {
  Rule rule;
  std::string reason;
};

struct Verdict {
  std::vector<Violation> violations;
  /// Order-dependent checks were skipped because the order was absent.
  bool conditional = false;

  bool admissible() const { return violations.empty(); }
  /// Appends the other verdict's violations; conditional is sticky.
  Verdict& merge(const Verdict& other);
  bool fired(Rule r) const;
};

Verdict check_prime_support(const Signature& sig);
Verdict check_lonely_prime(const Signature& sig);
Verdict check_two_place_saturation(const Signature& sig);
Verdict check_unique_wild_saturation(const Signature& sig);

/// Conjunction of the four checks plus e_i | N.
Verdict admissible(const Signature& sig);

/// Group orders N <= max_order for which admissible(sig.with_order(N)) holds.
/// Candidates are the multiples of lcm(e_i) whose prime support equals that
/// of the indices; any other N already fails the prime-support check.
std::vector<std::int64_t> admissible_orders(const Signature& sig,
                                            std::int64_t max_order);

}  // namespace nilaut

#endif  // NILAUT_ADMISSIBILITY_HPP
