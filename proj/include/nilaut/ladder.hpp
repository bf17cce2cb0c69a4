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

// Genus/degree arithmetic of iterated maximal unramified elementary abelian
// 2-extensions: F_{n+1}/F_n is unramified of degree 2^{2 g_n}, so
//   g_{n+1} - 1 = 2^{2 g_n} (g_n - 1),   N_{n+1} = 2^{2 g_n} N_n.
// From the third level on the genus has billions of bits, so values are
// kept as mantissa * 2^exponent and only materialized when small.

#ifndef NILAUT_LADDER_HPP
#define NILAUT_LADDER_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "nilaut/rational.hpp"

namespace nilaut {

/// mantissa * 2^exponent, exponent >= 0.
struct ScaledPow2 {
  BigInt mantissa;
  BigInt exponent;

  /// Exact value if it fits in `max_bits` bits.
  std::optional<BigInt> value(std::size_t max_bits = 1u << 16) const;
  /// Decimal value when small, "m*2^k" otherwise.
  std::string str() const;
  friend bool operator==(const ScaledPow2&, const ScaledPow2&) = default;
};

struct LadderRow {
  std::size_t level;
  ScaledPow2 genus_minus_one;
  /// Degree over the base rational field.
  ScaledPow2 degree;

  std::optional<BigInt> genus() const;
};

/// Rows for levels 1..steps+1 seeded with genus g1 >= 2 and degree n1.
/// Throws TooLarge when a step needs a genus too large to materialize.
std::vector<LadderRow> genus_ladder(std::int64_t g1, std::int64_t n1,
                                    std::size_t steps);

/// N_n / (g_n - 1) for a row, exact.
Rational ladder_ratio(const LadderRow& row);

}  // namespace nilaut

#endif  // NILAUT_LADDER_HPP
