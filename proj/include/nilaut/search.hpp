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

// Exhaustive search over ramification signatures.
//
// For a signature with minimal different exponents, write
//   B = 2*g0 - 2 + sum_i dmin_i / e_i.
// Any cover of that type has 2g - 2 >= N * B, so when B > 0 the ratio
// N / (g - 1) is at most 2 / B (the "ratio supremum"). The sweep enumerates
// nondecreasing index lists and prunes a subtree as soon as the tame
// completion of its prefix already has ratio below the threshold; because
// (e - 1)/e grows with e and wild places only raise d, that completion
// bounds every signature below the node.

#ifndef NILAUT_SEARCH_HPP
#define NILAUT_SEARCH_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "nilaut/hurwitz.hpp"
#include "nilaut/rational.hpp"

namespace nilaut {

struct OrderWitness {
  std::int64_t order;
  BigInt genus;
};

/// Best integral configuration for a signature whose minimal-different
/// bracket is <= 0 but which has a wild place: raising wild different
/// exponents can still give genus >= 2.
struct SlackWitness {
  std::int64_t order;
  BigInt genus;
  Rational ratio;  // order / (genus - 1)
  std::vector<std::int64_t> differents;
};

struct RatioReport {
  Signature signature;
  /// 2*g0 - 2 + sum dmin_i / e_i.
  Rational bracket;
  /// 2 / bracket when bracket > 0; absent marks an unbounded candidate.
  std::optional<Rational> ratio_sup;
  /// Smallest candidate order at which the minimal-different genus is an
  /// integer >= 2, and that genus.
  std::optional<OrderWitness> attained_by;
  std::vector<std::int64_t> orders;
  std::optional<SlackWitness> slack;
  bool extremal = false;

  bool unbounded_candidate() const { return !ratio_sup.has_value(); }
  std::optional<BigInt> minimal_genus() const;
};

/// Ratio report for a signature. `candidate_orders` are the group orders to
/// consider for the witness; when empty, sig.order() is used if present,
/// else every multiple of lcm(e_i) with the same prime support up to
/// kDefaultMaxOrder.
RatioReport ratio_sup(const Signature& sig,
                      std::vector<std::int64_t> candidate_orders = {});

inline constexpr std::int64_t kDefaultMaxOrder = std::int64_t{1} << 14;

struct SearchConfig {
  int r_min = 2;
  int r_max = 8;
  std::int64_t max_index = 64;
  std::vector<Characteristic> characteristics = {
      Characteristic(0), Characteristic(2), Characteristic(3),
      Characteristic(5), Characteristic(7)};
  std::int64_t max_order = kDefaultMaxOrder;
  /// Report signatures with ratio_sup >= threshold.
  Rational threshold = Rational(4);
  /// Worker threads; 0 picks the hardware concurrency.
  unsigned workers = 0;
  /// Abort with CapExceeded after this many leaves.
  std::uint64_t max_leaves = 50'000'000;

  void validate() const;
};

/// Part of the search space cut off by max_index: after `prefix`, the
/// remaining indices would exceed the cap. `tail_sup` bounds the ratio of
/// every signature in the cut-off part (tame completion at max_index + 1;
/// wild terms only shrink it) and `tail_limit` is the tame ratio as the
/// indices tend to infinity. Both are absent when the bracket can be <= 0.
/// Prefixes of the latter kind are merged per (r, p); `merged` counts them.
struct CoverageNote {
  Characteristic p;
  int r;
  std::vector<std::int64_t> prefix;
  std::optional<Rational> tail_sup;
  std::optional<Rational> tail_limit;
  std::size_t merged = 1;
  std::string text() const;
};

struct SweepStats {
  std::uint64_t nodes = 0;
  std::uint64_t leaves = 0;
  std::uint64_t pruned = 0;
  std::uint64_t inadmissible = 0;
};

struct SweepResult {
  /// Admissible signatures with ratio_sup >= threshold, ratio descending,
  /// ties by (r, indices, p).
  std::vector<RatioReport> reports;
  /// Admissible signatures whose bracket is <= 0, ordered by (r, indices, p).
  std::vector<RatioReport> unbounded;
  std::vector<CoverageNote> notes;
  SweepStats stats;
};

SweepResult sweep(const SearchConfig& config);

/// Strict weak order (r, indices, p) used for ties and extremal lists.
bool signature_less(const Signature& a, const Signature& b);

/// Bound c with N <= c (g - 1) for r ramified places, r >= 2.
Rational theorem_bound(int r);

struct Certificate {
  int r;
  Rational bound;
  std::vector<RatioReport> extremal;
  /// Signatures whose ratio_sup exceeds the bound.
  std::vector<RatioReport> violations;
  /// Unbounded candidates whose best integral witness exceeds the bound.
  std::vector<RatioReport> slack_violations;
  /// Truncated tails whose ratio bound exceeds the theorem bound.
  std::vector<CoverageNote> tail_violations;
  SweepResult sweep;

  bool holds() const { return violations.empty() && slack_violations.empty(); }
  bool holds_beyond_caps() const { return tail_violations.empty(); }
};

/// Sweeps exactly r ramified places (config's r range is overridden) with
/// threshold = theorem_bound(r).
Certificate theorem_certificate(int r, SearchConfig config);

/// floor(4 p g^2 / (p - 1)^2), the bound for a single ramified place.
BigInt r1_bound(std::int64_t p, std::int64_t g);
Rational r1_bound_exact(std::int64_t p, std::int64_t g);

/// Ratios of the family prefix + (base^s) for s = 1..max_exp, tame.
struct FamilyTail {
  std::vector<std::int64_t> exponents;
  std::vector<std::optional<Rational>> ratios;
  /// True iff the defined ratios are strictly decreasing in s.
  bool decreasing = false;
  std::optional<Rational> limit;
};
FamilyTail analyze_power_family(const std::vector<std::int64_t>& prefix,
                                std::int64_t base, int max_exp,
                                Characteristic p);

}  // namespace nilaut

#endif  // NILAUT_SEARCH_HPP
