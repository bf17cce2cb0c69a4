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

#include "nilaut/admissibility.hpp"

#include <algorithm>
#include <set>

#include "nilaut/arith.hpp"

namespace nilaut {
namespace {

std::set<std::int64_t> index_primes(const Signature& sig) {
  std::set<std::int64_t> out;
  for (auto e : sig.indices())
    for (auto l : prime_divisors(e)) out.insert(l);
  return out;
}

int count_divisible(const Signature& sig, std::int64_t l) {
  return static_cast<int>(std::count_if(sig.indices().begin(),
                                        sig.indices().end(),
                                        [l](auto e) { return e % l == 0; }));
}

}  // namespace

std::string rule_id(Rule r) {
  switch (r) {
    case Rule::kDivisibility:
      return "divisibility";
    case Rule::kPrimeSupport:
      return "prime-support";
    case Rule::kLonelyPrime:
      return "lonely-prime";
    case Rule::kTwoPlaceSaturation:
      return "two-place-saturation";
    case Rule::kUniqueWildSaturation:
      return "unique-wild-saturation";
  }
  return "unknown";
}

Verdict& Verdict::merge(const Verdict& other) {
  violations.insert(violations.end(), other.violations.begin(),
                    other.violations.end());
  conditional = conditional || other.conditional;
  return *this;
}

bool Verdict::fired(Rule r) const {
  return std::any_of(violations.begin(), violations.end(),
                     [r](const Violation& v) { return v.rule == r; });
}

Verdict check_prime_support(const Signature& sig) {
  Verdict v;
  if (!sig.order()) {
    v.conditional = true;
    return v;
  }
  const auto n = *sig.order();
  const auto from_indices = index_primes(sig);
  for (auto l : prime_divisors(n)) {
    if (!from_indices.count(l)) {
      v.violations.push_back(
          {Rule::kPrimeSupport, std::to_string(l) + " divides N=" +
                                    std::to_string(n) +
                                    " but no ramification index"});
    }
  }
  for (auto l : from_indices) {
    if (n % l != 0) {
      v.violations.push_back(
          {Rule::kPrimeSupport, std::to_string(l) +
                                    " divides a ramification index but not N=" +
                                    std::to_string(n)});
    }
  }
  return v;
}

Verdict check_lonely_prime(const Signature& sig) {
  Verdict v;
  const auto p = sig.characteristic().value();
  for (auto l : index_primes(sig)) {
    if (l != p && count_divisible(sig, l) == 1) {
      v.violations.push_back(
          {Rule::kLonelyPrime,
           std::to_string(l) + " divides exactly one index but p=" +
               std::to_string(p)});
    }
  }
  return v;
}

Verdict check_two_place_saturation(const Signature& sig) {
  Verdict v;
  if (!sig.order()) {
    v.conditional = true;
    return v;
  }
  const auto n = *sig.order();
  const auto p = sig.characteristic().value();
  for (const auto& pp : factorize(n)) {
    if (pp.prime == p || count_divisible(sig, pp.prime) != 2) continue;
    const auto full = pp.value();
    for (auto e : sig.indices()) {
      if (e % pp.prime == 0 && e % full != 0) {
        v.violations.push_back(
            {Rule::kTwoPlaceSaturation,
             std::to_string(pp.prime) + "-part " + std::to_string(full) +
                 " of N must divide index " + std::to_string(e)});
      }
    }
  }
  return v;
}

Verdict check_unique_wild_saturation(const Signature& sig) {
  Verdict v;
  const auto p = sig.characteristic();
  if (p.is_zero()) return v;
  if (!sig.order()) {
    v.conditional = true;
    return v;
  }
  const auto& idx = sig.indices();
  if (count_divisible(sig, p.value()) != 1) return v;
  const auto wild = *std::find_if(idx.begin(), idx.end(),
                                  [&](auto e) { return p.divides(e); });
  const auto need = prime_part(*sig.order(), p.value());
  const auto have = prime_part(wild, p.value());
  if (have != need) {
    v.violations.push_back(
        {Rule::kUniqueWildSaturation,
         "unique wild index " + std::to_string(wild) + " has p-part " +
             std::to_string(have) + " but N has p-part " +
             std::to_string(need)});
  }
  return v;
}

Verdict admissible(const Signature& sig) {
  Verdict v;
  if (sig.order()) {
    for (auto e : sig.indices()) {
      if (*sig.order() % e != 0) {
        v.violations.push_back({Rule::kDivisibility,
                                "index " + std::to_string(e) +
                                    " does not divide N"});
      }
    }
  }
  v.merge(check_prime_support(sig));
  v.merge(check_lonely_prime(sig));
  v.merge(check_two_place_saturation(sig));
  v.merge(check_unique_wild_saturation(sig));
  return v;
}

std::vector<std::int64_t> admissible_orders(const Signature& sig,
                                            std::int64_t max_order) {
  std::vector<std::int64_t> out;
  // A signature with no ramification has no nontrivial admissible order.
  if (sig.indices().empty()) return out;
  if (!check_lonely_prime(sig).admissible()) return out;
  std::int64_t base = 1;
  for (auto e : sig.indices()) base = lcm(base, e);
  if (base > max_order) return out;
  const auto primes = prime_divisors(base);
  // Multipliers m with primes(m) contained in primes(base), generated in
  // increasing order.
  std::set<std::int64_t> mults{1};
  std::vector<std::int64_t> frontier{1};
  while (!frontier.empty()) {
    std::vector<std::int64_t> next;
    for (auto m : frontier) {
      for (auto l : primes) {
        const auto x = m * l;
        if (base * x <= max_order && mults.insert(x).second) next.push_back(x);
      }
    }
    frontier = std::move(next);
  }
  for (auto m : mults) {
    const auto n = base * m;
    if (admissible(sig.with_order(n)).admissible()) out.push_back(n);
  }
  return out;
}

}  // namespace nilaut
