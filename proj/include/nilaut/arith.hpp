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

// Small-integer number theory used throughout: primality, factoring,
// prime parts. Magnitudes here never exceed a few million.

#ifndef NILAUT_ARITH_HPP
#define NILAUT_ARITH_HPP

#include <cstdint>
#include <vector>

namespace nilaut {

/// Deterministic trial division.
bool is_prime(std::int64_t n);

struct PrimePower {
  std::int64_t prime;
  int exponent;

  std::int64_t value() const;
  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// Factorization of n >= 1 in increasing prime order (empty for n = 1).
std::vector<PrimePower> factorize(std::int64_t n);

/// Distinct primes dividing n, increasing.
std::vector<std::int64_t> prime_divisors(std::int64_t n);

/// All positive divisors of n, increasing.
std::vector<std::int64_t> divisors(std::int64_t n);

/// Exponent of `prime` in n (n != 0).
int valuation(std::int64_t n, std::int64_t prime);

/// prime^valuation(n, prime).
std::int64_t prime_part(std::int64_t n, std::int64_t prime);

/// Integer power with overflow check (throws std::overflow_error).
std::int64_t ipow(std::int64_t base, int exp);

std::int64_t lcm(std::int64_t a, std::int64_t b);

}  // namespace nilaut

#endif  // NILAUT_ARITH_HPP
