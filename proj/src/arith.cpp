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

#include "nilaut/arith.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace nilaut {

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  if (n < 4) return true;
  if (n % 2 == 0) return false;
  for (std::int64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

std::int64_t PrimePower::value() const { return ipow(prime, exponent); }

std::vector<PrimePower> factorize(std::int64_t n) {
  if (n < 1) throw std::invalid_argument("factorize: n must be positive");
  std::vector<PrimePower> out;
  for (std::int64_t d = 2; d * d <= n; ++d) {
    if (n % d != 0) continue;
    int e = 0;
    while (n % d == 0) {
      n /= d;
      ++e;
    }
    out.push_back({d, e});
  }
  if (n > 1) out.push_back({n, 1});
  return out;
}

std::vector<std::int64_t> prime_divisors(std::int64_t n) {
  std::vector<std::int64_t> out;
  for (const auto& pp : factorize(n)) out.push_back(pp.prime);
  return out;
}

std::vector<std::int64_t> divisors(std::int64_t n) {
  std::vector<std::int64_t> out{1};
  for (const auto& pp : factorize(n)) {
    const std::size_t base = out.size();
    std::int64_t mult = 1;
    for (int i = 0; i < pp.exponent; ++i) {
      mult *= pp.prime;
      for (std::size_t j = 0; j < base; ++j) out.push_back(out[j] * mult);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

int valuation(std::int64_t n, std::int64_t prime) {
  if (n == 0) throw std::invalid_argument("valuation of zero");
  int v = 0;
  while (n % prime == 0) {
    n /= prime;
    ++v;
  }
  return v;
}

std::int64_t prime_part(std::int64_t n, std::int64_t prime) {
  return ipow(prime, valuation(n, prime));
}

std::int64_t ipow(std::int64_t base, int exp) {
  std::int64_t r = 1;
  for (int i = 0; i < exp; ++i) {
    if (base != 0 && std::abs(r) > std::numeric_limits<std::int64_t>::max() /
                                        std::abs(base)) {
      throw std::overflow_error("ipow overflow");
    }
    r *= base;
  }
  return r;
}

std::int64_t lcm(std::int64_t a, std::int64_t b) { return std::lcm(a, b); }

}  // namespace nilaut
