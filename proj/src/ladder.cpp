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

#include "nilaut/ladder.hpp"

#include <stdexcept>

#include "nilaut/errors.hpp"

namespace nilaut {

std::optional<BigInt> ScaledPow2::value(std::size_t max_bits) const {
  if (exponent > BigInt(max_bits)) return std::nullopt;
  const auto shift = static_cast<unsigned>(exponent);
  if (mantissa != 0 && boost::multiprecision::msb(mantissa) + shift >= max_bits)
    return std::nullopt;
  return BigInt(mantissa << shift);
}

std::string ScaledPow2::str() const {
  if (auto v = value(256)) return v->str();
  return mantissa.str() + "*2^" + exponent.str();
}

std::optional<BigInt> LadderRow::genus() const {
  auto v = genus_minus_one.value();
  if (!v) return std::nullopt;
  return *v + 1;
}

std::vector<LadderRow> genus_ladder(std::int64_t g1, std::int64_t n1,
                                    std::size_t steps) {
  if (g1 < 2) throw std::invalid_argument("ladder needs g1 >= 2");
  if (n1 < 1) throw std::invalid_argument("ladder needs degree >= 1");
  std::vector<LadderRow> rows;
  rows.push_back({1, {BigInt(g1 - 1), 0}, {BigInt(n1), 0}});
  for (std::size_t s = 0; s < steps; ++s) {
    const LadderRow& cur = rows.back();
    auto g = cur.genus();
    if (!g) {
      throw TooLarge("genus at level " + std::to_string(cur.level) +
                     " is too large to take another step");
    }
    const BigInt step_exp = 2 * *g;  // [F_{n+1} : F_n] = 2^{2 g_n}
    LadderRow next{cur.level + 1,
                   {cur.genus_minus_one.mantissa,
                    cur.genus_minus_one.exponent + step_exp},
                   {cur.degree.mantissa, cur.degree.exponent + step_exp}};
    rows.push_back(std::move(next));
  }
  return rows;
}

Rational ladder_ratio(const LadderRow& row) {
  // Shared powers of two cancel; only the exponent difference matters.
  const BigInt diff = row.degree.exponent - row.genus_minus_one.exponent;
  Rational r(row.degree.mantissa, row.genus_minus_one.mantissa);
  if (diff == 0) return r;
  if (diff > 4096 || diff < -4096) {
    throw TooLarge("ladder ratio exponent difference too large");
  }
  const BigInt two_pow = BigInt(1) << static_cast<unsigned>(diff < 0 ? -diff : diff);
  return diff > 0 ? r * Rational(two_pow) : r / Rational(two_pow);
}

}  // namespace nilaut
