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

#include "nilaut/hurwitz.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "nilaut/arith.hpp"
#include "nilaut/errors.hpp"

namespace nilaut {

Characteristic::Characteristic(std::int64_t value) : value_(value) {
  if (value != 0 && !is_prime(value)) {
    throw std::invalid_argument("characteristic must be 0 or a prime, got " +
                                std::to_string(value));
  }
}

std::int64_t min_different_exponent(std::int64_t e, Characteristic p) {
  if (e < 2) throw std::invalid_argument("ramification index must be >= 2");
  if (!p.divides(e)) return e - 1;
  const std::int64_t pt = prime_part(e, p.value());
  const std::int64_t n = e / pt;
  return (e - 1) + n * (pt - 1);
}

RamifiedPlace RamifiedPlace::make(std::int64_t e, std::int64_t d,
                                  Characteristic p) {
  if (e < 2) throw std::invalid_argument("ramification index must be >= 2");
  const bool wild = p.divides(e);
  if (!wild && d != e - 1) {
    throw std::invalid_argument("tame place needs d = e - 1");
  }
  if (wild && d < min_different_exponent(e, p)) {
    throw std::invalid_argument("wild different exponent below the minimum");
  }
  return RamifiedPlace{e, d, wild};
}

RamifiedPlace RamifiedPlace::tame(std::int64_t e, Characteristic p) {
  return make(e, e - 1, p);
}

RamifiedPlace RamifiedPlace::minimal(std::int64_t e, Characteristic p) {
  return make(e, min_different_exponent(e, p), p);
}

RamifiedPlace RamifiedPlace::unknown(std::int64_t e, Characteristic p) {
  if (e < 2) throw std::invalid_argument("ramification index must be >= 2");
  return RamifiedPlace{e, std::nullopt, p.divides(e)};
}

Signature::Signature(Characteristic p, std::vector<std::int64_t> indices,
                     std::optional<std::int64_t> order,
                     std::int64_t base_genus)
    : p_(p),
      indices_(std::move(indices)),
      order_(order),
      base_genus_(base_genus) {
  std::sort(indices_.begin(), indices_.end());
  if (base_genus_ < 0) throw std::invalid_argument("base genus must be >= 0");
  for (auto e : indices_) {
    if (e < 2) throw std::invalid_argument("ramification index must be >= 2");
  }
  if (order_) {
    if (*order_ < 2) throw std::invalid_argument("group order must be >= 2");
    for (auto e : indices_) {
      if (*order_ % e != 0) {
        throw std::invalid_argument("index " + std::to_string(e) +
                                    " does not divide order " +
                                    std::to_string(*order_));
      }
    }
  }
}

Signature Signature::with_order(std::optional<std::int64_t> order) const {
  return Signature(p_, indices_, order, base_genus_);
}

std::vector<RamifiedPlace> Signature::minimal_places() const {
  std::vector<RamifiedPlace> out;
  out.reserve(indices_.size());
  for (auto e : indices_) out.push_back(RamifiedPlace::minimal(e, p_));
  return out;
}

std::string Signature::str() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < indices_.size(); ++i) {
    if (i) os << ',';
    os << indices_[i];
  }
  os << ")@p=" << p_.value();
  if (order_) os << ",N=" << *order_;
  if (base_genus_ != 0) os << ",g0=" << base_genus_;
  return os.str();
}

std::string GenusResult::status_text() const {
  switch (status) {
    case GenusStatus::kFeasible:
      return "ok";
    case GenusStatus::kNegativeGenus:
      return "negative genus";
    case GenusStatus::kNonIntegral:
      return "non-integral genus";
  }
  return "?";
}

Rational hurwitz_two_g_minus_2(std::int64_t order, std::int64_t base_genus,
                               std::span<const RamifiedPlace> places) {
  if (order < 1) throw std::invalid_argument("order must be >= 1");
  Rational bracket(2 * base_genus - 2);
  for (const auto& pl : places) {
    if (!pl.different) {
      throw std::invalid_argument("different exponent unknown");
    }
    if (pl.index < 2 || *pl.different < 1) {
      throw std::invalid_argument("ramified place needs e >= 2 and d >= 1");
    }
    bracket += Rational(BigInt(*pl.different), BigInt(pl.index));
  }
  return Rational(order) * bracket;
}

GenusResult solve_genus(std::int64_t order, std::int64_t base_genus,
                        std::span<const RamifiedPlace> places) {
  GenusResult res;
  res.two_g_minus_2 = hurwitz_two_g_minus_2(order, base_genus, places);
  const Rational& v = res.two_g_minus_2;
  if (!v.is_integer() || v.num() % 2 != 0) {
    res.status = GenusStatus::kNonIntegral;
    return res;
  }
  res.genus = v.num() / 2 + 1;
  res.status = *res.genus >= 0 ? GenusStatus::kFeasible
                               : GenusStatus::kNegativeGenus;
  return res;
}

std::int64_t back_solve_different(std::int64_t order, std::int64_t base_genus,
                                  std::int64_t known_genus,
                                  std::span<const RamifiedPlace> places,
                                  Characteristic p) {
  if (order < 1) throw std::invalid_argument("order must be >= 1");
  const RamifiedPlace* unknown = nullptr;
  Rational bracket(2 * base_genus - 2);
  for (const auto& pl : places) {
    if (!pl.different) {
      if (unknown) {
        throw std::invalid_argument("more than one unknown different exponent");
      }
      unknown = &pl;
      continue;
    }
    bracket += Rational(BigInt(*pl.different), BigInt(pl.index));
  }
  if (!unknown) throw std::invalid_argument("no unknown different exponent");

  // d_u / e_u = (2g - 2) / N - bracket
  const Rational ratio = Rational(BigInt(2 * known_genus - 2), BigInt(order)) -
                         bracket;
  const Rational d = ratio * Rational(unknown->index);
  if (!d.is_integer()) {
    throw InconsistentTower("solved different exponent " + d.str() +
                            " is not an integer");
  }
  const auto dv = static_cast<std::int64_t>(d.num());
  const std::int64_t dmin = min_different_exponent(unknown->index, p);
  if (dv < dmin) {
    throw InconsistentTower("solved different exponent " + std::to_string(dv) +
                            " is below the minimum " + std::to_string(dmin));
  }
  if (!p.divides(unknown->index) && dv != dmin) {
    throw InconsistentTower("tame place with index " +
                            std::to_string(unknown->index) +
                            " needs d = e - 1, solved " + std::to_string(dv));
  }
  return dv;
}

}  // namespace nilaut
