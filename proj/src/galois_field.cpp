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

#include "nilaut/galois_field.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

#include "nilaut/arith.hpp"

namespace nilaut {
namespace {

using Coeffs = std::vector<std::uint32_t>;  // low degree first, mod p

Coeffs decode(std::uint32_t v, std::uint32_t p, int k) {
  Coeffs c(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) {
    c[static_cast<std::size_t>(i)] = v % p;
    v /= p;
  }
  return c;
}

std::uint32_t encode(const Coeffs& c, std::uint32_t p) {
  std::uint32_t v = 0;
  for (std::size_t i = c.size(); i-- > 0;) v = v * p + c[i];
  return v;
}

void trim(Coeffs& c) {
  while (!c.empty() && c.back() == 0) c.pop_back();
}

// Remainder of a modulo monic m over F_p.
Coeffs poly_mod(Coeffs a, const Coeffs& m, std::uint32_t p) {
  trim(a);
  const std::size_t dm = m.size() - 1;
  while (a.size() > dm) {
    const std::uint32_t lead = a.back();
    const std::size_t shift = a.size() - 1 - dm;
    for (std::size_t i = 0; i <= dm; ++i) {
      a[shift + i] = (a[shift + i] + (p - lead) * m[i] % p) % p;
    }
    trim(a);
  }
  return a;
}

bool is_irreducible(const Coeffs& f, std::uint32_t p) {
  const int k = static_cast<int>(f.size()) - 1;
  for (int d = 1; 2 * d <= k; ++d) {
    const auto count = static_cast<std::uint32_t>(ipow(p, d));
    for (std::uint32_t code = 0; code < count; ++code) {
      Coeffs g = decode(code, p, d);
      g.push_back(1);
      if (poly_mod(f, g, p).empty()) return false;
    }
  }
  return true;
}

Coeffs mul_mod(const Coeffs& a, const Coeffs& b, const Coeffs& m,
               std::uint32_t p) {
  Coeffs r(a.size() + b.size(), 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      r[i + j] = static_cast<std::uint32_t>((r[i + j] + std::uint64_t{a[i]} * b[j]) % p);
  return poly_mod(std::move(r), m, p);
}

}  // namespace

GaloisField::GaloisField(std::uint32_t p, int k, Coeffs modulus)
    : p_(p), k_(k), modulus_(std::move(modulus)) {
  q_ = static_cast<std::uint32_t>(ipow(p, k));
  pow_p_.resize(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) pow_p_[static_cast<std::size_t>(i)] = static_cast<std::uint32_t>(ipow(p, i));

  auto slow_mul = [&](std::uint32_t a, std::uint32_t b) {
    Coeffs r = mul_mod(decode(a, p_, k_), decode(b, p_, k_), modulus_, p_);
    r.resize(static_cast<std::size_t>(k_), 0);
    return encode(r, p_);
  };
  const std::uint32_t n = q_ - 1;
  const auto primes = n > 1 ? prime_divisors(n) : std::vector<std::int64_t>{};
  for (std::uint32_t g = 1; g < q_; ++g) {
    // g is primitive iff g^(n/l) != 1 for each prime l | n.
    std::vector<std::uint32_t> powers(n);
    std::uint32_t x = 1;
    for (std::uint32_t i = 0; i < n; ++i) {
      powers[i] = x;
      x = slow_mul(x, g);
    }
    bool primitive = true;
    for (auto l : primes) {
      if (powers[n / static_cast<std::uint32_t>(l)] == 1) {
        primitive = false;
        break;
      }
    }
    if (!primitive) continue;
    exp_.resize(2 * static_cast<std::size_t>(n));
    log_.assign(q_, 0);
    for (std::uint32_t i = 0; i < n; ++i) {
      exp_[i] = exp_[i + n] = powers[i];
      log_[powers[i]] = i;
    }
    return;
  }
  throw std::logic_error("no primitive element found");
}

FieldPtr GaloisField::create(std::int64_t p, int k) {
  if (!is_prime(p)) throw std::invalid_argument("field characteristic must be prime");
  if (k < 1) throw std::invalid_argument("field degree must be >= 1");
  const std::int64_t q = ipow(p, k);
  if (q > kMaxFieldSize) throw std::invalid_argument("field too large");
  const auto up = static_cast<std::uint32_t>(p);
  const auto count = static_cast<std::uint32_t>(ipow(p, k));
  for (std::uint32_t code = 0; code < count; ++code) {
    Coeffs f = decode(code, up, k);
    f.push_back(1);
    if (k == 1 || is_irreducible(f, up)) {
      return FieldPtr(new GaloisField(up, k, std::move(f)));
    }
  }
  throw std::logic_error("no irreducible polynomial found");
}

FieldPtr GaloisField::with_roots_of_unity(std::int64_t p, int k_min,
                                          std::int64_t root_order) {
  if (root_order < 1 || std::gcd(root_order, p) != 1) {
    throw std::invalid_argument("root order must be positive and prime to p");
  }
  for (int k = std::max(1, k_min);; ++k) {
    const std::int64_t q = ipow(p, k);
    if (q > kMaxFieldSize) throw std::invalid_argument("required field too large");
    if ((q - 1) % root_order == 0) return create(p, k);
  }
}

Fq GaloisField::from_int(std::int64_t n) const {
  const auto p = static_cast<std::int64_t>(p_);
  return {static_cast<std::uint32_t>(((n % p) + p) % p)};
}

Fq GaloisField::add(Fq a, Fq b) const {
  if (k_ == 1) return {(a.v + b.v) % p_};
  std::uint32_t r = 0;
  for (int i = k_; i-- > 0;) {
    const auto pi = pow_p_[static_cast<std::size_t>(i)];
    const std::uint32_t da = (a.v / pi) % p_, db = (b.v / pi) % p_;
    r = r * p_ + (da + db) % p_;
  }
  return {r};
}

Fq GaloisField::neg(Fq a) const {
  if (k_ == 1) return {(p_ - a.v) % p_};
  std::uint32_t r = 0;
  for (int i = k_; i-- > 0;) {
    const std::uint32_t d = (a.v / pow_p_[static_cast<std::size_t>(i)]) % p_;
    r = r * p_ + (p_ - d) % p_;
  }
  return {r};
}

Fq GaloisField::sub(Fq a, Fq b) const { return add(a, neg(b)); }

Fq GaloisField::mul(Fq a, Fq b) const {
  if (a.v == 0 || b.v == 0) return {0};
  return {exp_[log_[a.v] + log_[b.v]]};
}

Fq GaloisField::inv(Fq a) const {
  if (a.v == 0) throw std::domain_error("inverse of zero in finite field");
  const std::uint32_t n = q_ - 1;
  return {exp_[(n - log_[a.v]) % n]};
}

Fq GaloisField::pow(Fq a, std::int64_t e) const {
  if (a.v == 0) {
    if (e == 0) return one();
    if (e < 0) throw std::domain_error("negative power of zero");
    return zero();
  }
  const std::int64_t n = q_ - 1;
  std::int64_t idx = (static_cast<std::int64_t>(log_[a.v]) * (e % n)) % n;
  if (idx < 0) idx += n;
  return {exp_[static_cast<std::size_t>(idx)]};
}

Fq GaloisField::pth_root(Fq a) const { return pow(a, q_ / p_); }

std::uint64_t GaloisField::mult_order(Fq a) const {
  if (a.v == 0) throw std::domain_error("order of zero");
  const std::uint64_t n = q_ - 1;
  return n / std::gcd<std::uint64_t>(n, log_[a.v]);
}

Fq GaloisField::primitive_root_of_unity(std::int64_t m) const {
  if (m < 1 || (q_ - 1) % m != 0) {
    throw std::invalid_argument("field has no primitive " + std::to_string(m) +
                                "-th root of unity");
  }
  return {exp_[(q_ - 1) / static_cast<std::uint32_t>(m)]};
}

Fq GaloisField::sqrt(Fq a) const {
  if (a.v == 0) return a;
  if (p_ == 2) return pow(a, q_ / 2);
  const auto l = log_[a.v];
  if (l % 2 != 0) throw std::domain_error("element is not a square");
  return {exp_[l / 2]};
}

std::string GaloisField::str(Fq a) const {
  if (k_ == 1) return std::to_string(a.v);
  // Polynomial in the generator "a", highest degree first.
  std::ostringstream os;
  bool first = true;
  for (int i = k_; i-- > 0;) {
    const std::uint32_t d = (a.v / pow_p_[static_cast<std::size_t>(i)]) % p_;
    if (d == 0) continue;
    if (!first) os << '+';
    first = false;
    if (i == 0 || d != 1) os << d;
    if (i >= 1) os << 'a';
    if (i > 1) os << '^' << i;
  }
  if (first) os << '0';
  return os.str();
}

std::string GaloisField::describe() const {
  std::ostringstream os;
  os << "F_" << q_;
  if (k_ > 1) {
    os << " = F_" << p_ << "[a]/(";
    bool first = true;
    for (std::size_t i = modulus_.size(); i-- > 0;) {
      if (modulus_[i] == 0) continue;
      if (!first) os << '+';
      first = false;
      if (i == 0 || modulus_[i] != 1) os << modulus_[i];
      if (i >= 1) os << 'a';
      if (i > 1) os << '^' << i;
    }
    os << ')';
  }
  return os.str();
}

}  // namespace nilaut
