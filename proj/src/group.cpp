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

#include "nilaut/group.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <stdexcept>
#include <unordered_set>

#include "nilaut/arith.hpp"
#include "nilaut/errors.hpp"

namespace nilaut {

CayleyTable::CayleyTable(std::size_t n, std::vector<std::uint32_t> table)
    : n_(n), mul_(std::move(table)) {
  if (n_ == 0 || mul_.size() != n_ * n_) {
    throw std::invalid_argument("Cayley table has wrong shape");
  }
  // Latin square: every row and column is a permutation.
  std::vector<std::uint8_t> seen(n_);
  for (std::size_t i = 0; i < n_; ++i) {
    std::fill(seen.begin(), seen.end(), 0);
    for (std::size_t j = 0; j < n_; ++j) {
      const auto v = mul_[i * n_ + j];
      if (v >= n_ || seen[v]) throw std::invalid_argument("row not a permutation");
      seen[v] = 1;
    }
    std::fill(seen.begin(), seen.end(), 0);
    for (std::size_t j = 0; j < n_; ++j) {
      const auto v = mul_[j * n_ + i];
      if (seen[v]) throw std::invalid_argument("column not a permutation");
      seen[v] = 1;
    }
  }
  bool found = false;
  for (std::uint32_t e = 0; e < n_ && !found; ++e) {
    bool ok = true;
    for (std::uint32_t x = 0; x < n_ && ok; ++x) {
      ok = mul(e, x) == x && mul(x, e) == x;
    }
    if (ok) {
      identity_ = e;
      found = true;
    }
  }
  if (!found) throw std::invalid_argument("table has no identity");
  inverse_.resize(n_);
  for (std::uint32_t a = 0; a < n_; ++a) {
    for (std::uint32_t b = 0; b < n_; ++b) {
      if (mul(a, b) == identity_) {
        inverse_[a] = b;
        break;
      }
    }
  }
}

std::size_t CayleyTable::element_order(std::uint32_t a) const {
  std::size_t k = 1;
  for (std::uint32_t x = a; x != identity_; x = mul(x, a)) ++k;
  return k;
}

std::uint32_t CayleyTable::commutator(std::uint32_t a, std::uint32_t b) const {
  return mul(mul(inverse(a), inverse(b)), mul(a, b));
}

bool CayleyTable::is_associative(std::size_t exhaustive_limit,
                                 std::size_t samples) const {
  auto check = [&](std::uint32_t a, std::uint32_t b, std::uint32_t c) {
    return mul(mul(a, b), c) == mul(a, mul(b, c));
  };
  if (n_ <= exhaustive_limit) {
    for (std::uint32_t a = 0; a < n_; ++a)
      for (std::uint32_t b = 0; b < n_; ++b)
        for (std::uint32_t c = 0; c < n_; ++c)
          if (!check(a, b, c)) return false;
    return true;
  }
  std::uint64_t state = 0x9E3779B97F4A7C15ull;
  auto next = [&]() {
    state ^= state << 13;
    state ^= state >> 7;
    state ^= state << 17;
    return static_cast<std::uint32_t>(state % n_);
  };
  for (std::size_t s = 0; s < samples; ++s) {
    const auto a = next(), b = next(), c = next();
    if (!check(a, b, c)) return false;
  }
  return true;
}

Subset CayleyTable::generate(const std::vector<std::uint32_t>& gens) const {
  Subset in(n_, false);
  std::vector<std::uint32_t> elems{identity_};
  in[identity_] = true;
  std::vector<std::uint32_t> uniq;
  for (auto g : gens) {
    if (g != identity_ && std::find(uniq.begin(), uniq.end(), g) == uniq.end())
      uniq.push_back(g);
  }
  // Finite group: closure under right multiplication by generators suffices.
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (auto g : uniq) {
      const auto x = mul(elems[i], g);
      if (!in[x]) {
        in[x] = true;
        elems.push_back(x);
      }
    }
  }
  return in;
}

Subset CayleyTable::normal_closure(
    const std::vector<std::uint32_t>& gens) const {
  std::vector<std::uint32_t> conj;
  for (auto g : gens) {
    for (std::uint32_t x = 0; x < n_; ++x) {
      conj.push_back(mul(mul(inverse(x), g), x));
    }
  }
  std::sort(conj.begin(), conj.end());
  conj.erase(std::unique(conj.begin(), conj.end()), conj.end());
  // The subgroup generated by a conjugation-closed set is normal.
  return generate(conj);
}

bool CayleyTable::is_normal(const Subset& h) const {
  for (std::uint32_t a = 0; a < n_; ++a) {
    if (!h[a]) continue;
    for (std::uint32_t x = 0; x < n_; ++x) {
      if (!h[mul(mul(inverse(x), a), x)]) return false;
    }
  }
  return true;
}

Subset CayleyTable::commutator_subgroup(const Subset& a, const Subset& b) const {
  std::vector<std::uint32_t> gens;
  std::vector<bool> seen(n_, false);
  for (std::uint32_t x = 0; x < n_; ++x) {
    if (!a[x]) continue;
    for (std::uint32_t y = 0; y < n_; ++y) {
      if (!b[y]) continue;
      const auto c = commutator(x, y);
      if (!seen[c]) {
        seen[c] = true;
        gens.push_back(c);
      }
    }
  }
  return generate(gens);
}

std::size_t subset_size(const Subset& s) {
  return static_cast<std::size_t>(std::count(s.begin(), s.end(), true));
}

std::vector<std::uint32_t> subset_elements(const Subset& s) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t i = 0; i < s.size(); ++i)
    if (s[i]) out.push_back(i);
  return out;
}

std::vector<std::size_t> lower_central_series(const CayleyTable& g) {
  Subset whole(g.order(), true);
  Subset term = whole;
  std::vector<std::size_t> sizes{g.order()};
  while (true) {
    Subset next = g.commutator_subgroup(whole, term);
    if (next == term) break;
    term = std::move(next);
    sizes.push_back(subset_size(term));
  }
  return sizes;
}

bool is_nilpotent(const CayleyTable& g) {
  return lower_central_series(g).back() == 1;
}

bool divisor_normal_subgroup_property(const CayleyTable& g) {
  if (g.order() > kMaxTableOrder) {
    throw TooLarge("group too large: order " + std::to_string(g.order()) +
                   " exceeds " + std::to_string(kMaxTableOrder));
  }
  const auto n = static_cast<std::int64_t>(g.order());
  std::set<std::size_t> missing;
  for (auto d : divisors(n)) missing.insert(static_cast<std::size_t>(d));

  std::unordered_set<Subset> found;
  std::deque<Subset> queue;
  auto add = [&](Subset s) {
    if (found.insert(s).second) {
      missing.erase(subset_size(s));
      queue.push_back(std::move(s));
    }
  };
  missing.erase(1);

  std::vector<Subset> atoms;
  {
    std::unordered_set<Subset> atom_set;
    for (std::uint32_t x = 0; x < g.order(); ++x) {
      Subset c = g.normal_closure({x});
      if (atom_set.insert(c).second) atoms.push_back(c);
    }
  }
  for (const auto& a : atoms) add(a);
  while (!queue.empty() && !missing.empty()) {
    Subset cur = std::move(queue.front());
    queue.pop_front();
    for (const auto& a : atoms) {
      bool inside = true;
      for (std::size_t i = 0; i < a.size() && inside; ++i)
        inside = !a[i] || cur[i];
      if (inside) continue;
      std::vector<std::uint32_t> gens = subset_elements(cur);
      for (auto x : subset_elements(a)) gens.push_back(x);
      add(g.generate(gens));
    }
  }
  return missing.empty();
}

CayleyTable cyclic_group(std::size_t n) {
  std::vector<std::uint32_t> mul(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      mul[a * n + b] = static_cast<std::uint32_t>((a + b) % n);
  return CayleyTable(n, std::move(mul));
}

CayleyTable direct_product(const CayleyTable& a, const CayleyTable& b) {
  const std::size_t na = a.order(), nb = b.order(), n = na * nb;
  std::vector<std::uint32_t> mul(n * n);
  for (std::uint32_t x = 0; x < n; ++x) {
    for (std::uint32_t y = 0; y < n; ++y) {
      const auto xa = static_cast<std::uint32_t>(x / nb);
      const auto xb = static_cast<std::uint32_t>(x % nb);
      const auto ya = static_cast<std::uint32_t>(y / nb);
      const auto yb = static_cast<std::uint32_t>(y % nb);
      mul[x * n + y] =
          static_cast<std::uint32_t>(a.mul(xa, ya) * nb + b.mul(xb, yb));
    }
  }
  return CayleyTable(n, std::move(mul));
}

CayleyTable permutation_group(
    const std::vector<std::vector<std::uint32_t>>& generators) {
  if (generators.empty()) throw std::invalid_argument("no generators");
  const std::size_t deg = generators.front().size();
  using Perm = std::vector<std::uint32_t>;
  Perm id(deg);
  for (std::uint32_t i = 0; i < deg; ++i) id[i] = i;
  auto compose = [](const Perm& p, const Perm& q) {  // p after q
    Perm r(q.size());
    for (std::size_t i = 0; i < q.size(); ++i) r[i] = p[q[i]];
    return r;
  };
  std::vector<Perm> elems{id};
  std::map<Perm, std::uint32_t> index{{id, 0}};
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (const auto& g : generators) {
      Perm x = compose(elems[i], g);
      if (index.emplace(x, static_cast<std::uint32_t>(elems.size())).second) {
        elems.push_back(std::move(x));
        if (elems.size() > kMaxTableOrder) throw TooLarge("permutation group too large");
      }
    }
  }
  const std::size_t n = elems.size();
  std::vector<std::uint32_t> mul(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      mul[a * n + b] = index.at(compose(elems[a], elems[b]));
  return CayleyTable(n, std::move(mul));
}

CayleyTable symmetric_group(std::size_t degree) {
  std::vector<std::uint32_t> transposition(degree), cycle(degree);
  for (std::uint32_t i = 0; i < degree; ++i) {
    transposition[i] = i;
    cycle[i] = static_cast<std::uint32_t>((i + 1) % degree);
  }
  if (degree >= 2) std::swap(transposition[0], transposition[1]);
  return permutation_group({transposition, cycle});
}

CayleyTable dihedral_group(std::size_t n) {
  std::vector<std::uint32_t> rot(n), refl(n);
  for (std::uint32_t i = 0; i < n; ++i) {
    rot[i] = static_cast<std::uint32_t>((i + 1) % n);
    refl[i] = static_cast<std::uint32_t>((n - i) % n);
  }
  return permutation_group({rot, refl});
}

CayleyTable quaternion_group() {
  // Element 4*s + u stands for (-1)^s * unit[u], units 1, i, j, k.
  static constexpr int kUnit[4][4] = {
      {0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  static constexpr int kSign[4][4] = {
      {0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}};
  std::vector<std::uint32_t> mul(64);
  for (int a = 0; a < 8; ++a) {
    for (int b = 0; b < 8; ++b) {
      const int sa = a / 4, ua = a % 4, sb = b / 4, ub = b % 4;
      const int s = (sa + sb + kSign[ua][ub]) % 2;
      mul[a * 8 + b] = static_cast<std::uint32_t>(4 * s + kUnit[ua][ub]);
    }
  }
  return CayleyTable(8, std::move(mul));
}

}  // namespace nilaut
