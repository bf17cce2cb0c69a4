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

// Finite groups given by an explicit Cayley table.

#ifndef NILAUT_GROUP_HPP
#define NILAUT_GROUP_HPP

#include <cstddef>
#include <cstdint>
#include <vector>

namespace nilaut {

/// Largest table accepted by the exhaustive subgroup routines.
inline constexpr std::size_t kMaxTableOrder = 4096;

using Subset = std::vector<bool>;

class CayleyTable {
 public:
  /// `mul[i * n + j]` is the index of element_i * element_j. Throws
  /// std::invalid_argument unless the table is a Latin square with an
  /// identity (which, together with finiteness, gives inverses).
  CayleyTable(std::size_t n, std::vector<std::uint32_t> mul);

  std::size_t order() const { return n_; }
  std::uint32_t identity() const { return identity_; }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    return mul_[a * n_ + b];
  }
  std::uint32_t inverse(std::uint32_t a) const { return inverse_[a]; }
  std::size_t element_order(std::uint32_t a) const;
  std::uint32_t commutator(std::uint32_t a, std::uint32_t b) const;

  /// Checks (ab)c = a(bc) for every triple when order <= exhaustive_limit,
  /// otherwise on `samples` deterministic pseudo-random triples.
  bool is_associative(std::size_t exhaustive_limit = 16,
                      std::size_t samples = 20000) const;

  /// Smallest subgroup containing `gens`.
  Subset generate(const std::vector<std::uint32_t>& gens) const;
  /// Smallest normal subgroup containing `gens`.
  Subset normal_closure(const std::vector<std::uint32_t>& gens) const;
  bool is_normal(const Subset& h) const;
  /// Subgroup generated by all [g, h] with g in `a`, h in `b`.
  Subset commutator_subgroup(const Subset& a, const Subset& b) const;

  const std::vector<std::uint32_t>& raw() const { return mul_; }

 private:
  std::size_t n_;
  std::vector<std::uint32_t> mul_;
  std::vector<std::uint32_t> inverse_;
  std::uint32_t identity_ = 0;
};

std::size_t subset_size(const Subset& s);
std::vector<std::uint32_t> subset_elements(const Subset& s);

/// Orders of the terms of the lower central series G = g_1 >= g_2 >= ...,
/// stopping when it stabilizes.
std::vector<std::size_t> lower_central_series(const CayleyTable& g);

/// True iff the lower central series reaches the trivial group.
bool is_nilpotent(const CayleyTable& g);

/// True iff G has a normal subgroup of order n for every divisor n of |G|.
/// Normal subgroups are enumerated as joins of normal closures of single
/// elements, which reaches every normal subgroup. Throws TooLarge above
/// kMaxTableOrder.
bool divisor_normal_subgroup_property(const CayleyTable& g);

// Builders for test corpora and reference groups.
CayleyTable cyclic_group(std::size_t n);
CayleyTable direct_product(const CayleyTable& a, const CayleyTable& b);
/// Closure of permutations of {0..degree-1} under composition.
CayleyTable permutation_group(
    const std::vector<std::vector<std::uint32_t>>& generators);
CayleyTable symmetric_group(std::size_t degree);
/// Dihedral group of order 2n acting on an n-gon.
CayleyTable dihedral_group(std::size_t n);
CayleyTable quaternion_group();

}  // namespace nilaut

#endif  // NILAUT_GROUP_HPP
