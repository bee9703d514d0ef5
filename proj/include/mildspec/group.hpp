// Copyright 2026 The mildspec Authors.
//
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

#ifndef MILDSPEC_GROUP_HPP_
#define MILDSPEC_GROUP_HPP_

#include <complex>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace mildspec {

using Complex = std::complex<double>;

// A point of a finite abelian group. Coordinates are always reduced modulo
// the moduli of the group that produced the element.
struct GroupElement {
  std::vector<std::int64_t> coords;

  friend bool operator==(const GroupElement&, const GroupElement&) = default;
  friend auto operator<=>(const GroupElement&, const GroupElement&) = default;
};

std::string to_string(const GroupElement& x);

// Z_{N_1} x ... x Z_{N_d}. The dual group is indexed by the same spec:
// s in G stands for the character x -> exp(2 pi i sum_j s_j x_j / N_j).
//
// Elements are enumerated in lexicographic order of their coordinates, which
// is row-major order with the last axis varying fastest. Signals store their
// values in this order.
class GroupSpec {
 public:
  explicit GroupSpec(std::vector<std::int64_t> moduli);
  static GroupSpec cyclic(std::int64_t n) { return GroupSpec({n}); }

  std::span<const std::int64_t> moduli() const { return moduli_; }
  std::int64_t modulus(std::size_t axis) const { return moduli_[axis]; }
  std::size_t rank() const { return moduli_.size(); }
  std::size_t order() const { return order_; }

  // Least common multiple of the moduli; every character value is a power of
  // exp(2 pi i / phase_denominator()).
  std::int64_t phase_denominator() const { return lcm_; }

  // Reduces arbitrary integer coordinates. Throws InvalidArgument on a rank
  // mismatch.
  GroupElement element(std::vector<std::int64_t> coords) const;
  GroupElement zero() const;

  // Throws InvalidArgument unless x has the right rank and reduced coords.
  void check(const GroupElement& x) const;
  bool is_valid(const GroupElement& x) const;

  std::size_t index_of(const GroupElement& x) const;
  GroupElement element_at(std::size_t index) const;

  GroupElement add(const GroupElement& x, const GroupElement& y) const;
  GroupElement sub(const GroupElement& x, const GroupElement& y) const;
  GroupElement negate(const GroupElement& x) const;
  GroupElement scale(std::int64_t k, const GroupElement& x) const;

  // Index arithmetic without materializing elements.
  std::size_t add_index(std::size_t i, std::size_t j) const;
  std::size_t sub_index(std::size_t i, std::size_t j) const;
  std::size_t negate_index(std::size_t i) const;

  // Smallest k >= 1 with k x = 0.
  std::int64_t element_order(const GroupElement& x) const;

  // sum_j s_j x_j (L / N_j) mod L with L = phase_denominator(); exact.
  std::int64_t phase_numerator(const GroupElement& s, const GroupElement& x) const;
  std::int64_t phase_numerator_index(std::size_t s, std::size_t x) const;

  // Direct product with another group: moduli are concatenated.
  GroupSpec product(const GroupSpec& other) const;

  friend bool operator==(const GroupSpec& a, const GroupSpec& b) {
    return a.moduli_ == b.moduli_;
  }

 private:
  std::vector<std::int64_t> moduli_;
  std::vector<std::size_t> strides_;
  std::size_t order_ = 1;
  std::int64_t lcm_ = 1;
};

std::string to_string(const GroupSpec& g);

// exp(2 pi i k / n), exact at multiples of a quarter turn.
Complex unit_root(std::int64_t k, std::int64_t n);

// chi_s(x) = exp(2 pi i sum_j s_j x_j / N_j).
Complex character(const GroupSpec& g, const GroupElement& s, const GroupElement& x);

// A subgroup stored by explicit enumeration, together with an isomorphism
// to a product of cyclic groups (its coordinate group). The isomorphism maps
// c in the coordinate group to sum_i c_i * basis_i.
class Subgroup {
 public:
  // Smallest subgroup containing gens. If the nonzero generators are
  // independent (their orders multiply to |H|) they are used as the basis;
  // otherwise a basis of invariant-factor type is searched greedily.
  Subgroup(const GroupSpec& parent, std::vector<GroupElement> gens);

  const GroupSpec& parent() const { return parent_; }
  const std::vector<GroupElement>& generators() const { return generators_; }
  const std::vector<GroupElement>& elements() const { return elements_; }
  std::span<const std::size_t> indices() const { return indices_; }
  std::size_t order() const { return indices_.size(); }

  bool contains(const GroupElement& x) const;
  bool contains_index(std::size_t i) const { return member_[i]; }
  // Position of a parent index inside elements(), or order() if absent.
  std::size_t position_of_index(std::size_t parent_index) const;

  const GroupSpec& coordinate_group() const { return coordinate_group_; }
  const std::vector<GroupElement>& basis() const { return basis_; }
  // Parent index of the element with the given coordinate-group index.
  std::size_t embed_index(std::size_t coordinate_index) const {
    return embedding_[coordinate_index];
  }
  GroupElement embed(const GroupElement& c) const;

  // Image of the character chi_s of the parent in the dual of H, expressed
  // in the (self-dual) coordinate group.
  GroupElement dual_image(const GroupElement& s) const;

  friend bool operator==(const Subgroup& a, const Subgroup& b) {
    return a.parent_ == b.parent_ && a.indices_ == b.indices_;
  }

 private:
  GroupSpec parent_;
  std::vector<GroupElement> generators_;
  std::vector<GroupElement> elements_;
  std::vector<std::size_t> indices_;
  std::vector<bool> member_;
  std::vector<std::size_t> position_;
  std::vector<GroupElement> basis_;
  GroupSpec coordinate_group_;
  std::vector<std::size_t> embedding_;
};

std::string to_string(const Subgroup& h);

struct QuotientSpec {
  GroupSpec parent;
  Subgroup subgroup;
  // Lexicographically smallest element of each coset, in increasing order.
  std::vector<GroupElement> representatives;
  // coset_of[i] is the coset number of parent element i.
  std::vector<std::size_t> coset_of;

  std::size_t size() const { return representatives.size(); }
};

Subgroup subgroup_generated(const GroupSpec& g, std::vector<GroupElement> gens);
Subgroup trivial_subgroup(const GroupSpec& g);
Subgroup full_subgroup(const GroupSpec& g);

// {s : chi_s(h) = 1 for all h in H}, as a subgroup of the dual (same spec).
Subgroup annihilator(const Subgroup& h);

QuotientSpec quotient(const GroupSpec& g, const Subgroup& h);

// Every subgroup of g exactly once, sorted by order and then by elements.
// Throws BoundExceeded when |g| > max_order.
std::vector<Subgroup> all_subgroups(const GroupSpec& g, std::size_t max_order = 4096);

// step_1 Z x ... x step_d Z. Throws GroupMismatch unless step_j | N_j.
Subgroup lattice_subgroup(const GroupSpec& g, std::span<const std::int64_t> steps);

// Z_{N_{a_1}} x ... on the listed axes, {0} elsewhere.
Subgroup factor_subgroup(const GroupSpec& g, std::span<const std::size_t> axes);

}  // namespace mildspec

#endif  // MILDSPEC_GROUP_HPP_
