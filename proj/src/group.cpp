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

#include "mildspec/group.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <set>
#include <sstream>
#include <utility>

#include "mildspec/errors.hpp"

namespace mildspec {

SupportViolation::SupportViolation(std::vector<std::int64_t> where, double magnitude)
    : Error("support violation: |f| = " + std::to_string(magnitude) +
            " at " + to_string(GroupElement{where}) + " off the lattice"),
      where_(std::move(where)),
      magnitude_(magnitude) {}

NotAFrame::NotAFrame(double lower_bound, double upper_bound)
    : Error("not a frame: lower frame bound " + std::to_string(lower_bound) +
            " vs upper bound " + std::to_string(upper_bound)),
      lower_bound_(lower_bound),
      upper_bound_(upper_bound) {}

NotPeriodic::NotPeriodic(std::vector<std::int64_t> shift, double deviation)
    : Error("not periodic: translate by " + to_string(GroupElement{shift}) +
            " deviates by " + std::to_string(deviation)),
      shift_(std::move(shift)),
      deviation_(deviation) {}

std::string to_string(const GroupElement& x) {
  std::ostringstream out;
  out << '(';
  for (std::size_t j = 0; j < x.coords.size(); ++j) {
    if (j) out << ',';
    out << x.coords[j];
  }
  out << ')';
  return out.str();
}

std::string to_string(const GroupSpec& g) {
  std::ostringstream out;
  for (std::size_t j = 0; j < g.rank(); ++j) {
    if (j) out << 'x';
    out << 'Z' << g.modulus(j);
  }
  return out.str();
}

GroupSpec::GroupSpec(std::vector<std::int64_t> moduli) : moduli_(std::move(moduli)) {
  if (moduli_.empty()) throw InvalidArgument("group needs at least one modulus");
  for (auto n : moduli_) {
    if (n < 1) throw InvalidArgument("group modulus must be >= 1, got " + std::to_string(n));
  }
  strides_.assign(moduli_.size(), 1);
  for (std::size_t j = moduli_.size(); j-- > 0;) {
    strides_[j] = order_;
    order_ *= static_cast<std::size_t>(moduli_[j]);
    lcm_ = std::lcm(lcm_, moduli_[j]);
  }
}

GroupElement GroupSpec::element(std::vector<std::int64_t> coords) const {
  if (coords.size() != rank()) {
    throw InvalidArgument("element of rank " + std::to_string(coords.size()) +
                          " in group " + to_string(*this));
  }
  for (std::size_t j = 0; j < rank(); ++j) {
    coords[j] %= moduli_[j];
    if (coords[j] < 0) coords[j] += moduli_[j];
  }
  return GroupElement{std::move(coords)};
}

GroupElement GroupSpec::zero() const {
  return GroupElement{std::vector<std::int64_t>(rank(), 0)};
}

bool GroupSpec::is_valid(const GroupElement& x) const {
  if (x.coords.size() != rank()) return false;
  for (std::size_t j = 0; j < rank(); ++j) {
    if (x.coords[j] < 0 || x.coords[j] >= moduli_[j]) return false;
  }
  return true;
}

void GroupSpec::check(const GroupElement& x) const {
  if (!is_valid(x)) {
    throw InvalidArgument("element " + to_string(x) + " is not a reduced element of " +
                          to_string(*this));
  }
}

std::size_t GroupSpec::index_of(const GroupElement& x) const {
  check(x);
  std::size_t index = 0;
  for (std::size_t j = 0; j < rank(); ++j) {
    index += static_cast<std::size_t>(x.coords[j]) * strides_[j];
  }
  return index;
}

GroupElement GroupSpec::element_at(std::size_t index) const {
  GroupElement x{std::vector<std::int64_t>(rank())};
  for (std::size_t j = 0; j < rank(); ++j) {
    x.coords[j] = static_cast<std::int64_t>(index / strides_[j]);
    index %= strides_[j];
  }
  return x;
}

GroupElement GroupSpec::add(const GroupElement& x, const GroupElement& y) const {
  check(x);
  check(y);
  GroupElement r = x;
  for (std::size_t j = 0; j < rank(); ++j) {
    r.coords[j] += y.coords[j];
    if (r.coords[j] >= moduli_[j]) r.coords[j] -= moduli_[j];
  }
  return r;
}

GroupElement GroupSpec::negate(const GroupElement& x) const {
  check(x);
  GroupElement r = x;
  for (std::size_t j = 0; j < rank(); ++j) {
    if (r.coords[j] != 0) r.coords[j] = moduli_[j] - r.coords[j];
  }
  return r;
}

GroupElement GroupSpec::sub(const GroupElement& x, const GroupElement& y) const {
  return add(x, negate(y));
}

GroupElement GroupSpec::scale(std::int64_t k, const GroupElement& x) const {
  check(x);
  std::vector<std::int64_t> c(rank());
  for (std::size_t j = 0; j < rank(); ++j) c[j] = (k % moduli_[j]) * x.coords[j];
  return element(std::move(c));
}

std::size_t GroupSpec::add_index(std::size_t i, std::size_t k) const {
  std::size_t r = 0;
  for (std::size_t j = 0; j < rank(); ++j) {
    const auto n = static_cast<std::size_t>(moduli_[j]);
    const std::size_t a = i / strides_[j], b = k / strides_[j];
    i %= strides_[j];
    k %= strides_[j];
    std::size_t c = a + b;
    if (c >= n) c -= n;
    r += c * strides_[j];
  }
  return r;
}

std::size_t GroupSpec::negate_index(std::size_t i) const {
  std::size_t r = 0;
  for (std::size_t j = 0; j < rank(); ++j) {
    const auto n = static_cast<std::size_t>(moduli_[j]);
    const std::size_t a = i / strides_[j];
    i %= strides_[j];
    r += (a == 0 ? 0 : n - a) * strides_[j];
  }
  return r;
}

std::size_t GroupSpec::sub_index(std::size_t i, std::size_t k) const {
  return add_index(i, negate_index(k));
}

std::int64_t GroupSpec::element_order(const GroupElement& x) const {
  check(x);
  std::int64_t ord = 1;
  for (std::size_t j = 0; j < rank(); ++j) {
    ord = std::lcm(ord, moduli_[j] / std::gcd(moduli_[j], x.coords[j]));
  }
  return ord;
}

std::int64_t GroupSpec::phase_numerator(const GroupElement& s, const GroupElement& x) const {
  check(s);
  check(x);
  std::int64_t acc = 0;
  for (std::size_t j = 0; j < rank(); ++j) {
    const std::int64_t term = (s.coords[j] * x.coords[j]) % moduli_[j];
    acc = (acc + term * (lcm_ / moduli_[j])) % lcm_;
  }
  return acc;
}

std::int64_t GroupSpec::phase_numerator_index(std::size_t s, std::size_t x) const {
  std::int64_t acc = 0;
  for (std::size_t j = 0; j < rank(); ++j) {
    const auto sj = static_cast<std::int64_t>(s / strides_[j]);
    const auto xj = static_cast<std::int64_t>(x / strides_[j]);
    s %= strides_[j];
    x %= strides_[j];
    acc = (acc + ((sj * xj) % moduli_[j]) * (lcm_ / moduli_[j])) % lcm_;
  }
  return acc;
}

GroupSpec GroupSpec::product(const GroupSpec& other) const {
  std::vector<std::int64_t> m = moduli_;
  m.insert(m.end(), other.moduli_.begin(), other.moduli_.end());
  return GroupSpec(std::move(m));
}

Complex unit_root(std::int64_t k, std::int64_t n) {
  k %= n;
  if (k < 0) k += n;
  if ((4 * k) % n == 0) {
    switch ((4 * k) / n) {
      case 0: return {1.0, 0.0};
      case 1: return {0.0, 1.0};
      case 2: return {-1.0, 0.0};
      default: return {0.0, -1.0};
    }
  }
  if (2 * k > n) k -= n;
  const double theta = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(n);
  return {std::cos(theta), std::sin(theta)};
}

Complex character(const GroupSpec& g, const GroupElement& s, const GroupElement& x) {
  return unit_root(g.phase_numerator(s, x), g.phase_denominator());
}

namespace {

// Membership mask of the subgroup generated by gens, grown breadth first.
std::vector<std::size_t> closure_indices(const GroupSpec& g,
                                         const std::vector<std::size_t>& gens,
                                         std::vector<bool>& member) {
  member.assign(g.order(), false);
  std::vector<std::size_t> list{0};
  member[0] = true;
  for (std::size_t i = 0; i < list.size(); ++i) {
    for (auto gen : gens) {
      const std::size_t y = g.add_index(list[i], gen);
      if (!member[y]) {
        member[y] = true;
        list.push_back(y);
      }
    }
  }
  std::sort(list.begin(), list.end());
  return list;
}

// Generators picked greedily from a sorted element list: keep an element
// whenever it is not already generated by the ones kept so far.
std::vector<GroupElement> reduce_generators(const GroupSpec& g,
                                            std::span<const std::size_t> elements) {
  std::vector<bool> member(g.order(), false);
  member[0] = true;
  std::vector<std::size_t> current{0};
  std::vector<GroupElement> gens;
  for (auto e : elements) {
    if (member[e]) continue;
    gens.push_back(g.element_at(e));
    // current + <e>; current is already closed, so adding e suffices.
    std::vector<std::size_t> frontier = current;
    for (std::size_t i = 0; i < frontier.size(); ++i) {
      const std::size_t y = g.add_index(frontier[i], e);
      if (!member[y]) {
        member[y] = true;
        frontier.push_back(y);
      }
    }
    current = std::move(frontier);
  }
  return gens;
}

}  // namespace

Subgroup::Subgroup(const GroupSpec& parent, std::vector<GroupElement> gens)
    : parent_(parent), generators_(std::move(gens)), coordinate_group_({1}) {
  std::vector<std::size_t> gen_idx;
  for (const auto& x : generators_) gen_idx.push_back(parent_.index_of(x));
  indices_ = closure_indices(parent_, gen_idx, member_);
  elements_.reserve(indices_.size());
  position_.assign(parent_.order(), indices_.size());
  for (std::size_t p = 0; p < indices_.size(); ++p) {
    elements_.push_back(parent_.element_at(indices_[p]));
    position_[indices_[p]] = p;
  }

  // Basis: use the generators directly when they are independent.
  std::vector<GroupElement> nonzero;
  std::size_t product = 1;
  for (const auto& x : generators_) {
    if (x == parent_.zero()) continue;
    nonzero.push_back(x);
    product *= static_cast<std::size_t>(parent_.element_order(x));
  }
  std::vector<std::int64_t> orders;
  if (product == order()) {
    basis_ = nonzero;
    for (const auto& x : basis_) orders.push_back(parent_.element_order(x));
  } else {
    // Greedy invariant-factor search: repeatedly take the first element whose
    // order modulo the span so far is maximal and equal to its true order.
    std::vector<bool> span(parent_.order(), false);
    span[0] = true;
    std::vector<std::size_t> span_list{0};
    while (span_list.size() < order()) {
      std::size_t best = 0;
      std::int64_t best_order = 0;
      for (auto x : indices_) {
        std::int64_t k = 1;
        std::size_t kx = x;
        while (!span[kx]) {
          kx = parent_.add_index(kx, x);
          ++k;
        }
        if (k > best_order && kx == 0) {
          best = x;
          best_order = k;
        }
      }
      if (best_order <= 1) throw std::logic_error("subgroup basis search failed");
      std::vector<std::size_t> grown;
      grown.reserve(span_list.size() * static_cast<std::size_t>(best_order));
      for (auto c : span_list) {
        std::size_t y = c;
        for (std::int64_t k = 0; k < best_order; ++k) {
          if (k) y = parent_.add_index(y, best);
          span[y] = true;
          grown.push_back(y);
        }
      }
      span_list = std::move(grown);
      basis_.push_back(parent_.element_at(best));
      orders.push_back(best_order);
    }
  }
  if (!orders.empty()) coordinate_group_ = GroupSpec(orders);

  embedding_.resize(coordinate_group_.order());
  for (std::size_t c = 0; c < coordinate_group_.order(); ++c) {
    embedding_[c] = parent_.index_of(embed(coordinate_group_.element_at(c)));
  }
}

bool Subgroup::contains(const GroupElement& x) const {
  return parent_.is_valid(x) && member_[parent_.index_of(x)];
}

std::size_t Subgroup::position_of_index(std::size_t parent_index) const {
  return position_[parent_index];
}

GroupElement Subgroup::embed(const GroupElement& c) const {
  GroupElement acc = parent_.zero();
  if (basis_.empty()) return acc;
  coordinate_group_.check(c);
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    acc = parent_.add(acc, parent_.scale(c.coords[i], basis_[i]));
  }
  return acc;
}

GroupElement Subgroup::dual_image(const GroupElement& s) const {
  parent_.check(s);
  if (basis_.empty()) return coordinate_group_.zero();
  std::vector<std::int64_t> r(basis_.size());
  const std::int64_t big_l = parent_.phase_denominator();
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    const std::int64_t m = coordinate_group_.modulus(i);
    r[i] = parent_.phase_numerator(s, basis_[i]) * m / big_l;
  }
  return coordinate_group_.element(std::move(r));
}

std::string to_string(const Subgroup& h) {
  std::ostringstream out;
  out << '<';
  for (std::size_t i = 0; i < h.generators().size(); ++i) {
    if (i) out << ' ';
    out << to_string(h.generators()[i]);
  }
  out << "> in " << to_string(h.parent()) << " (order " << h.order() << ')';
  return out.str();
}

Subgroup subgroup_generated(const GroupSpec& g, std::vector<GroupElement> gens) {
  return Subgroup(g, std::move(gens));
}

Subgroup trivial_subgroup(const GroupSpec& g) { return Subgroup(g, {}); }

Subgroup full_subgroup(const GroupSpec& g) {
  std::vector<GroupElement> gens;
  for (std::size_t j = 0; j < g.rank(); ++j) {
    std::vector<std::int64_t> c(g.rank(), 0);
    c[j] = 1;
    gens.push_back(g.element(std::move(c)));
  }
  return Subgroup(g, std::move(gens));
}

Subgroup annihilator(const Subgroup& h) {
  const GroupSpec& g = h.parent();
  std::vector<std::size_t> gen_idx;
  for (const auto& x : h.generators()) gen_idx.push_back(g.index_of(x));
  std::vector<std::size_t> found;
  for (std::size_t s = 0; s < g.order(); ++s) {
    bool trivial = true;
    for (auto x : gen_idx) {
      if (g.phase_numerator_index(s, x) != 0) {
        trivial = false;
        break;
      }
    }
    if (trivial) found.push_back(s);
  }
  return Subgroup(g, reduce_generators(g, found));
}

QuotientSpec quotient(const GroupSpec& g, const Subgroup& h) {
  if (!(h.parent() == g)) throw GroupMismatch("subgroup does not live in " + to_string(g));
  QuotientSpec q{g, h, {}, std::vector<std::size_t>(g.order(), g.order())};
  for (std::size_t x = 0; x < g.order(); ++x) {
    if (q.coset_of[x] != g.order()) continue;
    const std::size_t label = q.representatives.size();
    q.representatives.push_back(g.element_at(x));
    for (auto e : h.indices()) q.coset_of[g.add_index(x, e)] = label;
  }
  return q;
}

std::vector<Subgroup> all_subgroups(const GroupSpec& g, std::size_t max_order) {
  if (g.order() > max_order) {
    throw BoundExceeded("subgroup enumeration limited to |G| <= " + std::to_string(max_order) +
                        ", got " + std::to_string(g.order()));
  }
  std::set<std::vector<std::size_t>> seen;
  std::vector<Subgroup> out;
  std::vector<Subgroup> frontier{trivial_subgroup(g)};
  seen.insert({0});
  while (!frontier.empty()) {
    std::vector<Subgroup> next;
    for (const auto& h : frontier) {
      const QuotientSpec q = quotient(g, h);
      for (std::size_t c = 1; c < q.size(); ++c) {
        auto gens = h.generators();
        gens.push_back(q.representatives[c]);
        std::vector<std::size_t> gen_idx;
        for (const auto& x : gens) gen_idx.push_back(g.index_of(x));
        std::vector<bool> member;
        auto idx = closure_indices(g, gen_idx, member);
        if (seen.insert(idx).second) {
          next.emplace_back(g, reduce_generators(g, idx));
        }
      }
      out.push_back(h);
    }
    frontier = std::move(next);
  }
  std::sort(out.begin(), out.end(), [](const Subgroup& a, const Subgroup& b) {
    if (a.order() != b.order()) return a.order() < b.order();
    return std::lexicographical_compare(a.indices().begin(), a.indices().end(),
                                        b.indices().begin(), b.indices().end());
  });
  return out;
}

Subgroup lattice_subgroup(const GroupSpec& g, std::span<const std::int64_t> steps) {
  if (steps.size() != g.rank()) {
    throw GroupMismatch("lattice has " + std::to_string(steps.size()) + " steps for group " +
                        to_string(g));
  }
  std::vector<GroupElement> gens;
  for (std::size_t j = 0; j < g.rank(); ++j) {
    if (steps[j] < 1 || g.modulus(j) % steps[j] != 0) {
      throw GroupMismatch("lattice step " + std::to_string(steps[j]) + " does not divide " +
                          std::to_string(g.modulus(j)));
    }
    std::vector<std::int64_t> c(g.rank(), 0);
    c[j] = steps[j];
    gens.push_back(g.element(std::move(c)));
  }
  return Subgroup(g, std::move(gens));
}

Subgroup factor_subgroup(const GroupSpec& g, std::span<const std::size_t> axes) {
  std::vector<GroupElement> gens;
  for (auto j : axes) {
    if (j >= g.rank()) throw InvalidArgument("axis out of range");
    std::vector<std::int64_t> c(g.rank(), 0);
    c[j] = 1;
    gens.push_back(g.element(std::move(c)));
  }
  return Subgroup(g, std::move(gens));
}

}  // namespace mildspec
