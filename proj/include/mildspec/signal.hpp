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

#ifndef MILDSPEC_SIGNAL_HPP_
#define MILDSPEC_SIGNAL_HPP_

#include <cstddef>
#include <span>
#include <vector>

#include "mildspec/group.hpp"

namespace mildspec {

// A complex function on a finite group, stored densely in the group's
// canonical element order. The same object serves as test function, as
// finite-energy vector and as (mild) distribution; only the norm applied to
// it differs. A distribution acts on a test function through pair().
class Signal {
 public:
  // Throws InvalidArgument on a length mismatch or a non-finite entry.
  Signal(GroupSpec group, std::vector<Complex> values);
  static Signal zeros(const GroupSpec& group);
  static Signal constant(const GroupSpec& group, Complex value);

  const GroupSpec& group() const { return group_; }
  std::span<const Complex> values() const { return values_; }
  std::size_t size() const { return values_.size(); }
  Complex operator[](std::size_t index) const { return values_[index]; }
  Complex at(const GroupElement& x) const { return values_[group_.index_of(x)]; }

  double norm1() const;
  double norm2() const;
  double norm_inf() const;

  Signal conj() const;
  // f(-x).
  Signal reflect() const;

  Signal& operator+=(const Signal& other);
  Signal& operator-=(const Signal& other);
  Signal& operator*=(Complex alpha);

 private:
  GroupSpec group_;
  std::vector<Complex> values_;
};

Signal operator+(Signal a, const Signal& b);
Signal operator-(Signal a, const Signal& b);
Signal operator*(Complex alpha, Signal f);
// Pointwise product.
Signal multiply(const Signal& a, const Signal& b);

// Throws GroupMismatch unless both signals live on the same group.
void require_same_group(const Signal& a, const Signal& b);

// Bilinear action sum_x sigma(x) f(x) of a distribution on a test function.
Complex pair(const Signal& sigma, const Signal& f);
// Sesquilinear inner product sum_x f(x) conj(g(x)).
Complex inner(const Signal& f, const Signal& g);
// max_x |a(x) - b(x)|.
double max_abs_diff(const Signal& a, const Signal& b);

// Weighted Dirac comb sum_lambda c_lambda delta_lambda. Weights follow the
// order of lattice.elements().
struct WeightedComb {
  Subgroup lattice;
  std::vector<Complex> weights;
  double max_weight = 0.0;

  WeightedComb(Subgroup lattice, std::vector<Complex> weights);
};

Signal dirac(const GroupSpec& g, const GroupElement& x);
Signal pure_frequency(const GroupSpec& g, const GroupElement& s);
// Indicator of the lattice.
Signal dirac_comb(const Subgroup& lattice);

Signal comb_to_signal(const WeightedComb& comb);
// Reads the weights off a signal supported on the lattice. Throws
// SupportViolation at the first (canonical order) x off the lattice with
// |f(x)| > tolerance.
WeightedComb signal_to_comb(const Signal& f, const Subgroup& lattice, double tolerance);

// T_t f(x) = f(x - t).
Signal translate(const Signal& f, const GroupElement& t);
// M_s f(x) = chi_s(x) f(x).
Signal modulate(const Signal& f, const GroupElement& s);
// pi(t, s) f = M_s T_t f.
Signal tf_shift(const Signal& f, const GroupElement& t, const GroupElement& s);

// Finite Gaussian: per axis g[k] = sum_{|m| <= radius} exp(-pi (k + m N)^2 / N),
// tensorized over axes. Its counting-measure DFT is sqrt(|G|) times itself.
inline constexpr int kGaussianTruncation = 8;
Signal finite_gaussian(const GroupSpec& g, int truncation_radius = kGaussianTruncation);

// f(x) g(y) on the product group.
Signal tensor(const Signal& f, const Signal& g);

}  // namespace mildspec

#endif  // MILDSPEC_SIGNAL_HPP_
