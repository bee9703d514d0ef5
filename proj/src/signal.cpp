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

#include "mildspec/signal.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <utility>

#include "mildspec/errors.hpp"

namespace mildspec {

Signal::Signal(GroupSpec group, std::vector<Complex> values)
    : group_(std::move(group)), values_(std::move(values)) {
  if (values_.size() != group_.order()) {
    throw InvalidArgument("signal has " + std::to_string(values_.size()) +
                          " values for a group of order " + std::to_string(group_.order()));
  }
  for (const auto& v : values_) {
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
      throw InvalidArgument("signal values must be finite");
    }
  }
}

Signal Signal::zeros(const GroupSpec& group) {
  return Signal(group, std::vector<Complex>(group.order()));
}

Signal Signal::constant(const GroupSpec& group, Complex value) {
  return Signal(group, std::vector<Complex>(group.order(), value));
}

double Signal::norm1() const {
  double acc = 0.0;
  for (const auto& v : values_) acc += std::abs(v);
  return acc;
}

double Signal::norm2() const {
  double acc = 0.0;
  for (const auto& v : values_) acc += std::norm(v);
  return std::sqrt(acc);
}

double Signal::norm_inf() const {
  double acc = 0.0;
  for (const auto& v : values_) acc = std::max(acc, std::abs(v));
  return acc;
}

Signal Signal::conj() const {
  std::vector<Complex> out(values_.size());
  std::transform(values_.begin(), values_.end(), out.begin(),
                 [](Complex v) { return std::conj(v); });
  return Signal(group_, std::move(out));
}

Signal Signal::reflect() const {
  std::vector<Complex> out(values_.size());
  for (std::size_t x = 0; x < values_.size(); ++x) out[group_.negate_index(x)] = values_[x];
  return Signal(group_, std::move(out));
}

void require_same_group(const Signal& a, const Signal& b) {
  if (!(a.group() == b.group())) {
    throw GroupMismatch("signals live on " + to_string(a.group()) + " and " +
                        to_string(b.group()));
  }
}

Signal& Signal::operator+=(const Signal& other) {
  require_same_group(*this, other);
  for (std::size_t i = 0; i < values_.size(); ++i) values_[i] += other.values_[i];
  return *this;
}

Signal& Signal::operator-=(const Signal& other) {
  require_same_group(*this, other);
  for (std::size_t i = 0; i < values_.size(); ++i) values_[i] -= other.values_[i];
  return *this;
}

Signal& Signal::operator*=(Complex alpha) {
  for (auto& v : values_) v *= alpha;
  return *this;
}

Signal operator+(Signal a, const Signal& b) { return a += b; }
Signal operator-(Signal a, const Signal& b) { return a -= b; }
Signal operator*(Complex alpha, Signal f) { return f *= alpha; }

Signal multiply(const Signal& a, const Signal& b) {
  require_same_group(a, b);
  std::vector<Complex> out(a.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = a[i] * b[i];
  return Signal(a.group(), std::move(out));
}

Complex pair(const Signal& sigma, const Signal& f) {
  require_same_group(sigma, f);
  Complex acc{};
  for (std::size_t i = 0; i < f.size(); ++i) acc += sigma[i] * f[i];
  return acc;
}

Complex inner(const Signal& f, const Signal& g) {
  require_same_group(f, g);
  Complex acc{};
  for (std::size_t i = 0; i < f.size(); ++i) acc += f[i] * std::conj(g[i]);
  return acc;
}

double max_abs_diff(const Signal& a, const Signal& b) {
  require_same_group(a, b);
  double acc = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) acc = std::max(acc, std::abs(a[i] - b[i]));
  return acc;
}

WeightedComb::WeightedComb(Subgroup lattice_in, std::vector<Complex> weights_in)
    : lattice(std::move(lattice_in)), weights(std::move(weights_in)) {
  if (weights.size() != lattice.order()) {
    throw InvalidArgument("comb has " + std::to_string(weights.size()) +
                          " weights for a lattice of order " + std::to_string(lattice.order()));
  }
  for (const auto& w : weights) max_weight = std::max(max_weight, std::abs(w));
}

Signal dirac(const GroupSpec& g, const GroupElement& x) {
  std::vector<Complex> v(g.order());
  v[g.index_of(x)] = 1.0;
  return Signal(g, std::move(v));
}

Signal pure_frequency(const GroupSpec& g, const GroupElement& s) {
  const std::size_t si = g.index_of(s);
  std::vector<Complex> v(g.order());
  for (std::size_t x = 0; x < v.size(); ++x) {
    v[x] = unit_root(g.phase_numerator_index(si, x), g.phase_denominator());
  }
  return Signal(g, std::move(v));
}

Signal dirac_comb(const Subgroup& lattice) {
  std::vector<Complex> v(lattice.parent().order());
  for (auto i : lattice.indices()) v[i] = 1.0;
  return Signal(lattice.parent(), std::move(v));
}

Signal comb_to_signal(const WeightedComb& comb) {
  std::vector<Complex> v(comb.lattice.parent().order());
  const auto idx = comb.lattice.indices();
  for (std::size_t p = 0; p < idx.size(); ++p) v[idx[p]] = comb.weights[p];
  return Signal(comb.lattice.parent(), std::move(v));
}

WeightedComb signal_to_comb(const Signal& f, const Subgroup& lattice, double tolerance) {
  if (!(f.group() == lattice.parent())) {
    throw GroupMismatch("lattice does not live in " + to_string(f.group()));
  }
  for (std::size_t x = 0; x < f.size(); ++x) {
    if (!lattice.contains_index(x) && std::abs(f[x]) > tolerance) {
      throw SupportViolation(f.group().element_at(x).coords, std::abs(f[x]));
    }
  }
  std::vector<Complex> w;
  w.reserve(lattice.order());
  for (auto i : lattice.indices()) w.push_back(f[i]);
  return WeightedComb(lattice, std::move(w));
}

Signal translate(const Signal& f, const GroupElement& t) {
  const GroupSpec& g = f.group();
  const std::size_t ti = g.index_of(t);
  std::vector<Complex> v(f.size());
  for (std::size_t x = 0; x < v.size(); ++x) v[g.add_index(x, ti)] = f[x];
  return Signal(g, std::move(v));
}

Signal modulate(const Signal& f, const GroupElement& s) {
  return multiply(pure_frequency(f.group(), s), f);
}

Signal tf_shift(const Signal& f, const GroupElement& t, const GroupElement& s) {
  return modulate(translate(f, t), s);
}

namespace {

std::vector<double> periodized_gaussian(std::int64_t n, int radius) {
  std::vector<double> v(static_cast<std::size_t>(n));
  const double dn = static_cast<double>(n);
  for (std::int64_t k = 0; k < n; ++k) {
    // Sum smallest terms first.
    double acc = 0.0;
    for (int m = radius; m >= 1; --m) {
      const double a = static_cast<double>(k + m * n);
      const double b = static_cast<double>(k - m * n);
      acc += std::exp(-std::numbers::pi * a * a / dn) + std::exp(-std::numbers::pi * b * b / dn);
    }
    const double c = static_cast<double>(k);
    acc += std::exp(-std::numbers::pi * c * c / dn);
    v[static_cast<std::size_t>(k)] = acc;
  }
  return v;
}

}  // namespace

Signal finite_gaussian(const GroupSpec& g, int truncation_radius) {
  if (truncation_radius < 0) throw InvalidArgument("truncation radius must be >= 0");
  std::vector<std::vector<double>> axes;
  for (std::size_t j = 0; j < g.rank(); ++j) {
    axes.push_back(periodized_gaussian(g.modulus(j), truncation_radius));
  }
  std::vector<Complex> v(g.order());
  for (std::size_t x = 0; x < v.size(); ++x) {
    const GroupElement e = g.element_at(x);
    double prod = 1.0;
    for (std::size_t j = 0; j < g.rank(); ++j) {
      prod *= axes[j][static_cast<std::size_t>(e.coords[j])];
    }
    v[x] = prod;
  }
  return Signal(g, std::move(v));
}

Signal tensor(const Signal& f, const Signal& g) {
  const GroupSpec prod = f.group().product(g.group());
  std::vector<Complex> v(prod.order());
  for (std::size_t x = 0; x < f.size(); ++x) {
    for (std::size_t y = 0; y < g.size(); ++y) v[x * g.size() + y] = f[x] * g[y];
  }
  return Signal(prod, std::move(v));
}

}  // namespace mildspec
