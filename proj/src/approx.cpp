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

#include "mildspec/approx.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <utility>

#include "mildspec/errors.hpp"
#include "mildspec/fourier.hpp"
#include "mildspec/gabor.hpp"

namespace mildspec {

namespace {

std::vector<double> hat(std::int64_t n, std::int64_t gap) {
  std::vector<double> v(static_cast<std::size_t>(n), 0.0);
  for (std::int64_t x = 0; x < n; ++x) {
    double acc = 0.0;
    for (std::int64_t m = -2; m <= 1; ++m) {
      const double r = std::abs(static_cast<double>(x + m * n)) / static_cast<double>(gap);
      acc += std::max(0.0, 1.0 - r);
    }
    v[static_cast<std::size_t>(x)] = acc;
  }
  return v;
}

std::vector<double> bspline2(std::int64_t n, std::int64_t gap) {
  const auto h = hat(n, gap);
  std::vector<double> v(h.size(), 0.0);
  for (std::size_t x = 0; x < h.size(); ++x) {
    double acc = 0.0;
    for (std::size_t y = 0; y < h.size(); ++y) acc += h[y] * h[(x + h.size() - y) % h.size()];
    v[x] = acc / static_cast<double>(gap);
  }
  return v;
}

std::vector<double> cell_indicator(std::int64_t n, std::int64_t gap) {
  std::vector<double> v(static_cast<std::size_t>(n), 0.0);
  for (std::int64_t off = -(gap / 2); off < gap - gap / 2; ++off) {
    v[static_cast<std::size_t>(((off % n) + n) % n)] = 1.0;
  }
  return v;
}

std::int64_t cyclic_abs(std::int64_t x, std::int64_t n) { return std::min(x, n - x); }

}  // namespace

BupuShape parse_bupu_shape(std::string_view name) {
  if (name == "triangle") return BupuShape::kTriangle;
  if (name == "bspline2") return BupuShape::kBspline2;
  if (name == "indicator") return BupuShape::kIndicator;
  throw InvalidArgument("unknown BUPU shape '" + std::string(name) + "'");
}

std::string to_string(BupuShape shape) {
  switch (shape) {
    case BupuShape::kTriangle: return "triangle";
    case BupuShape::kBspline2: return "bspline2";
    case BupuShape::kIndicator: return "indicator";
  }
  return "unknown";
}

std::vector<std::int64_t> lattice_gaps(const Subgroup& lattice) {
  const GroupSpec& g = lattice.parent();
  std::vector<std::int64_t> gaps(g.rank());
  std::size_t expected = 1;
  for (std::size_t j = 0; j < g.rank(); ++j) {
    gaps[j] = g.modulus(j);
    for (std::int64_t c = 1; c < g.modulus(j); ++c) {
      std::vector<std::int64_t> coords(g.rank(), 0);
      coords[j] = c;
      if (lattice.contains(g.element(coords))) {
        gaps[j] = c;
        break;
      }
    }
    expected *= static_cast<std::size_t>(g.modulus(j) / gaps[j]);
  }
  if (expected != lattice.order()) {
    throw InvalidArgument("incompatible lattice spacing: " + to_string(lattice) +
                          " is not a rectangular lattice");
  }
  return gaps;
}

BUPU make_bupu(const GroupSpec& g, const Subgroup& lattice, BupuShape shape) {
  if (!(lattice.parent() == g)) throw GroupMismatch("lattice does not live in " + to_string(g));
  auto gaps = lattice_gaps(lattice);
  std::vector<std::vector<double>> axes;
  for (std::size_t j = 0; j < g.rank(); ++j) {
    switch (shape) {
      case BupuShape::kTriangle: axes.push_back(hat(g.modulus(j), gaps[j])); break;
      case BupuShape::kBspline2: axes.push_back(bspline2(g.modulus(j), gaps[j])); break;
      case BupuShape::kIndicator: axes.push_back(cell_indicator(g.modulus(j), gaps[j])); break;
    }
  }
  std::vector<Complex> v(g.order());
  for (std::size_t x = 0; x < v.size(); ++x) {
    const GroupElement e = g.element_at(x);
    double prod = 1.0;
    for (std::size_t j = 0; j < g.rank(); ++j) prod *= axes[j][static_cast<std::size_t>(e.coords[j])];
    v[x] = prod;
  }
  Signal mother(g, std::move(v));
  std::vector<Signal> bumps;
  bumps.reserve(lattice.order());
  for (const auto& lambda : lattice.elements()) bumps.push_back(translate(mother, lambda));
  return BUPU{lattice, shape, std::move(gaps), std::move(mother), std::move(bumps)};
}

SampleArray::SampleArray(Subgroup lattice_in, std::vector<Complex> samples_in)
    : lattice(std::move(lattice_in)), samples(std::move(samples_in)) {
  if (samples.size() != lattice.order()) {
    throw InvalidArgument("sample array has " + std::to_string(samples.size()) +
                          " entries for a lattice of order " + std::to_string(lattice.order()));
  }
}

SampleArray sample(const Signal& f, const Subgroup& lattice) {
  if (!(f.group() == lattice.parent())) throw GroupMismatch("lattice does not live in the signal's group");
  std::vector<Complex> s;
  s.reserve(lattice.order());
  for (auto i : lattice.indices()) s.push_back(f[i]);
  return SampleArray(lattice, std::move(s));
}

Signal semidiscrete_extension(const SampleArray& c, const Signal& phi) {
  if (!(phi.group() == c.lattice.parent())) throw GroupMismatch("bump and lattice groups differ");
  return convolve(comb_to_signal(WeightedComb(c.lattice, c.samples)), phi);
}

ExtensionContract extension_contract(const Signal& phi, const Subgroup& lattice) {
  if (!(phi.group() == lattice.parent())) throw GroupMismatch("bump and lattice groups differ");
  const GroupSpec& g = phi.group();
  const double tol = 1e-12 * std::max(1.0, phi.norm_inf());
  ExtensionContract out;
  out.unit_at_origin = std::abs(phi[0] - 1.0) <= 1e-12;
  out.isolated_on_lattice = true;
  for (auto i : lattice.indices()) {
    if (i != 0 && std::abs(phi[i]) > tol) out.isolated_on_lattice = false;
  }
  std::vector<std::int64_t> gaps;
  try {
    gaps = lattice_gaps(lattice);
  } catch (const InvalidArgument&) {
    return out;
  }
  out.inside_open_cell = true;
  for (std::size_t x = 0; x < phi.size(); ++x) {
    if (std::abs(phi[x]) <= tol) continue;
    const GroupElement e = g.element_at(x);
    for (std::size_t j = 0; j < g.rank(); ++j) {
      // A full-axis gap leaves that axis unconstrained.
      if (gaps[j] < g.modulus(j) && cyclic_abs(e.coords[j], g.modulus(j)) >= gaps[j]) {
        out.inside_open_cell = false;
      }
    }
  }
  return out;
}

Signal tensor_extension(const Signal& f, const Signal& g) { return tensor(f, g); }

SamplingBound sampling_bound(const Signal& f, const Subgroup& lattice) {
  if (!(f.group() == lattice.parent())) throw GroupMismatch("lattice does not live in the signal's group");
  SamplingBound out;
  for (auto i : lattice.indices()) out.lhs += std::abs(f[i]);
  if (out.lhs > 0.0) out.ratio = out.lhs / s0_norm(f);
  return out;
}

QuasiInterpolation quasi_interpolate(const Signal& f, const Subgroup& lattice, BupuShape shape) {
  const BUPU bupu = make_bupu(f.group(), lattice, shape);
  Signal approx = semidiscrete_extension(sample(f, lattice), bupu.mother);
  const double err = max_abs_diff(approx, f);
  return {std::move(approx), err};
}

}  // namespace mildspec
