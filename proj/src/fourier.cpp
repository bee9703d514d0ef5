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

#include "mildspec/fourier.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <utility>

#include "mildspec/errors.hpp"
#include "mildspec/fft.hpp"

namespace mildspec {

namespace {

void require_parent(const Signal& f, const Subgroup& h) {
  if (!(f.group() == h.parent())) {
    throw GroupMismatch("subgroup of " + to_string(h.parent()) + " used with a signal on " +
                        to_string(f.group()));
  }
}

Signal transform(const Signal& f, fft::Direction dir, double scale) {
  std::vector<Complex> v(f.values().begin(), f.values().end());
  fft::transform(v, f.group(), dir);
  if (scale != 1.0) {
    for (auto& x : v) x *= scale;
  }
  return Signal(f.group(), std::move(v));
}

}  // namespace

Signal dft(const Signal& f, FourierConvention conv) {
  const double n = static_cast<double>(f.size());
  const double scale = conv.normalization == Normalization::kUnitary ? 1.0 / std::sqrt(n) : 1.0;
  return transform(f, fft::Direction::kForward, scale);
}

Signal idft(const Signal& f_hat, FourierConvention conv) {
  const double n = static_cast<double>(f_hat.size());
  const double scale =
      conv.normalization == Normalization::kUnitary ? 1.0 / std::sqrt(n) : 1.0 / n;
  return transform(f_hat, fft::Direction::kInverse, scale);
}

Signal mild_ft(const Signal& sigma) { return dft(sigma); }

Signal convolve(const Signal& f, const Signal& g) {
  require_same_group(f, g);
  return idft(multiply(dft(f), dft(g)));
}

Signal restriction(const Signal& f, const Subgroup& h) {
  require_parent(f, h);
  const GroupSpec& hg = h.coordinate_group();
  std::vector<Complex> v(hg.order());
  for (std::size_t c = 0; c < v.size(); ++c) v[c] = f[h.embed_index(c)];
  return Signal(hg, std::move(v));
}

Signal adjoint_restriction(const Signal& mu, const Subgroup& h) {
  if (!(mu.group() == h.coordinate_group())) {
    throw GroupMismatch("signal on " + to_string(mu.group()) +
                        " is not indexed by the coordinate group of the subgroup");
  }
  std::vector<Complex> v(h.parent().order());
  for (std::size_t c = 0; c < mu.size(); ++c) v[h.embed_index(c)] = mu[c];
  return Signal(h.parent(), std::move(v));
}

CosetSignal weil_map(const Signal& f, const Subgroup& h) {
  require_parent(f, h);
  CosetSignal out{quotient(f.group(), h), {}};
  out.values.assign(out.quotient.size(), Complex{});
  for (std::size_t x = 0; x < f.size(); ++x) out.values[out.quotient.coset_of[x]] += f[x];
  return out;
}

WeightedComb dft_quotient(const CosetSignal& f) {
  const GroupSpec& g = f.quotient.parent;
  Subgroup dual = annihilator(f.quotient.subgroup);
  std::vector<Complex> w(dual.order());
  std::vector<std::size_t> reps;
  for (const auto& r : f.quotient.representatives) reps.push_back(g.index_of(r));
  const auto idx = dual.indices();
  for (std::size_t p = 0; p < idx.size(); ++p) {
    Complex acc{};
    for (std::size_t c = 0; c < reps.size(); ++c) {
      acc += f.values[c] * unit_root(-g.phase_numerator_index(idx[p], reps[c]),
                                     g.phase_denominator());
    }
    w[p] = acc;
  }
  return WeightedComb(std::move(dual), std::move(w));
}

PoissonResult poisson_check(const Signal& f, const Subgroup& h) {
  require_parent(f, h);
  const Subgroup perp = annihilator(h);
  const std::size_t n = f.group().order();
  if (h.order() * perp.order() != n) {
    throw std::logic_error("|H| |H^perp| != |G| for " + to_string(h));
  }
  const double constant = static_cast<double>(h.order()) / static_cast<double>(n);

  Complex lhs{};
  for (auto i : h.indices()) lhs += f[i];
  const Signal spectrum = dft(f);
  Complex sum{};
  for (auto s : perp.indices()) sum += spectrum[s];
  const Complex rhs = constant * sum;
  return {lhs, rhs, std::abs(lhs - rhs), constant};
}

DualityResult duality_sampling_periodization(const Signal& f, const Subgroup& h) {
  require_parent(f, h);
  const Subgroup perp = annihilator(h);
  DualityResult out{weil_map(dft(f), perp), {}, 0.0};

  const Signal sampled = dft(restriction(f, h));
  const double factor = static_cast<double>(perp.order());
  const auto& reps = out.periodized_spectrum.quotient.representatives;
  out.sampled_spectrum.resize(reps.size());
  for (std::size_t c = 0; c < reps.size(); ++c) {
    const GroupElement image = h.dual_image(reps[c]);
    out.sampled_spectrum[c] = factor * sampled.at(image);
    out.max_residual = std::max(
        out.max_residual, std::abs(out.periodized_spectrum.values[c] - out.sampled_spectrum[c]));
  }
  return out;
}

WeightedComb comb_ft(const Subgroup& lattice) {
  const Signal spectrum = dft(dirac_comb(lattice));
  return signal_to_comb(spectrum, annihilator(lattice), 1e-10);
}

}  // namespace mildspec
