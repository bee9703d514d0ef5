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

#ifndef MILDSPEC_FOURIER_HPP_
#define MILDSPEC_FOURIER_HPP_

#include <vector>

#include "mildspec/group.hpp"
#include "mildspec/signal.hpp"

namespace mildspec {

// Haar measure choice. kCounting puts counting measure on G and 1/|G| on the
// dual, so chi_r -> |G| delta_r, combs pick up |Lambda| and Poisson picks up
// |H|/|G|. kUnitary scales by 1/sqrt(|G|) both ways.
enum class Normalization { kCounting, kUnitary };

// The forward exponent sign is always negative.
struct FourierConvention {
  Normalization normalization = Normalization::kCounting;
};

// f^(s) = sum_x f(x) conj(chi_s(x)) (counting), via FFT along every axis.
Signal dft(const Signal& f, FourierConvention conv = {});
Signal idft(const Signal& f_hat, FourierConvention conv = {});

// Fourier transform of a distribution, defined through
// pair(mild_ft(sigma), f) == pair(sigma, dft(f)). On finite groups this is
// the counting-convention DFT.
Signal mild_ft(const Signal& sigma);

// Cyclic convolution (f * g)(x) = sum_y f(y) g(x - y).
Signal convolve(const Signal& f, const Signal& g);

// Sampling: (R_H f)(c) = f(embed(c)), a signal on H's coordinate group.
Signal restriction(const Signal& f, const Subgroup& h);
// R_H^*: places mu on H inside G, zero elsewhere.
Signal adjoint_restriction(const Signal& mu, const Subgroup& h);

// A function on G/H, one value per coset in QuotientSpec order.
struct CosetSignal {
  QuotientSpec quotient;
  std::vector<Complex> values;
};

// T_H f(x + H) = sum_{xi in H} f(x + xi).
CosetSignal weil_map(const Signal& f, const Subgroup& h);

// DFT over G/H, whose dual is H^perp: returns the comb on H^perp with weights
// sum over cosets F(x + H) conj(chi_s(x)).
WeightedComb dft_quotient(const CosetSignal& f);

struct PoissonResult {
  Complex lhs;        // sum_{h in H} f(h)
  Complex rhs;        // constant * sum_{s in H^perp} f^(s)
  double residual;    // |lhs - rhs|
  double constant;    // |H| / |G|, equal to 1 / |H^perp|
};
PoissonResult poisson_check(const Signal& f, const Subgroup& h);

// T_{H^perp}(dft_G f) against |H^perp| dft_H(R_H f), matched through
// G^/H^perp = H^ via Subgroup::dual_image.
struct DualityResult {
  CosetSignal periodized_spectrum;       // left-hand side
  std::vector<Complex> sampled_spectrum;  // right-hand side, same coset order
  double max_residual;
};
DualityResult duality_sampling_periodization(const Signal& f, const Subgroup& h);

// dft(comb over Lambda) as a weighted comb on Lambda^perp (weights |Lambda|).
WeightedComb comb_ft(const Subgroup& lattice);

}  // namespace mildspec

#endif  // MILDSPEC_FOURIER_HPP_
