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

#ifndef MILDSPEC_MILD_HPP_
#define MILDSPEC_MILD_HPP_

#include <cstdint>
#include <span>
#include <vector>

#include "mildspec/gabor.hpp"
#include "mildspec/group.hpp"
#include "mildspec/signal.hpp"

namespace mildspec {

// A test function together with its S0 norm, so that large probe families
// do not recompute the norm per deviation evaluation.
struct Probe {
  Signal f;
  double s0 = 0.0;
};

std::vector<Probe> make_probes(const std::vector<Signal>& functions);

// Time-frequency shifts pi(a k, b l) g0 of the Gaussian over a coarse net,
// followed by every Dirac. The S0 norm is invariant under time-frequency
// shifts, so it is evaluated once for g0 and once for delta_0.
std::vector<Probe> default_probes(const TFLattice& net);
std::vector<Probe> default_probes(const GroupSpec& g, std::int64_t net_a, std::int64_t net_b);

// max over probes of |pair(sigma - sigma0, f)| / (1 + ||f||_S0).
// Throws InvalidArgument on an empty probe set.
double mild_deviation_pairing(const Signal& sigma, const Signal& sigma0,
                              std::span<const Probe> probes);
double mild_deviation_pairing(const Signal& sigma, const Signal& sigma0,
                              const std::vector<Signal>& probes);

// max_{t,s} |V_g(sigma - sigma0)(t,s)|. On a finite group the time-frequency
// plane is compact, so pointwise and locally uniform convergence coincide.
double mild_deviation_stft(const Signal& sigma, const Signal& sigma0, const Signal& window);

// max_{k,l} |c_{k,l}(sigma) - c_{k,l}(sigma0)| with canonical coefficients.
double mild_deviation_coeff(const Signal& sigma, const Signal& sigma0, const GaborSystem& sys);

inline constexpr double kSupportTolerance = 1e-10;

// {x : |sigma(x)| > tolerance * max|sigma|}, in canonical order.
std::vector<GroupElement> support(const Signal& sigma, double tolerance = kSupportTolerance);

// Certifies supp(sigma) in Lambda by producing the weighted comb; the
// certificate's max_weight bounds the weights. Throws SupportViolation.
WeightedComb comb_characterization(const Signal& sigma, const Subgroup& lattice,
                                   double tolerance = kSupportTolerance);

struct PeriodicReport {
  Subgroup periods;            // H = p Z_N
  Subgroup spectral_lattice;   // H^perp = (N/p) Z_N
  WeightedComb spectrum;       // dft(f) read as a comb on H^perp
  Signal one_period_dft;       // F(n) = sum_{t in [0,p)} f(t) exp(-2 pi i n t / p)
  double max_translate_deviation = 0.0;
  double leakage = 0.0;         // max |dft f| off H^perp
  double weight_residual = 0.0; // max |w_n - |H| F(n)|
};

// Checks T_h f = f for h in pZ_N (per axis period p_j | N_j), certifies that
// the spectrum is a comb on (N/p)Z_N and compares its weights with |H| times
// the one-period DFT. Throws NotPeriodic or SupportViolation.
PeriodicReport periodize_analysis(const Signal& f, std::span<const std::int64_t> period);

struct DistributionSequence {
  GroupSpec group;
  std::vector<Signal> members;
  Signal limit;
  double uniform_bound = 0.0;  // max s0prime_norm over members

  DistributionSequence(std::vector<Signal> members, Signal limit);
};

// sigma_n = |Lambda_n|^{-1} * comb(Lambda_n) along a maximal chain
// {0} = Lambda_0 < Lambda_1 < ... < G, with limit |G|^{-1} * 1.
DistributionSequence refining_comb_sequence(const GroupSpec& g);
// The chain itself.
std::vector<Subgroup> refining_chain(const GroupSpec& g);

struct ConvergenceRow {
  double d_pair = 0.0;
  double d_stft = 0.0;
  double d_coeff = 0.0;
};

struct ConvergenceReport {
  std::vector<ConvergenceRow> rows;
  // Ranges of d_stft / d_coeff and d_pair / d_stft over rows where the
  // denominator is nonzero; zero when no such row exists.
  double stft_over_coeff_min = 0.0;
  double stft_over_coeff_max = 0.0;
  double pair_over_stft_min = 0.0;
  double pair_over_stft_max = 0.0;
};

// All three deviations of every member from the limit. The STFT deviation
// uses the Gaussian window.
ConvergenceReport mild_convergence(const DistributionSequence& seq, const GaborSystem& sys,
                                   std::span<const Probe> probes);

}  // namespace mildspec

#endif  // MILDSPEC_MILD_HPP_
