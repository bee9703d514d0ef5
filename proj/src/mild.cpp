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

#include "mildspec/mild.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <utility>

#include "mildspec/errors.hpp"
#include "mildspec/fourier.hpp"

namespace mildspec {

std::vector<Probe> make_probes(const std::vector<Signal>& functions) {
  std::vector<Probe> probes;
  probes.reserve(functions.size());
  for (const auto& f : functions) probes.push_back({f, s0_norm(f)});
  return probes;
}

std::vector<Probe> default_probes(const GroupSpec& g, std::int64_t net_a, std::int64_t net_b) {
  return default_probes(TFLattice::uniform(g, net_a, net_b));
}

std::vector<Probe> default_probes(const TFLattice& net) {
  const GroupSpec& g = net.group();
  const Signal g0 = finite_gaussian(g);
  const double g0_norm = s0_norm(g0);
  std::vector<Probe> probes;
  for (std::size_t k = 0; k < net.time_indices().order(); ++k) {
    const GroupElement t = g.element_at(net.time_point(k));
    const Signal shifted = translate(g0, t);
    for (std::size_t l = 0; l < net.freq_indices().order(); ++l) {
      probes.push_back({modulate(shifted, g.element_at(net.freq_point(l))), g0_norm});
    }
  }
  const double dirac_norm = s0_norm(dirac(g, g.zero()));
  for (std::size_t x = 0; x < g.order(); ++x) {
    probes.push_back({dirac(g, g.element_at(x)), dirac_norm});
  }
  return probes;
}

double mild_deviation_pairing(const Signal& sigma, const Signal& sigma0,
                              std::span<const Probe> probes) {
  if (probes.empty()) throw InvalidArgument("mild deviation needs at least one probe");
  const Signal diff = sigma - sigma0;
  double dev = 0.0;
  for (const auto& p : probes) dev = std::max(dev, std::abs(pair(diff, p.f)) / (1.0 + p.s0));
  return dev;
}

double mild_deviation_pairing(const Signal& sigma, const Signal& sigma0,
                              const std::vector<Signal>& probes) {
  if (probes.empty()) throw InvalidArgument("mild deviation needs at least one probe");
  const auto p = make_probes(probes);
  return mild_deviation_pairing(sigma, sigma0, std::span<const Probe>(p));
}

double mild_deviation_stft(const Signal& sigma, const Signal& sigma0, const Signal& window) {
  return stft(sigma - sigma0, window).max_modulus;
}

double mild_deviation_coeff(const Signal& sigma, const Signal& sigma0, const GaborSystem& sys) {
  const CoefficientArray c = gabor_coefficients(sigma - sigma0, sys);
  double dev = 0.0;
  for (const auto& v : c.coeffs) dev = std::max(dev, std::abs(v));
  return dev;
}

std::vector<GroupElement> support(const Signal& sigma, double tolerance) {
  if (tolerance < 0.0) throw InvalidArgument("support tolerance must be >= 0");
  const double threshold = tolerance * sigma.norm_inf();
  std::vector<GroupElement> out;
  if (sigma.norm_inf() == 0.0) return out;
  for (std::size_t x = 0; x < sigma.size(); ++x) {
    if (std::abs(sigma[x]) > threshold) out.push_back(sigma.group().element_at(x));
  }
  return out;
}

WeightedComb comb_characterization(const Signal& sigma, const Subgroup& lattice,
                                   double tolerance) {
  return signal_to_comb(sigma, lattice, tolerance);
}

PeriodicReport periodize_analysis(const Signal& f, std::span<const std::int64_t> period) {
  const GroupSpec& g = f.group();
  if (period.size() != g.rank()) throw InvalidArgument("period needs one entry per axis");
  std::vector<std::int64_t> dual_steps(g.rank());
  for (std::size_t j = 0; j < g.rank(); ++j) {
    if (period[j] < 1 || g.modulus(j) % period[j] != 0) {
      throw InvalidArgument("period " + std::to_string(period[j]) + " does not divide " +
                            std::to_string(g.modulus(j)));
    }
    dual_steps[j] = g.modulus(j) / period[j];
  }
  Subgroup periods = lattice_subgroup(g, period);
  Subgroup spectral = lattice_subgroup(g, dual_steps);

  const double scale = std::max(1.0, f.norm_inf());
  double translate_dev = 0.0;
  for (const auto& h : periods.generators()) {
    const double dev = max_abs_diff(translate(f, h), f);
    translate_dev = std::max(translate_dev, dev);
    if (dev > 1e-10 * scale) throw NotPeriodic(h.coords, dev);
  }

  const Signal spectrum = dft(f);
  double leakage = 0.0;
  for (std::size_t s = 0; s < spectrum.size(); ++s) {
    if (!spectral.contains_index(s)) leakage = std::max(leakage, std::abs(spectrum[s]));
  }
  WeightedComb comb =
      signal_to_comb(spectrum, spectral, 1e-10 * std::max(1.0, spectrum.norm_inf()));

  // One period, summed directly.
  const GroupSpec cell{std::vector<std::int64_t>(period.begin(), period.end())};
  std::vector<Complex> F(cell.order());
  for (std::size_t n = 0; n < cell.order(); ++n) {
    Complex acc{};
    for (std::size_t t = 0; t < cell.order(); ++t) {
      const GroupElement te = cell.element_at(t);
      acc += f.at(te) * unit_root(-cell.phase_numerator_index(n, t), cell.phase_denominator());
    }
    F[n] = acc;
  }
  Signal one_period(cell, std::move(F));

  // The comb weight at s = (N/p) n should be |H| F(n).
  const double h_order = static_cast<double>(periods.order());
  double weight_residual = 0.0;
  const auto idx = spectral.indices();
  for (std::size_t p = 0; p < idx.size(); ++p) {
    GroupElement s = g.element_at(idx[p]);
    for (std::size_t j = 0; j < g.rank(); ++j) s.coords[j] /= dual_steps[j];
    weight_residual =
        std::max(weight_residual, std::abs(comb.weights[p] - h_order * one_period.at(s)));
  }

  return PeriodicReport{std::move(periods), std::move(spectral),    std::move(comb),
                        std::move(one_period), translate_dev, leakage, weight_residual};
}

DistributionSequence::DistributionSequence(std::vector<Signal> members_in, Signal limit_in)
    : group(limit_in.group()), members(std::move(members_in)), limit(std::move(limit_in)) {
  for (const auto& m : members) {
    require_same_group(m, limit);
    uniform_bound = std::max(uniform_bound, s0prime_norm(m));
  }
}

std::vector<Subgroup> refining_chain(const GroupSpec& g) {
  const auto subgroups = all_subgroups(g);
  std::vector<Subgroup> chain{subgroups.front()};
  while (chain.back().order() < g.order()) {
    const Subgroup& current = chain.back();
    for (const auto& h : subgroups) {
      if (h.order() <= current.order()) continue;
      const bool contains = std::all_of(current.indices().begin(), current.indices().end(),
                                        [&](std::size_t i) { return h.contains_index(i); });
      if (contains) {
        chain.push_back(h);
        break;
      }
    }
  }
  return chain;
}

DistributionSequence refining_comb_sequence(const GroupSpec& g) {
  std::vector<Signal> members;
  for (const auto& lattice : refining_chain(g)) {
    members.push_back(Complex(1.0 / static_cast<double>(lattice.order())) * dirac_comb(lattice));
  }
  Signal limit = Signal::constant(g, 1.0 / static_cast<double>(g.order()));
  return DistributionSequence(std::move(members), std::move(limit));
}

ConvergenceReport mild_convergence(const DistributionSequence& seq, const GaborSystem& sys,
                                   std::span<const Probe> probes) {
  ConvergenceReport report;
  const Signal g0 = finite_gaussian(seq.group);
  double sc_min = std::numeric_limits<double>::infinity(), sc_max = 0.0;
  double ps_min = std::numeric_limits<double>::infinity(), ps_max = 0.0;
  for (const auto& m : seq.members) {
    ConvergenceRow row{mild_deviation_pairing(m, seq.limit, probes),
                       mild_deviation_stft(m, seq.limit, g0),
                       mild_deviation_coeff(m, seq.limit, sys)};
    if (row.d_coeff > 0.0) {
      sc_min = std::min(sc_min, row.d_stft / row.d_coeff);
      sc_max = std::max(sc_max, row.d_stft / row.d_coeff);
    }
    if (row.d_stft > 0.0) {
      ps_min = std::min(ps_min, row.d_pair / row.d_stft);
      ps_max = std::max(ps_max, row.d_pair / row.d_stft);
    }
    report.rows.push_back(row);
  }
  if (sc_max > 0.0) {
    report.stft_over_coeff_min = sc_min;
    report.stft_over_coeff_max = sc_max;
  }
  if (ps_max > 0.0) {
    report.pair_over_stft_min = ps_min;
    report.pair_over_stft_max = ps_max;
  }
  return report;
}

}  // namespace mildspec
