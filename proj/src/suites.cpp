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

#include "mildspec/suites.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <map>
#include <numeric>
#include <numbers>
#include <random>
#include <set>
#include <sstream>

#include <Eigen/Dense>

#include "mildspec/approx.hpp"
#include "mildspec/errors.hpp"
#include "mildspec/fourier.hpp"
#include "mildspec/gabor.hpp"
#include "mildspec/mild.hpp"

namespace mildspec {

namespace {

using io::Json;
using C = Complex;

// Bit-level draws so reports do not depend on the standard library's
// distribution implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53 * 2.0 - 1.0; }
  std::size_t index(std::size_t n) { return static_cast<std::size_t>(engine_() % n); }

 private:
  std::mt19937_64 engine_;
};

Signal random_signal(const GroupSpec& g, Rng& rng) {
  std::vector<C> v(g.order());
  for (auto& x : v) {
    const double re = rng.uniform();
    x = {re, rng.uniform()};
  }
  return Signal(g, std::move(v));
}

double rel_diff(std::span<const C> a, std::span<const C> b) {
  double num = 0.0, den = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    num += std::norm(a[i] - b[i]);
    den += std::norm(b[i]);
  }
  return den == 0.0 ? std::sqrt(num) : std::sqrt(num / den);
}

double rel_diff(const Signal& a, const Signal& b) { return rel_diff(a.values(), b.values()); }

// Character table route: exp(-2 pi i k / L) tabulated in long double and
// indexed by the integer phase numerator.
class CharacterTable {
 public:
  explicit CharacterTable(const GroupSpec& g) : g_(g), l_(g.phase_denominator()) {
    roots_.resize(static_cast<std::size_t>(l_));
    for (std::int64_t k = 0; k < l_; ++k) {
      const long double theta = -2.0L * std::numbers::pi_v<long double> * k / l_;
      roots_[k] = {static_cast<double>(std::cos(theta)), static_cast<double>(std::sin(theta))};
    }
  }
  // conj(chi_s(x))
  C conj_chi(std::size_t s, std::size_t x) const {
    return roots_[static_cast<std::size_t>(g_.phase_numerator_index(s, x) % l_)];
  }
  Signal dft(const Signal& f) const {
    std::vector<C> out(g_.order());
    for (std::size_t s = 0; s < g_.order(); ++s) {
      std::complex<long double> acc{};
      for (std::size_t x = 0; x < g_.order(); ++x) {
        acc += std::complex<long double>(f[x]) * std::complex<long double>(conj_chi(s, x));
      }
      out[s] = {static_cast<double>(acc.real()), static_cast<double>(acc.imag())};
    }
    return Signal(g_, std::move(out));
  }

 private:
  GroupSpec g_;
  std::int64_t l_;
  std::vector<C> roots_;
};

class Recorder {
 public:
  Recorder(RunReport& report, const SuiteOptions& options)
      : report_(report), options_(options), group_(to_string(options.group)) {}

  void check(std::string name, double residual, double threshold, std::string subgroup = {},
             std::string note = {}) {
    if (options_.tolerance && threshold > 0.0) threshold = *options_.tolerance;
    push(std::move(name), residual, threshold, "<=", std::move(subgroup), std::move(note), false);
  }
  // Structural checks: the residual counts violations and must be zero.
  void exact(std::string name, double residual, std::string subgroup = {}, std::string note = {}) {
    push(std::move(name), residual, 0.0, "<=", std::move(subgroup), std::move(note), false);
  }
  void at_least(std::string name, double value, double bound, std::string note = {}) {
    push(std::move(name), value, bound, ">=", {}, std::move(note), false);
  }
  void expected_negative(std::string name, double residual, double threshold, bool pass,
                         std::string note) {
    CheckResult c{std::move(name), group_, {}, residual, threshold, ">=", pass, true, std::move(note)};
    report_.checks.push_back(std::move(c));
  }
  void measure(std::string name, double value, std::string note = {}) {
    report_.measurements.push_back({std::move(name), value, std::move(note)});
  }

 private:
  void push(std::string name, double residual, double threshold, std::string relation,
            std::string subgroup, std::string note, bool negative) {
    const bool ok = std::isfinite(residual) &&
                    (relation == "<=" ? residual <= threshold : residual >= threshold);
    report_.checks.push_back({std::move(name), group_, std::move(subgroup), residual, threshold,
                              std::move(relation), ok, negative, std::move(note)});
  }

  RunReport& report_;
  const SuiteOptions& options_;
  std::string group_;
};

std::vector<Subgroup> subgroup_matrix(const GroupSpec& g, Rng& rng) {
  if (g.rank() <= 2 && g.order() <= 1024) return all_subgroups(g);
  std::vector<Subgroup> out{trivial_subgroup(g), full_subgroup(g)};
  for (std::size_t j = 0; j < g.rank(); ++j) {
    const std::vector<std::size_t> axis{j};
    out.push_back(factor_subgroup(g, axis));
  }
  for (int i = 0; i < 6; ++i) {
    out.emplace_back(g, std::vector<GroupElement>{g.element_at(rng.index(g.order()))});
    out.emplace_back(g, std::vector<GroupElement>{g.element_at(rng.index(g.order())),
                                                  g.element_at(rng.index(g.order()))});
  }
  std::set<std::vector<std::size_t>> seen;
  std::vector<Subgroup> unique;
  for (auto& h : out) {
    if (seen.insert({h.indices().begin(), h.indices().end()}).second) unique.push_back(std::move(h));
  }
  std::stable_sort(unique.begin(), unique.end(),
                   [](const Subgroup& x, const Subgroup& y) { return x.order() < y.order(); });
  return unique;
}

bool is_rectangular(const Subgroup& h) {
  try {
    lattice_gaps(h);
    return true;
  } catch (const InvalidArgument&) {
    return false;
  }
}

std::int64_t smallest_prime_factor(std::int64_t n) {
  for (std::int64_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) return p;
  }
  return n;
}

// Per axis, the smallest step d with (N / d) no larger than the largest m
// satisfying m^rank <= 16, keeping the probe net near 256 TF points.
TFLattice probe_net(const GroupSpec& g) {
  std::int64_t limit = 1;
  auto power = [&](std::int64_t m) {
    std::int64_t v = 1;
    for (std::size_t j = 0; j < g.rank(); ++j) v *= m;
    return v;
  };
  while (power(limit + 1) <= 16) ++limit;
  std::vector<std::int64_t> steps(g.rank());
  for (std::size_t j = 0; j < g.rank(); ++j) {
    const std::int64_t n = g.modulus(j);
    std::int64_t d = 1;
    while (n / d > limit || n % d != 0) ++d;
    steps[j] = d;
  }
  return TFLattice(g, steps, steps);
}

std::vector<std::int64_t> expand(const std::optional<std::vector<std::int64_t>>& given,
                                 const std::vector<std::int64_t>& fallback, const char* what) {
  if (!given) return fallback;
  if (given->size() == 1) return std::vector<std::int64_t>(fallback.size(), given->front());
  if (given->size() != fallback.size()) {
    throw InvalidArgument(std::string(what) + " needs one value or one per axis");
  }
  return *given;
}

std::string steps_to_string(const std::vector<std::int64_t>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
  return out;
}

// ---------------------------------------------------------------------------

void group_suite(Recorder& rec, const GroupSpec& g, Rng& rng) {
  double mult = 0.0, modulus = 0.0, symmetry = 0.0, direct = 0.0;
  for (int trial = 0; trial < 200; ++trial) {
    const auto s = g.element_at(rng.index(g.order()));
    const auto x = g.element_at(rng.index(g.order()));
    const auto y = g.element_at(rng.index(g.order()));
    const C cx = character(g, s, x);
    mult = std::max(mult, std::abs(character(g, s, g.add(x, y)) - cx * character(g, s, y)));
    modulus = std::max(modulus, std::abs(std::abs(cx) - 1.0));
    symmetry = std::max(symmetry, std::abs(cx - character(g, x, s)));
    long double phase = 0.0L;
    for (std::size_t j = 0; j < g.rank(); ++j) {
      phase += static_cast<long double>(s.coords[j] * x.coords[j] % g.modulus(j)) / g.modulus(j);
    }
    const long double theta = 2.0L * std::numbers::pi_v<long double> * phase;
    direct = std::max(direct, std::abs(cx - C(static_cast<double>(std::cos(theta)),
                                              static_cast<double>(std::sin(theta)))));
  }
  rec.check("character_multiplicativity", mult, 1e-12);
  rec.check("character_unit_modulus", modulus, 1e-14);
  rec.check("character_symmetry", symmetry, 1e-15);
  rec.check("character_direct_evaluation", direct, 1e-13);

  const auto subgroups = subgroup_matrix(g, rng);
  const bool complete = g.rank() <= 2 && g.order() <= 1024;
  rec.measure("subgroups_examined", static_cast<double>(subgroups.size()),
              complete ? "every subgroup" : "sampled family");
  const std::int64_t l = g.phase_denominator();
  for (const auto& h : subgroups) {
    const std::string label = to_string(h);
    // Closure under addition and negation.
    std::size_t bad = h.contains(g.zero()) ? 0 : 1;
    const std::size_t n = h.order();
    if (n * n <= 65536) {
      for (auto i : h.indices()) {
        if (!h.contains_index(g.negate_index(i))) ++bad;
        for (auto j : h.indices()) {
          if (!h.contains_index(g.add_index(i, j))) ++bad;
        }
      }
    } else {
      for (int t = 0; t < 4096; ++t) {
        const auto i = h.indices()[rng.index(n)], j = h.indices()[rng.index(n)];
        if (!h.contains_index(g.add_index(i, j)) || !h.contains_index(g.negate_index(i))) ++bad;
      }
    }
    rec.exact("subgroup_closure", static_cast<double>(bad), label);

    const Subgroup perp = annihilator(h);
    rec.exact("order_duality",
              std::abs(static_cast<double>(h.order() * perp.order()) - static_cast<double>(g.order())),
              label);
    rec.exact("biduality", annihilator(perp) == h ? 0.0 : 1.0, label);

    // Every s, tested against every element of H rather than generators.
    if (g.order() * h.order() <= 4'000'000) {
      std::size_t mismatched = 0;
      for (std::size_t s = 0; s < g.order(); ++s) {
        bool trivial = true;
        for (auto x : h.indices()) {
          if (g.phase_numerator_index(s, x) % l != 0) {
            trivial = false;
            break;
          }
        }
        if (trivial != perp.contains_index(s)) ++mismatched;
      }
      rec.exact("annihilator_brute_force", static_cast<double>(mismatched), label);
    }

    const QuotientSpec q = quotient(g, h);
    std::vector<std::size_t> sizes(q.size(), 0);
    std::size_t misplaced = 0;
    for (std::size_t x = 0; x < g.order(); ++x) {
      const std::size_t c = q.coset_of[x];
      ++sizes[c];
      const std::size_t rep = g.index_of(q.representatives[c]);
      if (!h.contains_index(g.sub_index(x, rep)) || g.element_at(x) < q.representatives[c]) ++misplaced;
    }
    for (auto sz : sizes) {
      if (sz != h.order()) ++misplaced;
    }
    rec.exact("coset_partition", static_cast<double>(misplaced), label);

    // The coordinate isomorphism is a bijection and carries characters.
    const GroupSpec& cg = h.coordinate_group();
    std::vector<std::size_t> image;
    for (std::size_t i = 0; i < cg.order(); ++i) image.push_back(h.embed_index(i));
    std::sort(image.begin(), image.end());
    const bool bijective = cg.order() == h.order() &&
                           std::equal(image.begin(), image.end(), h.indices().begin());
    rec.exact("basis_bijection", bijective ? 0.0 : 1.0, label);
    double carried = 0.0;
    for (int t = 0; t < 4 && bijective; ++t) {
      const auto s = g.element_at(rng.index(g.order()));
      const auto r = h.dual_image(s);
      for (std::size_t i = 0; i < cg.order(); ++i) {
        carried = std::max(carried, std::abs(character(cg, r, cg.element_at(i)) -
                                             character(g, s, g.element_at(h.embed_index(i)))));
      }
    }
    rec.check("dual_image_restriction", carried, 1e-12, label);
  }
}

// ---------------------------------------------------------------------------

void fourier_suite(Recorder& rec, const GroupSpec& g, Rng& rng, int samples) {
  const CharacterTable table(g);
  const double order = static_cast<double>(g.order());
  double naive = 0.0, inversion = 0.0, plancherel = 0.0, unitary_inv = 0.0, unitary_norm = 0.0,
         reflection = 0.0, pairing = 0.0;
  const FourierConvention unitary{Normalization::kUnitary};
  for (int i = 0; i < samples; ++i) {
    const Signal f = random_signal(g, rng);
    const Signal fhat = dft(f);
    if (i < 3) naive = std::max(naive, rel_diff(fhat, table.dft(f)));
    inversion = std::max(inversion, rel_diff(idft(fhat), f));
    const double e = f.norm2() * f.norm2();
    plancherel = std::max(plancherel, std::abs(fhat.norm2() * fhat.norm2() - order * e) / (order * e));
    const Signal uhat = dft(f, unitary);
    unitary_inv = std::max(unitary_inv, rel_diff(idft(uhat, unitary), f));
    unitary_norm = std::max(unitary_norm, std::abs(uhat.norm2() - f.norm2()) / f.norm2());
    reflection = std::max(reflection, rel_diff(dft(fhat), C(order) * f.reflect()));
    const Signal sigma = random_signal(g, rng);
    const C lhs = pair(mild_ft(sigma), f), rhs = pair(sigma, fhat);
    pairing = std::max(pairing, std::abs(lhs - rhs) / (sigma.norm2() * fhat.norm2()));
  }
  rec.check("fft_vs_naive_dft", naive, 1e-12);
  rec.check("inversion", inversion, 1e-10);
  rec.check("plancherel", plancherel, 1e-12);
  rec.check("unitary_inversion", unitary_inv, 1e-10);
  rec.check("unitary_isometry", unitary_norm, 1e-12);
  rec.check("double_transform_reflects", reflection, 1e-12);
  rec.check("mild_ft_pairing", pairing, 1e-12);

  double deltas = 0.0, conj_freq = 0.0;
  const std::size_t count = std::min<std::size_t>(g.order(), 256);
  for (std::size_t i = 0; i < count; ++i) {
    const std::size_t r = g.order() <= 256 ? i : rng.index(g.order());
    const GroupElement re = g.element_at(r);
    deltas = std::max(deltas, max_abs_diff(dft(pure_frequency(g, re)), C(order) * dirac(g, re)));
    conj_freq = std::max(conj_freq, max_abs_diff(mild_ft(dirac(g, re)), pure_frequency(g, re).conj()));
  }
  rec.check("frequencies_to_deltas", deltas, 1e-10 * std::max(1.0, order / 64.0));
  rec.check("mild_ft_of_dirac", conj_freq, 1e-12);

  const Signal g0 = finite_gaussian(g);
  const double root = std::sqrt(order);
  rec.check("gaussian_self_duality", max_abs_diff(dft(g0), C(root) * g0), 1e-8 * root);

  for (const auto& h : subgroup_matrix(g, rng)) {
    const std::string label = to_string(h);
    const Signal f = random_signal(g, rng);
    rec.check("poisson_summation", poisson_check(f, h).residual, 1e-10 * (f.norm1() + 1.0), label);

    const WeightedComb comb = comb_ft(h);
    double comb_err = comb.lattice == annihilator(h) ? 0.0 : INFINITY;
    for (const auto& w : comb.weights) comb_err = std::max(comb_err, std::abs(w - C(h.order())));
    rec.check("comb_duality", comb_err, 1e-10, label);

    rec.check("sampling_periodization_duality", duality_sampling_periodization(f, h).max_residual, 1e-10,
              label);

    const WeightedComb q = dft_quotient(weil_map(f, h));
    const Signal fhat = dft(f);
    double weil = 0.0;
    for (std::size_t i = 0; i < q.weights.size(); ++i) {
      weil = std::max(weil, std::abs(q.weights[i] - fhat[q.lattice.indices()[i]]));
    }
    rec.check("quotient_spectrum", weil, 1e-10, label);

    const Signal mu = random_signal(h.coordinate_group(), rng);
    C direct{};
    for (std::size_t i = 0; i < mu.size(); ++i) direct += mu[i] * f[h.embed_index(i)];
    rec.check("adjoint_restriction_pairing",
              std::abs(pair(adjoint_restriction(mu, h), f) - direct) / (mu.norm2() * f.norm2()), 1e-12,
              label);

    const GroupElement s = g.element_at(rng.index(g.order()));
    rec.check("restricted_character",
              max_abs_diff(restriction(pure_frequency(g, s), h),
                           pure_frequency(h.coordinate_group(), h.dual_image(s))),
              1e-12, label);
  }
}

// ---------------------------------------------------------------------------

Eigen::VectorXcd to_vector(const Signal& f) {
  Eigen::VectorXcd v(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) v(i) = f[i];
  return v;
}

void gabor_suite(Recorder& rec, const SuiteOptions& o, Rng& rng) {
  const GroupSpec& g = o.group;
  const auto a = expand(o.a, default_tf_steps(g), "--a");
  const auto b = expand(o.b, default_tf_steps(g), "--b");
  const TFLattice lat(g, a, b);
  const Signal g0 = finite_gaussian(g);
  const double order = static_cast<double>(g.order());
  rec.measure("redundancy", lat.redundancy(), "a=" + steps_to_string(a) + " b=" + steps_to_string(b));
  rec.measure("window_l2_norm", g0.norm2(), "finite Gaussian, stored unnormalized");

  const CharacterTable table(g);
  {
    const Signal f = random_signal(g, rng), w = random_signal(g, rng);
    const STFTGrid v = stft(f, w);
    double worst = 0.0;
    for (int i = 0; i < 64; ++i) {
      const std::size_t t = rng.index(g.order()), s = rng.index(g.order());
      C acc{};
      for (std::size_t x = 0; x < g.order(); ++x) {
        acc += f[x] * table.conj_chi(s, x) * std::conj(w[g.sub_index(x, t)]);
      }
      worst = std::max(worst, std::abs(v.at(t, s) - acc));
    }
    rec.check("stft_vs_direct", worst / v.max_modulus, 1e-11);

    double energy = 0.0;
    for (const auto& x : v.values) energy += std::norm(x);
    const double moyal = order * std::pow(f.norm2() * w.norm2(), 2);
    rec.check("moyal_identity", std::abs(energy - moyal) / moyal, 1e-10);

    const STFTGrid vf = stft(f, g0), vhat = stft(dft(f), g0);
    double rot = 0.0;
    for (std::size_t t = 0; t < g.order(); ++t) {
      for (std::size_t s = 0; s < g.order(); ++s) {
        rot = std::max(rot, std::abs(std::abs(vhat.at(t, s)) -
                                     std::sqrt(order) * std::abs(vf.at(g.negate_index(s), t))));
      }
    }
    rec.check("fourier_rotation", rot / vhat.max_modulus, 1e-9);

    const std::size_t u = rng.index(g.order()), om = rng.index(g.order());
    const STFTGrid moved = stft(tf_shift(f, g.element_at(u), g.element_at(om)), g0);
    double cov = 0.0;
    for (std::size_t t = 0; t < g.order(); ++t) {
      for (std::size_t s = 0; s < g.order(); ++s) {
        cov = std::max(cov, std::abs(std::abs(moved.at(t, s)) -
                                     std::abs(vf.at(g.sub_index(t, u), g.sub_index(s, om)))));
      }
    }
    rec.check("stft_covariance", cov / vf.max_modulus, 1e-10);
  }

  const GaborSystem sys(g0, lat);
  const FrameBounds fb = sys.bounds();
  rec.measure("frame_lower_bound", fb.lower);
  rec.measure("frame_upper_bound", fb.upper);
  rec.exact("frame_bounds_ordered", std::max(0.0, fb.lower - fb.upper * (1.0 + 1e-12)));
  {
    const Signal f = random_signal(g, rng), h = random_signal(g, rng);
    const Signal sf = frame_operator(sys, f);
    const Eigen::VectorXcd mf = sys.frame_matrix() * to_vector(f);
    rec.check("frame_matrix_vs_fast", (mf - to_vector(sf)).norm() / mf.norm(), 1e-10);
    rec.check("frame_operator_self_adjoint",
              std::abs(inner(sf, h) - inner(f, frame_operator(sys, h))) / (sf.norm2() * h.norm2()), 1e-12);
    double commute = 0.0;
    for (int i = 0; i < 4; ++i) {
      const auto t = g.element_at(lat.time_point(rng.index(lat.time_indices().order())));
      const auto s = g.element_at(lat.freq_point(rng.index(lat.freq_indices().order())));
      commute = std::max(commute, rel_diff(frame_operator(sys, tf_shift(f, t, s)), tf_shift(sf, t, s)));
    }
    rec.check("frame_operator_commutation", commute, 1e-10);
  }

  const double ratio = fb.upper > 0.0 ? fb.lower / fb.upper : 0.0;
  if (!sys.is_frame()) {
    std::ostringstream note;
    note << "NotAFrame: lower bound " << fb.lower << ", upper bound " << fb.upper << ", redundancy "
         << lat.redundancy();
    rec.expected_negative("frame_existence", ratio, kFrameTolerance, lat.redundancy() <= 1.0, note.str());
    return;
  }
  rec.at_least("frame_certified", ratio, kFrameTolerance, "lower / upper frame bound");

  const Signal& dual = sys.canonical_dual();
  rec.check("dual_residual", (frame_operator(sys, dual) - g0).norm2() / g0.norm2(), 1e-9);
  double r1 = 0.0, r2 = 0.0, bound = 0.0;
  for (int i = 0; i < o.samples; ++i) {
    const Signal f = random_signal(g, rng);
    r1 = std::max(r1, rel_diff(gabor_synthesis(gabor_coefficients(f, sys), sys), f));
    r2 = std::max(r2, rel_diff(gabor_synthesis(gabor_analysis(f, g0, lat), dual), f));
    double peak = 0.0;
    for (const auto& c : gabor_coefficients(f, sys).coeffs) peak = std::max(peak, std::abs(c));
    bound = std::max(bound, peak / s0prime_norm(f));
  }
  rec.check("reconstruction_dual_analysis", r1, 1e-9);
  rec.check("reconstruction_dual_synthesis", r2, 1e-9);
  rec.measure("coefficient_bound_constant", bound, "max ||c||_inf / ||sigma||_S0' over samples");

  std::vector<C> unit(lat.size());
  unit[0] = 1.0;
  rec.check("synthesis_of_unit_coefficient",
            max_abs_diff(gabor_synthesis(CoefficientArray(lat, unit), sys), g0), 1e-12);

  if (g.order() * lat.size() <= (1u << 20)) {
    Eigen::MatrixXcd d(g.order(), lat.size());
    const std::size_t nl = lat.freq_indices().order();
    for (std::size_t k = 0; k < lat.time_indices().order(); ++k) {
      for (std::size_t l = 0; l < nl; ++l) {
        d.col(k * nl + l) =
            to_vector(tf_shift(g0, g.element_at(lat.time_point(k)), g.element_at(lat.freq_point(l))));
      }
    }
    const Eigen::CompleteOrthogonalDecomposition<Eigen::MatrixXcd> cod(d);
    double minimal = 0.0;
    for (int i = 0; i < 3; ++i) {
      const Signal f = random_signal(g, rng);
      const Eigen::VectorXcd want = cod.solve(to_vector(f));
      const auto c = gabor_coefficients(f, sys).coeffs;
      const Eigen::VectorXcd got = Eigen::Map<const Eigen::VectorXcd>(c.data(), c.size());
      minimal = std::max(minimal, (got - want).norm() / want.norm());
    }
    rec.check("minimal_norm_vs_pseudoinverse", minimal, 1e-8);
  }

  double c1 = 0.0, c2 = 0.0;
  for (int i = 0; i < std::min(o.samples, 5); ++i) {
    const Signal f = random_signal(g, rng);
    const double s0 = s0_norm(f);
    c1 = std::max(c1, f.norm_inf() / s0);
    c2 = std::max(c2, s0prime_norm(f) / s0);
  }
  rec.measure("sup_over_s0_constant", c1);
  rec.measure("s0prime_over_s0_constant", c2);
  rec.measure("dual_l1_norm", dual.norm1());
  rec.measure("dual_sup_norm", dual.norm_inf());
}

// ---------------------------------------------------------------------------

double max_relative_increase(const std::vector<double>& v) {
  double worst = 0.0;
  for (std::size_t n = 1; n < v.size(); ++n) {
    if (v[n] > v[n - 1]) worst = std::max(worst, (v[n] - v[n - 1]) / std::max(v[n - 1], 1e-300));
  }
  return worst;
}

void mild_suite(Recorder& rec, const SuiteOptions& o, Rng& rng) {
  const GroupSpec& g = o.group;
  const auto a = expand(o.a, std::vector<std::int64_t>(g.rank(), 1), "--a");
  const auto b = expand(o.b, fine_tf_steps(g), "--b");
  const DistributionSequence seq = refining_comb_sequence(g);
  const auto chain = refining_chain(g);
  std::size_t broken = 0;
  for (std::size_t n = 1; n < chain.size(); ++n) {
    for (auto i : chain[n - 1].indices()) {
      if (!chain[n].contains_index(i)) ++broken;
    }
  }
  rec.exact("refining_chain_nested", static_cast<double>(broken));
  rec.measure("sequence_length", static_cast<double>(seq.members.size()));
  rec.measure("uniform_s0prime_bound", seq.uniform_bound);

  const GaborSystem sys(finite_gaussian(g), TFLattice(g, a, b));
  const auto probes = default_probes(probe_net(g));
  rec.measure("probe_count", static_cast<double>(probes.size()));
  if (!sys.is_frame()) {
    rec.at_least("frame_certified", sys.bounds().lower / sys.bounds().upper, kFrameTolerance,
                 "coefficient metric needs a frame");
    return;
  }
  double spectrum_min = 0.0;
  const Signal dual_hat = dft(sys.canonical_dual());
  for (const auto& v : dual_hat.values()) spectrum_min = std::min(spectrum_min, v.real());
  rec.measure("dual_spectrum_min", spectrum_min / dual_hat.norm_inf(),
              "coefficient monotonicity along the comb sequence needs this to be non-negative");
  const ConvergenceReport r = mild_convergence(seq, sys, probes);
  std::vector<double> dp, ds, dc;
  for (const auto& row : r.rows) {
    dp.push_back(row.d_pair);
    ds.push_back(row.d_stft);
    dc.push_back(row.d_coeff);
  }
  const std::string note = "a=" + steps_to_string(a) + " b=" + steps_to_string(b);
  rec.check("d_pair_non_increasing", max_relative_increase(dp), 1e-9, {}, note);
  rec.check("d_stft_non_increasing", max_relative_increase(ds), 1e-9, {}, note);
  rec.check("d_coeff_non_increasing", max_relative_increase(dc), 1e-9, {}, note);
  auto final_ratio = [](const std::vector<double>& v) { return v.front() > 0.0 ? v.back() / v.front() : 0.0; };
  rec.check("d_pair_final_ratio", final_ratio(dp), 1e-3);
  rec.check("d_stft_final_ratio", final_ratio(ds), 1e-3);
  rec.check("d_coeff_final_ratio", final_ratio(dc), 1e-3);
  rec.measure("stft_over_coeff_min", r.stft_over_coeff_min);
  rec.measure("stft_over_coeff_max", r.stft_over_coeff_max);
  rec.measure("pair_over_stft_min", r.pair_over_stft_min);
  rec.measure("pair_over_stft_max", r.pair_over_stft_max);

  // Zero-deviation coincidence on constructed pairs.
  std::size_t disagreements = 0;
  const Signal base = random_signal(g, rng);
  std::vector<Signal> others{base, base + dirac(g, g.element_at(rng.index(g.order())))};
  for (int i = 0; i < 4; ++i) others.push_back(base + C(1e-3) * random_signal(g, rng));
  for (const auto& s : others) {
    const bool zp = mild_deviation_pairing(s, base, probes) == 0.0;
    const bool zs = mild_deviation_stft(s, base, sys.window()) == 0.0;
    const bool zc = mild_deviation_coeff(s, base, sys) == 0.0;
    if (zp != zs || zs != zc) ++disagreements;
  }
  rec.exact("zero_deviation_coincidence", static_cast<double>(disagreements));

  for (const auto& h : subgroup_matrix(g, rng)) {
    const std::string label = to_string(h);
    const Subgroup perp = annihilator(h);
    const Signal r0 = random_signal(g, rng);
    std::vector<C> avg(g.order());
    for (std::size_t x = 0; x < g.order(); ++x) {
      for (auto y : h.indices()) avg[x] += r0[g.add_index(x, y)];
    }
    const Signal fhat = dft(Signal(g, std::move(avg)));
    double leak = 0.0;
    for (std::size_t s = 0; s < g.order(); ++s) {
      if (!perp.contains_index(s)) leak = std::max(leak, std::abs(fhat[s]));
    }
    rec.check("periodic_implies_spectral_support", leak / std::max(1.0, fhat.norm_inf()), 1e-10, label);

    std::vector<C> spec(g.order());
    for (auto s : perp.indices()) spec[s] = r0[s];
    const Signal band = idft(Signal(g, std::move(spec)));
    double moved = 0.0;
    for (std::size_t i = 0; i < std::min<std::size_t>(h.order(), 64); ++i) {
      moved = std::max(moved, max_abs_diff(translate(band, h.elements()[i]), band));
    }
    rec.check("spectral_support_implies_periodic", moved / std::max(1.0, band.norm_inf()), 1e-10, label);

    rec.exact("comb_spectrum_support", support(dft(dirac_comb(h))) == perp.elements() ? 0.0 : 1.0, label);
  }

  // Period matrix: every divisor per axis for rank one, else uniform combos.
  std::vector<std::vector<std::int64_t>> periods;
  if (g.rank() == 1) {
    for (std::int64_t p = 1; p <= g.modulus(0); ++p) {
      if (g.modulus(0) % p == 0) periods.push_back({p});
    }
  } else {
    periods.push_back(std::vector<std::int64_t>(g.moduli().begin(), g.moduli().end()));
    periods.push_back(fine_tf_steps(g));
    periods.push_back(std::vector<std::int64_t>(g.rank(), 1));
  }
  const Signal g0 = finite_gaussian(g);
  bool gaussian_refused = true;
  for (const auto& p : periods) {
    std::vector<C> v(g.order());
    std::map<std::vector<std::int64_t>, C> cell;
    for (std::size_t x = 0; x < g.order(); ++x) {
      auto key = g.element_at(x).coords;
      for (std::size_t j = 0; j < g.rank(); ++j) key[j] %= p[j];
      auto [it, fresh] = cell.try_emplace(key);
      if (fresh) {
        const double re = rng.uniform();
        it->second = {re, rng.uniform()};
      }
      v[x] = it->second;
    }
    const PeriodicReport pr = periodize_analysis(Signal(g, std::move(v)), p);
    std::string label = "period " + steps_to_string(p);
    rec.check("periodic_spectrum_leakage", pr.leakage, 1e-10, label);
    rec.check("periodic_spectrum_weights", pr.weight_residual, 1e-10, label);
    const bool proper = !std::equal(p.begin(), p.end(), g.moduli().begin());
    if (proper) {
      try {
        periodize_analysis(g0, p);
        gaussian_refused = false;
      } catch (const NotPeriodic&) {
      }
    }
  }
  rec.exact("gaussian_not_periodic", gaussian_refused ? 0.0 : 1.0, {},
            "NotPeriodic raised for every proper period");
}

// ---------------------------------------------------------------------------

void approx_suite(Recorder& rec, const SuiteOptions& o, Rng& rng) {
  const GroupSpec& g = o.group;
  std::vector<Subgroup> lattices;
  for (auto& h : subgroup_matrix(g, rng)) {
    if (is_rectangular(h)) lattices.push_back(std::move(h));
  }
  rec.measure("rectangular_lattices", static_cast<double>(lattices.size()));
  for (const auto& lam : lattices) {
    const std::string label = to_string(lam);
    for (auto shape : {BupuShape::kTriangle, BupuShape::kBspline2, BupuShape::kIndicator}) {
      const BUPU bupu = make_bupu(g, lam, shape);
      std::vector<double> sum(g.order(), 0.0);
      double negative = 0.0;
      for (const auto& bump : bupu.bumps) {
        for (std::size_t x = 0; x < g.order(); ++x) {
          sum[x] += bump[x].real();
          negative = std::max(negative, -bump[x].real());
        }
      }
      double pou = negative;
      for (auto s : sum) pou = std::max(pou, std::abs(s - 1.0));
      rec.check("partition_of_unity_" + to_string(shape), pou, 1e-12, label);
    }
    for (auto shape : {BupuShape::kTriangle, BupuShape::kIndicator}) {
      const Signal phi = make_bupu(g, lam, shape).mother;
      const ExtensionContract k = extension_contract(phi, lam);
      rec.exact("bump_contract_" + to_string(shape),
                (k.interpolates() && k.inside_open_cell) ? 0.0 : 1.0, label);
      const SampleArray c = sample(random_signal(g, rng), lam);
      const SampleArray back = sample(semidiscrete_extension(c, phi), lam);
      double err = 0.0;
      for (std::size_t i = 0; i < c.samples.size(); ++i) err = std::max(err, std::abs(back.samples[i] - c.samples[i]));
      rec.check("interpolation_" + to_string(shape), err, 1e-12, label);
    }
    {
      const Signal phi = random_signal(g, rng);
      const SampleArray c = sample(random_signal(g, rng), lam);
      Signal direct = Signal::zeros(g);
      double scale = 0.0;
      for (std::size_t i = 0; i < c.samples.size(); ++i) {
        direct += c.samples[i] * translate(phi, lam.elements()[i]);
        scale += std::abs(c.samples[i]);
      }
      rec.check("extension_fft_vs_direct",
                max_abs_diff(semidiscrete_extension(c, phi), direct) / (scale * phi.norm_inf()), 1e-12, label);
    }
    double constant = 0.0;
    for (auto shape : {BupuShape::kTriangle, BupuShape::kBspline2, BupuShape::kIndicator}) {
      constant = std::max(constant, quasi_interpolate(Signal::constant(g, C(2.0, -1.0)), lam, shape).sup_error);
    }
    rec.check("constant_reproduced", constant, 1e-12, label);
  }

  // Uniform gaps d dividing every modulus, from the largest with d * d no
  // larger than the smallest modulus down to 1, each dividing the previous.
  std::int64_t common = 0, smallest = g.modulus(0);
  for (auto n : g.moduli()) {
    common = std::gcd(common, n);
    smallest = std::min(smallest, n);
  }
  std::vector<std::int64_t> gap_chain;
  for (std::int64_t d = common; d >= 1; --d) {
    if (common % d == 0 && d * d <= smallest) {
      gap_chain.push_back(d);
      break;
    }
  }
  while (gap_chain.back() > 1) gap_chain.push_back(gap_chain.back() / smallest_prime_factor(gap_chain.back()));
  const Signal g0 = finite_gaussian(g);
  for (auto shape : {BupuShape::kTriangle, BupuShape::kBspline2}) {
    const auto rows = approx_errors(g0, gap_chain, shape);
    double worst = 0.0;
    std::string trace;
    for (std::size_t n = 0; n < rows.size(); ++n) {
      trace += (n ? " " : "") + std::to_string(rows[n].gap) + ":" + io::format_double(rows[n].sup_error);
      if (n == 0) continue;
      const double prev = rows[n - 1].sup_error, e = rows[n].sup_error;
      // Once the error has reached roundoff it only has to stay there.
      if (prev > 1e-14 && e >= prev) worst = std::max(worst, (e - prev) / prev + 1.0);
      if (prev <= 1e-14 && e > 1e-14) worst = std::max(worst, e);
    }
    rec.exact("quasi_interpolation_refines_" + to_string(shape), worst, {}, trace);
  }

  {
    const Subgroup lam = lattices.size() > 2 ? lattices[lattices.size() / 2] : lattices.back();
    const std::vector<std::int64_t> gaps = lattice_gaps(lam);
    bool proper = false;
    for (auto gap : gaps) proper = proper || gap > 1;
    if (proper) {
      GroupElement x = g.zero();
      for (std::size_t j = 0; j < g.rank(); ++j) {
        if (gaps[j] > 1) {
          x.coords[j] = 1;
          break;
        }
      }
      rec.check("indicator_misses_spike",
                std::abs(quasi_interpolate(dirac(g, x), lam, BupuShape::kIndicator).sup_error - 1.0), 1e-12,
                to_string(lam));
    }
  }

  // Tensor factorization over G1 x G2.
  GroupSpec g1 = g, g2 = GroupSpec({2});
  if (g.rank() >= 2) {
    g1 = GroupSpec({g.modulus(0)});
    g2 = GroupSpec(std::vector<std::int64_t>(g.moduli().begin() + 1, g.moduli().end()));
  }
  const Signal f = random_signal(g1, rng);
  Signal h = random_signal(g2, rng);
  h *= C(1.0) / h[0];
  const Signal t = tensor_extension(f, h);
  rec.check("tensor_dft_factorizes", rel_diff(dft(t), tensor(dft(f), dft(h))), 1e-10);
  std::vector<std::size_t> first{0};
  const GroupSpec& tg = t.group();
  std::vector<GroupElement> gens;
  for (std::size_t j = 0; j < g1.rank(); ++j) {
    std::vector<std::int64_t> c(tg.rank(), 0);
    c[j] = 1;
    gens.push_back(tg.element(c));
  }
  rec.check("tensor_restriction_recovers_factor", rel_diff(restriction(t, Subgroup(tg, gens)), f), 1e-12);
  if (tg.order() <= 1024) {
    const double st = s0_norm(t);
    rec.check("tensor_s0_norm_factorizes", std::abs(st - s0_norm(f) * s0_norm(h)) / st, 1e-10);
  }

  // Sampling bound constant over a corpus.
  std::vector<std::int64_t> steps(g.rank());
  for (std::size_t j = 0; j < g.rank(); ++j) {
    std::int64_t d = 1;
    for (std::int64_t c = 1; c * c <= g.modulus(j); ++c) {
      if (g.modulus(j) % c == 0) d = c;
    }
    steps[j] = d;
  }
  const Subgroup lam = lattice_subgroup(g, steps);
  const double dirac_ratio = sampling_bound(dirac(g, g.zero()), lam).ratio;
  rec.check("sampling_bound_dirac", std::abs(dirac_ratio * s0_norm(dirac(g, g.zero())) - 1.0), 1e-12,
            to_string(lam));
  if (g.order() <= 1024) {
    double worst = 0.0;
    for (int i = 0; i < o.samples; ++i) worst = std::max(worst, sampling_bound(random_signal(g, rng), lam).ratio);
    rec.measure("sampling_bound_constant", worst, "max over random corpus, lattice " + to_string(lam));
  }
}

}  // namespace

// ---------------------------------------------------------------------------

bool RunReport::pass() const { return failures() == 0; }

std::size_t RunReport::failures() const {
  return static_cast<std::size_t>(
      std::count_if(checks.begin(), checks.end(), [](const CheckResult& c) { return !c.pass; }));
}

io::Json RunReport::to_json() const {
  Json checks_json = Json::array();
  std::size_t negatives = 0;
  for (const auto& c : checks) {
    Json j{{"check", c.name}, {"group", c.group}, {"subgroup", c.subgroup}, {"residual", c.residual},
           {"threshold", c.threshold}, {"relation", c.relation}, {"pass", c.pass}};
    if (c.expected_negative) {
      j["expected_negative"] = true;
      ++negatives;
    }
    if (!c.note.empty()) j["note"] = c.note;
    checks_json.push_back(std::move(j));
  }
  Json measurements_json = Json::array();
  for (const auto& m : measurements) {
    Json j{{"name", m.name}, {"value", m.value}};
    if (!m.note.empty()) j["note"] = m.note;
    measurements_json.push_back(std::move(j));
  }
  Json out{{"command", command},
           {"parameters", parameters},
           {"pass", pass()},
           {"summary", {{"checks", checks.size()}, {"failed", failures()}, {"expected_negative", negatives}}},
           {"checks", std::move(checks_json)},
           {"measurements", std::move(measurements_json)}};
  if (wall_time) out["wall_time"] = *wall_time;
  return out;
}

std::vector<std::int64_t> default_tf_steps(const GroupSpec& g) {
  std::vector<std::int64_t> out(g.rank(), 1);
  for (std::size_t j = 0; j < g.rank(); ++j) {
    const std::int64_t n = g.modulus(j);
    for (std::int64_t d = 1; 4 * d * d <= n; ++d) {
      if (n % d == 0) out[j] = d;
    }
  }
  return out;
}

std::vector<std::int64_t> fine_tf_steps(const GroupSpec& g) {
  std::vector<std::int64_t> out(g.rank(), 1);
  for (std::size_t j = 0; j < g.rank(); ++j) {
    const std::int64_t n = g.modulus(j);
    if (n == 1) continue;
    const std::int64_t p = smallest_prime_factor(n);
    if (2 * p * p <= n) out[j] = p;
  }
  return out;
}

RunReport run_suite(std::string_view suite, const SuiteOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  RunReport report;
  report.command = "verify";
  report.parameters = {{"suite", std::string(suite)},
                       {"group", io::to_json(options.group)},
                       {"seed", options.seed},
                       {"samples", options.samples}};
  if (options.a) report.parameters["a"] = *options.a;
  if (options.b) report.parameters["b"] = *options.b;
  if (options.tolerance) report.parameters["tolerance"] = *options.tolerance;

  Recorder rec(report, options);
  // Each suite draws from its own stream so "all" equals the concatenation.
  auto run = [&](std::string_view name, std::uint64_t salt) {
    Rng rng(options.seed * 1000003ULL + salt);
    if (name == "group") group_suite(rec, options.group, rng);
    if (name == "fourier") fourier_suite(rec, options.group, rng, options.samples);
    if (name == "gabor") gabor_suite(rec, options, rng);
    if (name == "mild") mild_suite(rec, options, rng);
    if (name == "approx") approx_suite(rec, options, rng);
  };
  const std::vector<std::string_view> names{"group", "fourier", "gabor", "mild", "approx"};
  if (suite == "all") {
    for (std::size_t i = 0; i < names.size(); ++i) run(names[i], i + 1);
  } else {
    const auto it = std::find(names.begin(), names.end(), suite);
    if (it == names.end()) throw InvalidArgument("unknown suite '" + std::string(suite) + "'");
    run(suite, static_cast<std::uint64_t>(it - names.begin()) + 1);
  }
  if (options.timing) {
    report.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  }
  return report;
}

namespace {

std::string csv_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) out += c == '"' ? std::string("\"\"") : std::string(1, c);
  return out + "\"";
}

std::string coords(const GroupElement& x) {
  std::string out;
  for (std::size_t j = 0; j < x.coords.size(); ++j) out += (j ? "," : "") + std::to_string(x.coords[j]);
  return out;
}

std::string coord_header(const GroupSpec& g, char prefix) {
  std::string out;
  for (std::size_t j = 0; j < g.rank(); ++j) out += (j ? "," : "") + std::string(1, prefix) + std::to_string(j);
  return out;
}

using io::format_double;

DemoOutput comb_duality_demo(const DemoOptions& o, Recorder& rec, Rng& rng) {
  const GroupSpec& g = o.group;
  std::ostringstream csv;
  csv << "subgroup,order,annihilator_order,weight,residual,biduality\n";
  for (const auto& h : subgroup_matrix(g, rng)) {
    const Subgroup perp = annihilator(h);
    // dft of the comb against the closed form |H| comb(H^perp).
    const Signal lhs = dft(dirac_comb(h));
    const Signal rhs = C(static_cast<double>(h.order())) * dirac_comb(perp);
    const double residual = max_abs_diff(lhs, rhs);
    const bool bidual = annihilator(perp) == h;
    csv << csv_quote(to_string(h)) << ',' << h.order() << ',' << perp.order() << ',' << h.order() << ','
        << format_double(residual) << ',' << (bidual ? 1 : 0) << '\n';
    rec.check("comb_duality", residual, 1e-10, to_string(h));
    rec.exact("biduality", bidual ? 0.0 : 1.0, to_string(h));
  }
  return {csv.str(), {}};
}

DemoOutput poisson_demo(const DemoOptions& o, Recorder& rec, Rng& rng) {
  const GroupSpec& g = o.group;
  const Signal f = finite_gaussian(g);
  std::ostringstream csv;
  csv << "subgroup,order,lhs_re,lhs_im,rhs_re,rhs_im,constant,residual\n";
  for (const auto& h : subgroup_matrix(g, rng)) {
    const PoissonResult r = poisson_check(f, h);
    csv << csv_quote(to_string(h)) << ',' << h.order() << ',' << format_double(r.lhs.real()) << ','
        << format_double(r.lhs.imag()) << ',' << format_double(r.rhs.real()) << ','
        << format_double(r.rhs.imag()) << ',' << format_double(r.constant) << ','
        << format_double(r.residual) << '\n';
    rec.check("poisson_summation", r.residual, 1e-10 * (f.norm1() + 1.0), to_string(h));
  }
  return {csv.str(), {}};
}

DemoOutput periodic_spectrum_demo(const DemoOptions& o, Recorder& rec, Rng& rng) {
  const GroupSpec& g = o.group;
  const auto p = expand(o.period, fine_tf_steps(g), "--period");
  std::map<std::vector<std::int64_t>, C> cell;
  std::vector<C> v(g.order());
  for (std::size_t x = 0; x < g.order(); ++x) {
    auto key = g.element_at(x).coords;
    for (std::size_t j = 0; j < g.rank(); ++j) key[j] %= p[j];
    auto [it, fresh] = cell.try_emplace(key);
    if (fresh) {
      const double re = rng.uniform();
      it->second = {re, rng.uniform()};
    }
    v[x] = it->second;
  }
  const Signal f(g, std::move(v));
  const PeriodicReport pr = periodize_analysis(f, p);
  const Signal fhat = dft(f);
  const double weight = static_cast<double>(pr.periods.order());
  std::ostringstream csv;
  csv << coord_header(g, 'n') << ",re,im,abs,on_lattice,expected_re,expected_im,residual\n";
  double worst = 0.0, leak = 0.0;
  for (std::size_t s = 0; s < g.order(); ++s) {
    const GroupElement se = g.element_at(s);
    const bool on = pr.spectral_lattice.contains_index(s);
    C expected{};
    if (on) {
      // |H| times the one-period sum, evaluated directly.
      for (const auto& [t, value] : cell) {
        long double phase = 0.0L;
        for (std::size_t j = 0; j < g.rank(); ++j) {
          phase += static_cast<long double>(se.coords[j] * t[j]) / g.modulus(j);
        }
        const long double theta = -2.0L * std::numbers::pi_v<long double> * (phase - std::floor(phase));
        expected += value * C(static_cast<double>(std::cos(theta)), static_cast<double>(std::sin(theta)));
      }
      expected *= weight;
    } else {
      leak = std::max(leak, std::abs(fhat[s]));
    }
    const double residual = std::abs(fhat[s] - expected);
    worst = std::max(worst, residual);
    csv << coords(se) << ',' << format_double(fhat[s].real()) << ',' << format_double(fhat[s].imag()) << ','
        << format_double(std::abs(fhat[s])) << ',' << (on ? 1 : 0) << ',' << format_double(expected.real())
        << ',' << format_double(expected.imag()) << ',' << format_double(residual) << '\n';
  }
  rec.check("periodic_spectrum_leakage", leak, 1e-10, "period " + steps_to_string(p));
  rec.check("periodic_spectrum_weights", worst, 1e-10, "period " + steps_to_string(p));
  return {csv.str(), {}};
}

DemoOutput mild_limit_demo(const DemoOptions& o, Recorder& rec) {
  const GroupSpec& g = o.group;
  const auto a = expand(o.a, std::vector<std::int64_t>(g.rank(), 1), "--a");
  const auto b = expand(o.b, fine_tf_steps(g), "--b");
  const DistributionSequence seq = refining_comb_sequence(g);
  const auto chain = refining_chain(g);
  const GaborSystem sys(finite_gaussian(g), TFLattice(g, a, b));
  const ConvergenceReport r = mild_convergence(seq, sys, default_probes(probe_net(g)));
  std::ostringstream csv;
  csv << "n,lattice_order,d_pair,d_stft,d_coeff\n";
  std::vector<double> dp, ds, dc;
  for (std::size_t n = 0; n < r.rows.size(); ++n) {
    csv << n << ',' << chain[n].order() << ',' << format_double(r.rows[n].d_pair) << ','
        << format_double(r.rows[n].d_stft) << ',' << format_double(r.rows[n].d_coeff) << '\n';
    dp.push_back(r.rows[n].d_pair);
    ds.push_back(r.rows[n].d_stft);
    dc.push_back(r.rows[n].d_coeff);
  }
  rec.check("d_pair_non_increasing", max_relative_increase(dp), 1e-9);
  rec.check("d_stft_non_increasing", max_relative_increase(ds), 1e-9);
  rec.check("d_coeff_non_increasing", max_relative_increase(dc), 1e-9);
  return {csv.str(), {}};
}

}  // namespace

DemoOutput run_demo(std::string_view name, const DemoOptions& options) {
  RunReport report;
  report.command = "demo";
  report.parameters = {{"demo", std::string(name)}, {"group", io::to_json(options.group)}, {"seed", options.seed}};
  if (options.period) report.parameters["period"] = *options.period;
  if (options.a) report.parameters["a"] = *options.a;
  if (options.b) report.parameters["b"] = *options.b;
  SuiteOptions suite_options;
  suite_options.group = options.group;
  Recorder rec(report, suite_options);
  Rng rng(options.seed);
  DemoOutput out;
  if (name == "comb-duality") {
    out = comb_duality_demo(options, rec, rng);
  } else if (name == "poisson") {
    out = poisson_demo(options, rec, rng);
  } else if (name == "periodic-spectrum") {
    out = periodic_spectrum_demo(options, rec, rng);
  } else if (name == "mild-limit") {
    out = mild_limit_demo(options, rec);
  } else {
    throw InvalidArgument("unknown demo '" + std::string(name) + "'");
  }
  out.report = std::move(report);
  return out;
}

std::vector<ApproxRow> approx_errors(const Signal& target, std::span<const std::int64_t> gaps,
                                     BupuShape shape) {
  const GroupSpec& g = target.group();
  std::vector<ApproxRow> rows;
  for (auto gap : gaps) {
    const Subgroup lam = lattice_subgroup(g, std::vector<std::int64_t>(g.rank(), gap));
    rows.push_back({gap, quasi_interpolate(target, lam, shape).sup_error});
  }
  return rows;
}

}  // namespace mildspec
