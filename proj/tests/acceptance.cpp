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

// Acceptance run: one PASS or FAIL line per criterion, nonzero exit on any
// failure. Library results are compared against brute-force references.
//
//   acceptance --cli <path to mildspec binary>

#include <sys/wait.h>
#include <unistd.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "mildspec/approx.hpp"
#include "mildspec/errors.hpp"
#include "mildspec/fourier.hpp"
#include "mildspec/gabor.hpp"
#include "mildspec/mild.hpp"
#include "mildspec/signal.hpp"
#include "oracles.hpp"

namespace {

using namespace mildspec;
namespace fs = std::filesystem;

struct Outcome {
  bool pass = true;
  std::string detail;
};

// Tracks the worst residual of one kind against its ceiling.
struct Worst {
  std::string label;
  double ceiling;
  double value = 0.0;
  std::string where;

  void see(double v, const std::string& at) {
    if (!(v <= value) || std::isnan(v)) {
      value = v;
      where = at;
    }
  }
  bool ok() const { return value <= ceiling; }
  std::string text() const {
    std::ostringstream os;
    os << label << "=" << value << (ok() ? " <= " : " > ") << ceiling;
    if (!ok() && !where.empty()) os << " at " << where;
    return os.str();
  }
};

Outcome combine(std::initializer_list<const Worst*> ws, std::string extra = {}) {
  Outcome o;
  for (const Worst* w : ws) {
    o.pass = o.pass && w->ok();
    if (!o.detail.empty()) o.detail += ", ";
    o.detail += w->text();
  }
  if (!extra.empty()) o.detail += ", " + extra;
  return o;
}

std::vector<Subgroup> subgroups(const GroupSpec& g) { return all_subgroups(g); }

std::vector<GroupSpec> matrix_groups() {
  return {GroupSpec({24}), GroupSpec({36}), GroupSpec({4, 6}), GroupSpec({16}),
          GroupSpec({12, 12}), GroupSpec({2, 2, 2}), GroupSpec({7}), GroupSpec({1})};
}

double abs_max(std::span<const Complex> a, std::span<const Complex> b) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

double sq_norm(std::span<const Complex> v) {
  double s = 0.0;
  for (auto x : v) s += std::norm(x);
  return s;
}

// 1. FFT against the naive DFT, inversion and Plancherel.
Outcome fourier_core(std::mt19937_64& rng) {
  std::vector<GroupSpec> groups;
  for (std::int64_t n : {4, 5, 6, 7, 8, 9, 12, 16, 17, 24, 31, 32, 36, 60, 64, 67, 97, 100, 127, 128, 210, 256,
                         257, 360, 509, 512}) {
    groups.emplace_back(std::vector<std::int64_t>{n});
  }
  for (auto [n1, n2] : std::vector<std::pair<std::int64_t, std::int64_t>>{
           {2, 2}, {2, 3}, {4, 6}, {3, 5}, {8, 8}, {6, 10}, {7, 11}, {16, 16},
           {4, 128}, {16, 32}, {3, 170}, {12, 40}}) {
    groups.emplace_back(std::vector<std::int64_t>{n1, n2});
  }
  Worst fft{"fft_vs_naive", 1e-12}, inv{"inversion", 1e-10}, planch{"plancherel", 1e-12};
  for (const auto& g : groups) {
    const Signal f = oracle::random_signal(g, rng);
    const Signal fh = dft(f);
    const auto ref = oracle::naive_dft(g, f.values());
    fft.see(oracle::rel_err(fh.values(), ref), to_string(g));
    inv.see(oracle::rel_err(idft(fh), f), to_string(g));
    const double lhs = sq_norm(fh.values());
    const double rhs = static_cast<double>(g.order()) * sq_norm(f.values());
    planch.see(std::abs(lhs - rhs) / rhs, to_string(g));
  }
  return combine({&fft, &inv, &planch}, std::to_string(groups.size()) + " groups");
}

// 2. Characters go to scaled Diracs.
Outcome frequencies_to_deltas() {
  const GroupSpec g({24});
  Worst w{"max_residual", 1e-10};
  for (std::size_t r = 0; r < g.order(); ++r) {
    const auto re = g.element_at(r);
    const Signal lhs = dft(pure_frequency(g, re));
    const Signal rhs = static_cast<double>(g.order()) * dirac(g, re);
    w.see(max_abs_diff(lhs, rhs), "r=" + std::to_string(r));
  }
  return combine({&w});
}

// 3. Poisson summation, both sides summed from the definitions.
Outcome poisson(std::mt19937_64& rng) {
  Worst w{"max_residual/(|f|_1+1)", 1e-10}, lib{"library_residual/(|f|_1+1)", 1e-10};
  std::size_t cases = 0;
  for (const auto& g : {GroupSpec({24}), GroupSpec({36}), GroupSpec({4, 6})}) {
    for (const auto& h : subgroups(g)) {
      const auto perp = oracle::brute_annihilator(h);
      for (int trial = 0; trial < 100; ++trial) {
        const Signal f = oracle::random_signal(g, rng);
        const Signal fh = dft(f);
        Complex lhs{}, rhs{};
        for (auto i : h.indices()) lhs += f[i];
        for (auto s : perp) rhs += fh[s];
        rhs *= static_cast<double>(h.order()) / static_cast<double>(g.order());
        const double scale = f.norm1() + 1.0;
        w.see(std::abs(lhs - rhs) / scale, to_string(h));
        lib.see(poisson_check(f, h).residual / scale, to_string(h));
        ++cases;
      }
    }
  }
  return combine({&w, &lib}, std::to_string(cases) + " cases");
}

// 4. Comb duality and biduality.
Outcome comb_duality() {
  Worst w{"max_residual", 1e-10};
  bool bidual = true, brute = true;
  std::size_t count = 0;
  for (const auto& g : matrix_groups()) {
    for (const auto& h : subgroups(g)) {
      const Subgroup perp = annihilator(h);
      const auto ref_perp = oracle::brute_annihilator(h);
      brute = brute && std::vector<std::size_t>(perp.indices().begin(), perp.indices().end()) == ref_perp;
      const Subgroup back = annihilator(perp);
      bidual = bidual && std::equal(back.indices().begin(), back.indices().end(), h.indices().begin(),
                                    h.indices().end());
      const auto lhs = oracle::naive_dft(g, dirac_comb(h).values());
      std::vector<Complex> rhs(g.order());
      for (auto s : ref_perp) rhs[s] = static_cast<double>(h.order());
      w.see(abs_max(lhs, rhs), to_string(h));
      const Signal lib = comb_to_signal(comb_ft(h));
      w.see(abs_max(lib.values(), rhs), to_string(h) + " (library)");
      ++count;
    }
  }
  Outcome o = combine({&w}, std::string("biduality ") + (bidual ? "exact" : "BROKEN") + ", annihilator " +
                                (brute ? "matches brute force" : "MISMATCH") + ", " + std::to_string(count) +
                                " subgroups");
  o.pass = o.pass && bidual && brute;
  return o;
}

// 5. Periodized spectrum against the sampled-and-transformed signal.
Outcome sampling_periodization(std::mt19937_64& rng) {
  Worst direct{"direct_residual", 1e-10}, lib{"library_residual", 1e-10};
  std::size_t count = 0;
  for (const auto& g : matrix_groups()) {
    for (const auto& h : subgroups(g)) {
      const auto perp = oracle::brute_annihilator(h);
      for (int trial = 0; trial < 3; ++trial) {
        const Signal f = oracle::random_signal(g, rng);
        const Signal fh = dft(f);
        for (std::size_t s = 0; s < g.order(); ++s) {
          const GroupElement se = g.element_at(s);
          Complex lhs{};
          for (auto u : perp) lhs += fh[g.add_index(s, u)];
          Complex rhs{};
          for (const auto& x : h.elements()) rhs += f.at(x) * std::conj(oracle::chi(g, se, x));
          rhs *= static_cast<double>(perp.size());
          direct.see(std::abs(lhs - rhs), to_string(h));
        }
        lib.see(duality_sampling_periodization(f, h).max_residual, to_string(h));
      }
      ++count;
    }
  }
  return combine({&direct, &lib}, std::to_string(count) + " subgroups");
}

// 6. Gabor frames at redundancy 2 and 4.
Outcome gabor_frames(std::mt19937_64& rng) {
  struct Case {
    std::int64_t n, a, b;
  };
  const std::vector<Case> cases{{16, 2, 4}, {16, 4, 2}, {16, 2, 2}, {24, 2, 6}, {24, 3, 4}, {24, 4, 3},
                                {24, 6, 2}, {24, 2, 3}, {24, 3, 2}, {64, 4, 8}, {64, 8, 4}, {64, 4, 4},
                                {64, 2, 8}, {64, 8, 2}};
  Worst dual{"dual_residual", 1e-9}, recon{"reconstruction", 1e-9}, minnorm{"minimal_norm", 1e-8};
  std::string problems;
  for (const auto& c : cases) {
    const GroupSpec g({c.n});
    const TFLattice lat(g, {c.a}, {c.b});
    const std::string at = "Z" + std::to_string(c.n) + " a=" + std::to_string(c.a) + " b=" + std::to_string(c.b);
    const double rho = lat.redundancy();
    if (rho != 2.0 && rho != 4.0) problems += " bad redundancy " + at;
    const Signal g0 = finite_gaussian(g);
    const GaborSystem sys(g0, lat);
    if (!sys.is_frame()) {
      problems += " no frame " + at;
      continue;
    }
    const Signal& gd = sys.canonical_dual();

    // Frame operator and synthesis matrix from explicit shifts.
    std::vector<Signal> atoms;
    for (std::int64_t k = 0; k < c.n / c.a; ++k) {
      for (std::int64_t l = 0; l < c.n / c.b; ++l) {
        atoms.push_back(oracle::direct_tf_shift(g0, g.element({k * c.a}), g.element({l * c.b})));
      }
    }
    Signal s_gd = Signal::zeros(g);
    for (const auto& p : atoms) s_gd += inner(gd, p) * p;
    dual.see(oracle::rel_err(s_gd, g0), at);

    Eigen::MatrixXcd d(c.n, static_cast<Eigen::Index>(atoms.size()));
    for (std::size_t j = 0; j < atoms.size(); ++j) {
      for (std::size_t x = 0; x < g.order(); ++x) {
        d(static_cast<Eigen::Index>(x), static_cast<Eigen::Index>(j)) = atoms[j][x];
      }
    }
    const Eigen::CompleteOrthogonalDecomposition<Eigen::MatrixXcd> cod(d);
    for (int trial = 0; trial < 100; ++trial) {
      const Signal f = oracle::random_signal(g, rng);
      const CoefficientArray coeffs = gabor_coefficients(f, sys);
      recon.see(oracle::rel_err(gabor_synthesis(coeffs, sys), f), at);
      if (trial < 5) {
        Eigen::VectorXcd fv(c.n);
        for (std::size_t x = 0; x < g.order(); ++x) fv(static_cast<Eigen::Index>(x)) = f[x];
        const Eigen::VectorXcd pinv = cod.solve(fv);
        const std::vector<Complex> pv(pinv.data(), pinv.data() + pinv.size());
        minnorm.see(oracle::rel_err(coeffs.coeffs, pv), at);
      }
    }
  }
  std::size_t refused = 0;
  const std::vector<Case> sparse{{16, 8, 8}, {24, 8, 12}, {24, 12, 8}, {64, 16, 16}};
  for (const auto& c : sparse) {
    const GroupSpec g({c.n});
    const TFLattice lat(g, {c.a}, {c.b});
    if (lat.redundancy() != 0.25) problems += " bad sparse redundancy";
    try {
      const GaborSystem sys(finite_gaussian(g), lat);
      (void)sys.canonical_dual();
    } catch (const NotAFrame&) {
      ++refused;
    }
  }
  Outcome o = combine({&dual, &recon, &minnorm}, "NotAFrame " + std::to_string(refused) + "/" +
                                                    std::to_string(sparse.size()) + " at rho=1/4, " +
                                                    std::to_string(cases.size()) + " lattices" + problems);
  o.pass = o.pass && refused == sparse.size() && problems.empty();
  return o;
}

// 7. Moyal, Fourier rotation and Gaussian self-duality.
Outcome stft_identities(std::mt19937_64& rng) {
  Worst moyal{"moyal", 1e-10}, rot{"rotation", 1e-9}, direct{"stft_vs_direct", 1e-10};
  for (const auto& g : {GroupSpec({16}), GroupSpec({24}), GroupSpec({36}), GroupSpec({4, 6}), GroupSpec({64}),
                        GroupSpec({8, 8}), GroupSpec({7})}) {
    const Signal f = oracle::random_signal(g, rng);
    const Signal w = oracle::random_signal(g, rng);
    const STFTGrid v = stft(f, w);
    const double lhs = sq_norm(v.values);
    const double rhs = static_cast<double>(g.order()) * sq_norm(f.values()) * sq_norm(w.values());
    moyal.see(std::abs(lhs - rhs) / rhs, to_string(g));
    for (int k = 0; k < 10; ++k) {
      const auto t = static_cast<std::size_t>(rng() % g.order());
      const auto s = static_cast<std::size_t>(rng() % g.order());
      direct.see(std::abs(v.at(t, s) - oracle::direct_stft(f, w, g.element_at(t), g.element_at(s))) /
                     std::max(1.0, std::abs(v.at(t, s))),
                 to_string(g));
    }
    const Signal g0 = finite_gaussian(g);
    const STFTGrid vf = stft(f, g0);
    const STFTGrid vfh = stft(dft(f), g0);
    const double root = std::sqrt(static_cast<double>(g.order()));
    double scale = 0.0;
    for (auto x : vf.values) scale = std::max(scale, std::abs(x));
    for (std::size_t t = 0; t < g.order(); ++t) {
      for (std::size_t s = 0; s < g.order(); ++s) {
        const double a = std::abs(vfh.at(t, s));
        const double b = root * std::abs(vf.at(g.negate_index(s), t));
        rot.see(std::abs(a - b) / (root * scale), to_string(g));
      }
    }
  }
  std::size_t worst_n = 0;
  double worst = 0.0;
  bool self_dual = true;
  for (std::int64_t n = 1; n <= 1024; ++n) {
    const GroupSpec g({n});
    const Signal g0 = finite_gaussian(g);
    const double root = std::sqrt(static_cast<double>(n));
    const double r = max_abs_diff(dft(g0), root * g0);
    if (r / root > worst) {
      worst = r / root;
      worst_n = static_cast<std::size_t>(n);
    }
    self_dual = self_dual && r <= 1e-8 * root;
  }
  std::ostringstream os;
  os << "gaussian_self_duality/sqrt(N)=" << worst << (self_dual ? " <= " : " > ") << "1e-8 (worst N=" << worst_n
     << ", N=1..1024)";
  Outcome o = combine({&moyal, &rot, &direct}, os.str());
  o.pass = o.pass && self_dual;
  return o;
}

// 8. Spectra of periodic signals.
Outcome periodic_spectrum(std::mt19937_64& rng) {
  const std::vector<std::pair<std::int64_t, std::int64_t>> matrix{
      {1, 12}, {2, 12}, {3, 12}, {4, 12}, {6, 12}, {12, 12}, {4, 16}, {8, 16}, {5, 30}, {6, 36},
      {9, 36}, {7, 49}, {16, 256}, {32, 256}, {10, 100}};
  Worst leak{"leakage", 1e-10}, weights{"weight_residual", 1e-10}, lib{"library_residuals", 1e-10};
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (auto [p, n] : matrix) {
    const GroupSpec g({n});
    const std::string at = "p=" + std::to_string(p) + " N=" + std::to_string(n);
    for (int trial = 0; trial < 5; ++trial) {
      std::vector<Complex> period(static_cast<std::size_t>(p));
      for (auto& x : period) x = {u(rng), u(rng)};
      std::vector<Complex> v(static_cast<std::size_t>(n));
      for (std::int64_t x = 0; x < n; ++x) v[static_cast<std::size_t>(x)] = period[static_cast<std::size_t>(x % p)];
      const Signal f(g, v);
      const auto fh = oracle::naive_dft(g, f.values());
      const std::int64_t step = n / p;
      for (std::int64_t m = 0; m < n; ++m) {
        const Complex val = fh[static_cast<std::size_t>(m)];
        if (m % step != 0) {
          leak.see(std::abs(val), at);
          continue;
        }
        std::complex<long double> one{};
        for (std::int64_t t = 0; t < p; ++t) {
          const auto k = static_cast<long double>(((m / step) * t) % p);
          const long double theta = -2.0L * std::numbers::pi_v<long double> * k / p;
          one += std::complex<long double>(period[static_cast<std::size_t>(t)]) *
                 std::complex<long double>(std::cos(theta), std::sin(theta));
        }
        const Complex expect(static_cast<double>(one.real()) * step, static_cast<double>(one.imag()) * step);
        weights.see(std::abs(val - expect), at);
      }
      const std::vector<std::int64_t> per{p};
      const PeriodicReport r = periodize_analysis(f, per);
      lib.see(std::max(r.leakage, r.weight_residual), at);
    }
  }
  return combine({&leak, &weights, &lib}, std::to_string(matrix.size()) + " (p,N) pairs");
}

// 9. Interpolation and quasi-interpolation.
Outcome extension(std::mt19937_64& rng) {
  Worst interp{"interpolation", 1e-12}, agree{"quasi_vs_direct", 1e-12};
  std::size_t checked = 0;
  struct Case {
    std::vector<std::int64_t> moduli, steps;
  };
  for (const auto& c : std::vector<Case>{{{24}, {4}}, {{24}, {3}}, {{36}, {6}}, {{256}, {16}},
                                         {{4, 6}, {2, 3}}, {{12, 12}, {3, 4}}, {{24}, {1}}}) {
    const GroupSpec g(c.moduli);
    const Subgroup lat = lattice_subgroup(g, c.steps);
    std::vector<Signal> bumps;
    for (auto shape : {BupuShape::kTriangle, BupuShape::kIndicator}) bumps.push_back(make_bupu(g, lat, shape).mother);
    // An arbitrary bump with the same contract.
    Signal odd = oracle::random_signal(g, rng);
    for (auto i : lat.indices()) odd[i] = i == 0 ? Complex(1.0) : Complex(0.0);
    bumps.push_back(odd);
    for (const auto& phi : bumps) {
      // Contract: phi(0) = 1 and phi vanishes on the rest of the lattice.
      bool contract = std::abs(phi[0] - 1.0) <= 1e-15;
      for (auto i : lat.indices()) contract = contract && (i == 0 || std::abs(phi[i]) <= 1e-15);
      if (!contract) continue;
      for (int trial = 0; trial < 10; ++trial) {
        const Signal f = oracle::random_signal(g, rng);
        const SampleArray s = sample(f, lat);
        const Signal e = semidiscrete_extension(s, phi);
        for (auto i : lat.indices()) interp.see(std::abs(e[i] - f[i]), to_string(lat));
      }
      ++checked;
    }
  }
  const GroupSpec g({256});
  const Signal g0 = finite_gaussian(g);
  std::vector<double> errors;
  std::string trace;
  for (std::int64_t gap : {16, 8, 4}) {
    const std::vector<std::int64_t> st{gap};
    const Subgroup lat = lattice_subgroup(g, st);
    const QuasiInterpolation q = quasi_interpolate(g0, lat, BupuShape::kTriangle);
    // Direct sum of hats centred on the lattice.
    std::vector<Complex> direct(g.order());
    for (std::int64_t x = 0; x < 256; ++x) {
      for (std::int64_t lam = 0; lam < 256; lam += gap) {
        const std::int64_t d = std::min((x - lam + 256) % 256, (lam - x + 256) % 256);
        direct[static_cast<std::size_t>(x)] += g0[static_cast<std::size_t>(lam)] *
                                               std::max(0.0, 1.0 - static_cast<double>(d) / static_cast<double>(gap));
      }
    }
    agree.see(abs_max(q.approx.values(), direct), "gap " + std::to_string(gap));
    errors.push_back(abs_max(direct, g0.values()));
    trace += (trace.empty() ? "" : " > ") + std::to_string(gap) + ":" + std::to_string(errors.back());
  }
  const bool strict = errors[0] > errors[1] && errors[1] > errors[2];
  Outcome o = combine({&interp, &agree}, std::to_string(checked) + " bumps, quasi-interpolation " + trace +
                                             (strict ? " strictly decreasing" : " NOT strictly decreasing"));
  o.pass = o.pass && strict && checked >= 14;
  return o;
}

// 10. Mild convergence of refining combs.
Outcome mild_convergence_check() {
  const GroupSpec g({256});
  const DistributionSequence seq = refining_comb_sequence(g);
  const GaborSystem sys(finite_gaussian(g), TFLattice::uniform(g, 2, 2));
  const auto probes = default_probes(g, 16, 16);
  const ConvergenceReport r = mild_convergence(seq, sys, probes);
  bool monotone = true, vanish = true;
  std::ostringstream os;
  for (const auto& [name, get] : std::vector<std::pair<std::string, std::function<double(const ConvergenceRow&)>>>{
           {"d_pair", [](const ConvergenceRow& x) { return x.d_pair; }},
           {"d_stft", [](const ConvergenceRow& x) { return x.d_stft; }},
           {"d_coeff", [](const ConvergenceRow& x) { return x.d_coeff; }}}) {
    for (std::size_t i = 1; i < r.rows.size(); ++i) {
      if (get(r.rows[i]) > get(r.rows[i - 1]) * (1.0 + 1e-9)) {
        monotone = false;
        os << name << " rises at stage " << i << "; ";
      }
    }
    const double ratio = get(r.rows.back()) / get(r.rows.front());
    vanish = vanish && ratio <= 1e-3;
    os << name << " " << get(r.rows.front()) << "->" << get(r.rows.back()) << "; ";
  }

  // Zero deviation in one metric exactly when zero in the others.
  std::mt19937_64 rng(99);
  const Signal base = oracle::random_signal(g, rng);
  std::vector<std::pair<std::string, Signal>> cases{{"equal", base},
                                                    {"dirac", base + 1e-3 * dirac(g, g.element({17}))},
                                                    {"frequency", base + pure_frequency(g, g.element({5}))},
                                                    {"tiny", base + 1e-9 * oracle::random_signal(g, rng)},
                                                    {"random", oracle::random_signal(g, rng)}};
  bool coincide = true;
  for (const auto& [name, sigma] : cases) {
    const double dp = mild_deviation_pairing(sigma, base, probes);
    const double ds = mild_deviation_stft(sigma, base, finite_gaussian(g));
    const double dc = mild_deviation_coeff(sigma, base, sys);
    const bool zp = dp == 0.0, zs = ds == 0.0, zc = dc == 0.0;
    const bool expect_zero = name == "equal";
    if (zp != expect_zero || zs != expect_zero || zc != expect_zero) {
      coincide = false;
      os << "coincidence fails for " << name << "; ";
    }
  }
  os << r.rows.size() << " stages, a=b=2";
  return {monotone && vanish && coincide,
          std::string(monotone ? "non-increasing" : "NOT monotone") + ", " +
              (vanish ? "final <= 1e-3 initial" : "final ratio too large") + ", " +
              (coincide ? "zero sets coincide" : "zero sets differ") + ": " + os.str()};
}

// 11. Tensor products.
Outcome tensor_factorization(std::mt19937_64& rng) {
  const GroupSpec g1({4}), g2({6});
  Worst ft{"dft", 1e-10}, res{"restriction", 1e-10}, s0{"s0_norm", 1e-10};
  for (int trial = 0; trial < 20; ++trial) {
    const Signal f = oracle::random_signal(g1, rng);
    const Signal h = oracle::random_signal(g2, rng);
    const Signal fg = tensor(f, h);
    const GroupSpec& g = fg.group();
    const auto lhs = oracle::naive_dft(g, fg.values());
    const Signal rhs = tensor(dft(f), dft(h));
    ft.see(oracle::rel_err(lhs, rhs.values()), "dft");

    const std::vector<std::size_t> first{0}, second{1};
    const Signal r1 = restriction(fg, factor_subgroup(g, first));
    const Signal r2 = restriction(fg, factor_subgroup(g, second));
    res.see(oracle::rel_err(r1.values(), (h[0] * f).values()), "first axis");
    res.see(oracle::rel_err(r2.values(), (f[0] * h).values()), "second axis");

    const double prod = s0_norm(f) * s0_norm(h);
    s0.see(std::abs(s0_norm(fg) - prod) / prod, "s0");
  }
  return combine({&ft, &res, &s0}, "Z4 x Z6");
}

// 12. Two identical CLI runs.
Outcome cli_determinism(const std::string& cli) {
  if (cli.empty()) return {false, "no --cli path given"};
  const fs::path dir = fs::temp_directory_path() / ("mildspec_acceptance_" + std::to_string(::getpid()));
  fs::create_directories(dir);
  auto run = [&](const std::string& name) {
    const std::string cmd = "\"" + cli + "\" verify all --group 24 --seed 7 --report \"" + (dir / name).string() +
                            "\" 2> \"" + (dir / "stderr.txt").string() + "\"";
    const int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  };
  const int c1 = run("first.json");
  const int c2 = run("second.json");
  auto slurp = [&](const std::string& name) {
    std::ifstream in(dir / name, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
  };
  const std::string a = slurp("first.json");
  const std::string b = slurp("second.json");
  fs::remove_all(dir);
  const bool same = !a.empty() && a == b;
  return {c1 == 0 && c2 == 0 && same, "exit codes " + std::to_string(c1) + "," + std::to_string(c2) + ", reports " +
                                          (same ? "byte-identical" : "differ") + " (" + std::to_string(a.size()) +
                                          " bytes)"};
}

}  // namespace

int main(int argc, char** argv) {
  std::string cli;
  for (int i = 1; i < argc; ++i) {
    const std::string arg = argv[i];
    if (arg == "--cli" && i + 1 < argc) {
      cli = argv[++i];
    } else {
      std::cerr << "usage: acceptance --cli <mildspec binary>\n";
      return 2;
    }
  }
  std::mt19937_64 rng(20261015);
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"fourier core", [&] { return fourier_core(rng); }},
      {"frequencies to deltas", [] { return frequencies_to_deltas(); }},
      {"poisson summation", [&] { return poisson(rng); }},
      {"comb duality", [] { return comb_duality(); }},
      {"sampling/periodization duality", [&] { return sampling_periodization(rng); }},
      {"gabor frames", [&] { return gabor_frames(rng); }},
      {"stft identities", [&] { return stft_identities(rng); }},
      {"periodic spectrum", [&] { return periodic_spectrum(rng); }},
      {"extension and interpolation", [&] { return extension(rng); }},
      {"mild convergence", [] { return mild_convergence_check(); }},
      {"tensor factorization", [&] { return tensor_factorization(rng); }},
      {"cli determinism", [&] { return cli_determinism(cli); }},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (!o.pass) ++failed;
    std::printf("%s %2zu %-32s %s (%.2fs)\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(),
                o.detail.c_str(), secs);
    std::fflush(stdout);
  }
  std::printf("%zu/%zu criteria passed\n", criteria.size() - static_cast<std::size_t>(failed), criteria.size());
  return failed == 0 ? 0 : 1;
}
