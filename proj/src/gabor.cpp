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

#include "mildspec/gabor.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include "mildspec/errors.hpp"
#include "mildspec/fft.hpp"
#include "mildspec/parallel.hpp"

namespace mildspec {

namespace {

std::vector<std::int64_t> quotient_moduli(const GroupSpec& g, const std::vector<std::int64_t>& step,
                                          const char* what) {
  if (step.size() != g.rank()) {
    throw InvalidArgument(std::string(what) + " step needs one entry per axis of " + to_string(g));
  }
  std::vector<std::int64_t> m(g.rank());
  for (std::size_t j = 0; j < g.rank(); ++j) {
    if (step[j] < 1 || g.modulus(j) % step[j] != 0) {
      throw InvalidArgument(std::string(what) + " step " + std::to_string(step[j]) +
                            " does not divide " + std::to_string(g.modulus(j)));
    }
    m[j] = g.modulus(j) / step[j];
  }
  return m;
}

std::vector<std::size_t> scaled_points(const GroupSpec& g, const GroupSpec& indices,
                                       const std::vector<std::int64_t>& step) {
  std::vector<std::size_t> pts(indices.order());
  for (std::size_t k = 0; k < pts.size(); ++k) {
    GroupElement e = indices.element_at(k);
    for (std::size_t j = 0; j < g.rank(); ++j) e.coords[j] *= step[j];
    pts[k] = g.index_of(e);
  }
  return pts;
}

// For each x in G, the index of x mod (N/b) in the frequency index group.
std::vector<std::size_t> frequency_fold(const TFLattice& lattice) {
  const GroupSpec& g = lattice.group();
  const GroupSpec& m = lattice.freq_indices();
  std::vector<std::size_t> fold(g.order());
  for (std::size_t x = 0; x < fold.size(); ++x) {
    GroupElement e = g.element_at(x);
    fold[x] = m.index_of(m.element(e.coords));
  }
  return fold;
}

}  // namespace

TFLattice::TFLattice(GroupSpec group, std::vector<std::int64_t> a, std::vector<std::int64_t> b)
    : group_(std::move(group)),
      a_(std::move(a)),
      b_(std::move(b)),
      time_indices_(quotient_moduli(group_, a_, "time")),
      freq_indices_(quotient_moduli(group_, b_, "frequency")),
      time_points_(scaled_points(group_, time_indices_, a_)),
      freq_points_(scaled_points(group_, freq_indices_, b_)) {}

TFLattice TFLattice::uniform(const GroupSpec& group, std::int64_t a, std::int64_t b) {
  return TFLattice(group, std::vector<std::int64_t>(group.rank(), a),
                   std::vector<std::int64_t>(group.rank(), b));
}

double TFLattice::redundancy() const {
  return static_cast<double>(size()) / static_cast<double>(group_.order());
}

STFTGrid stft(const Signal& f, const Signal& window, std::string window_id) {
  require_same_group(f, window);
  const GroupSpec& g = f.group();
  const std::size_t n = g.order();
  STFTGrid grid{g, std::move(window_id), std::vector<Complex>(n * n), 0.0};
  parallel_for(n, [&](std::size_t t) {
    std::span<Complex> row(grid.values.data() + t * n, n);
    for (std::size_t x = 0; x < n; ++x) row[x] = f[x] * std::conj(window[g.sub_index(x, t)]);
    fft::transform(row, g, fft::Direction::kForward);
  });
  for (const auto& v : grid.values) grid.max_modulus = std::max(grid.max_modulus, std::abs(v));
  return grid;
}

double s0_norm(const Signal& f) {
  const Signal g0 = finite_gaussian(f.group());
  const STFTGrid grid = stft(f, g0, "gauss");
  double acc = 0.0;
  for (const auto& v : grid.values) acc += std::abs(v);
  const double w = g0.norm2();
  return acc / (w * w);
}

double s0prime_norm(const Signal& sigma) {
  return stft(sigma, finite_gaussian(sigma.group()), "gauss").max_modulus;
}

CoefficientArray::CoefficientArray(TFLattice lattice_in, std::vector<Complex> coeffs_in)
    : lattice(std::move(lattice_in)), coeffs(std::move(coeffs_in)) {
  if (coeffs.size() != lattice.size()) {
    throw InvalidArgument("coefficient array has " + std::to_string(coeffs.size()) +
                          " entries for a lattice of size " + std::to_string(lattice.size()));
  }
}

CoefficientArray gabor_analysis(const Signal& f, const Signal& window, const TFLattice& lattice) {
  require_same_group(f, window);
  if (!(f.group() == lattice.group())) throw GroupMismatch("lattice and signal groups differ");
  const GroupSpec& g = f.group();
  const std::size_t n = g.order();
  const std::size_t nt = lattice.time_indices().order();
  const std::size_t nf = lattice.freq_indices().order();
  std::vector<Complex> coeffs(nt * nf);
  parallel_for(nt, [&](std::size_t k) {
    const std::size_t t = lattice.time_point(k);
    std::vector<Complex> row(n);
    for (std::size_t x = 0; x < n; ++x) row[x] = f[x] * std::conj(window[g.sub_index(x, t)]);
    fft::transform(row, g, fft::Direction::kForward);
    for (std::size_t l = 0; l < nf; ++l) coeffs[k * nf + l] = row[lattice.freq_point(l)];
  });
  return CoefficientArray(lattice, std::move(coeffs));
}

Signal gabor_synthesis(const CoefficientArray& c, const Signal& window) {
  const TFLattice& lattice = c.lattice;
  if (!(window.group() == lattice.group())) throw GroupMismatch("window and lattice groups differ");
  const GroupSpec& g = lattice.group();
  const GroupSpec& m = lattice.freq_indices();
  const std::size_t n = g.order();
  const std::size_t nt = lattice.time_indices().order();
  const std::size_t nf = m.order();
  const auto fold = frequency_fold(lattice);

  std::vector<Complex> out(n);
  std::vector<Complex> h(nf);
  for (std::size_t k = 0; k < nt; ++k) {
    // sum_l c_{k,l} chi_{b l}(x) depends on x only through x mod N/b.
    std::copy(c.coeffs.begin() + static_cast<std::ptrdiff_t>(k * nf),
              c.coeffs.begin() + static_cast<std::ptrdiff_t>((k + 1) * nf), h.begin());
    fft::transform(h, m, fft::Direction::kInverse);
    const std::size_t t = lattice.time_point(k);
    for (std::size_t x = 0; x < n; ++x) out[x] += h[fold[x]] * window[g.sub_index(x, t)];
  }
  return Signal(g, std::move(out));
}

Signal gabor_synthesis(const CoefficientArray& c, const GaborSystem& sys) {
  if (!(c.lattice == sys.lattice())) throw InvalidArgument("coefficients belong to another lattice");
  return gabor_synthesis(c, sys.window());
}

Signal frame_operator(const GaborSystem& sys, const Signal& f) {
  return gabor_synthesis(gabor_analysis(f, sys.window(), sys.lattice()), sys.window());
}

Eigen::MatrixXcd frame_matrix(const Signal& window, const TFLattice& lattice) {
  if (!(window.group() == lattice.group())) throw GroupMismatch("window and lattice groups differ");
  const GroupSpec& g = lattice.group();
  const std::size_t n = g.order();
  const std::size_t nt = lattice.time_indices().order();
  const auto& m = lattice.freq_indices();
  // Differences x - y that every frequency character of the lattice ignores.
  const Subgroup blind = lattice_subgroup(g, m.moduli());
  const double weight = static_cast<double>(m.order());

  Eigen::MatrixXcd s = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(n),
                                              static_cast<Eigen::Index>(n));
  parallel_for(n, [&](std::size_t x) {
    for (auto z : blind.indices()) {
      const std::size_t y = g.sub_index(x, z);
      Complex acc{};
      for (std::size_t k = 0; k < nt; ++k) {
        const std::size_t t = lattice.time_point(k);
        acc += window[g.sub_index(x, t)] * std::conj(window[g.sub_index(y, t)]);
      }
      s(static_cast<Eigen::Index>(x), static_cast<Eigen::Index>(y)) = weight * acc;
    }
  });
  return s;
}

GaborSystem::GaborSystem(Signal window, TFLattice lattice) {
  if (!(window.group() == lattice.group())) throw GroupMismatch("window and lattice groups differ");
  auto state = std::make_shared<State>(State{std::move(window), std::move(lattice), {}, {}, {}});
  state->matrix = mildspec::frame_matrix(state->window, state->lattice);

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> eig(state->matrix, Eigen::EigenvaluesOnly);
  const auto& ev = eig.eigenvalues();
  state->bounds = {ev(0), ev(ev.size() - 1)};

  if (state->bounds.upper > 0.0 && state->bounds.lower > kFrameTolerance * state->bounds.upper) {
    const auto n = static_cast<Eigen::Index>(state->window.size());
    Eigen::VectorXcd rhs(n);
    for (Eigen::Index i = 0; i < n; ++i) rhs(i) = state->window[static_cast<std::size_t>(i)];
    const Eigen::VectorXcd sol = state->matrix.ldlt().solve(rhs);
    std::vector<Complex> dual(static_cast<std::size_t>(n));
    for (Eigen::Index i = 0; i < n; ++i) dual[static_cast<std::size_t>(i)] = sol(i);
    state->dual.emplace(state->window.group(), std::move(dual));
  }
  state_ = std::move(state);
}

const Signal& GaborSystem::canonical_dual() const {
  if (!state_->dual) throw NotAFrame(state_->bounds.lower, state_->bounds.upper);
  return *state_->dual;
}

FrameBounds frame_bounds(const GaborSystem& sys) { return sys.bounds(); }

const Signal& canonical_dual(const GaborSystem& sys) { return sys.canonical_dual(); }

CoefficientArray gabor_coefficients(const Signal& sigma, const GaborSystem& sys) {
  return gabor_analysis(sigma, sys.canonical_dual(), sys.lattice());
}

}  // namespace mildspec
