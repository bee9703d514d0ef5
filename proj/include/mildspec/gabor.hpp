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

#ifndef MILDSPEC_GABOR_HPP_
#define MILDSPEC_GABOR_HPP_

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "mildspec/group.hpp"
#include "mildspec/signal.hpp"

namespace mildspec {

// Separable time-frequency lattice {(a k, b l)} in G x G^. Steps are given
// per axis and must divide the corresponding modulus. Time points are
// indexed by the group Z_{N/a}, frequency points by Z_{N/b}; a coefficient
// (k, l) lives at flat index k * |Z_{N/b}| + l.
class TFLattice {
 public:
  TFLattice(GroupSpec group, std::vector<std::int64_t> a, std::vector<std::int64_t> b);
  // Same steps on every axis.
  static TFLattice uniform(const GroupSpec& group, std::int64_t a, std::int64_t b);

  const GroupSpec& group() const { return group_; }
  const std::vector<std::int64_t>& time_step() const { return a_; }
  const std::vector<std::int64_t>& freq_step() const { return b_; }
  const GroupSpec& time_indices() const { return time_indices_; }
  const GroupSpec& freq_indices() const { return freq_indices_; }

  std::size_t size() const { return time_indices_.order() * freq_indices_.order(); }
  // |Lambda| / |G|; the system can only be a frame when this is >= 1.
  double redundancy() const;

  // Parent-group indices of the k-th time point and l-th frequency point.
  std::size_t time_point(std::size_t k) const { return time_points_[k]; }
  std::size_t freq_point(std::size_t l) const { return freq_points_[l]; }

  friend bool operator==(const TFLattice& x, const TFLattice& y) {
    return x.group_ == y.group_ && x.a_ == y.a_ && x.b_ == y.b_;
  }

 private:
  GroupSpec group_;
  std::vector<std::int64_t> a_;
  std::vector<std::int64_t> b_;
  GroupSpec time_indices_;
  GroupSpec freq_indices_;
  std::vector<std::size_t> time_points_;
  std::vector<std::size_t> freq_points_;
};

// V_g f(t, s) = <f, M_s T_t g> on all of G x G^, stored row-major in t.
struct STFTGrid {
  GroupSpec group;
  std::string window_id;
  std::vector<Complex> values;
  double max_modulus = 0.0;

  Complex at(std::size_t t, std::size_t s) const { return values[t * group.order() + s]; }
};

STFTGrid stft(const Signal& f, const Signal& window, std::string window_id = "custom");

// sum_{t,s} |V_{g0} f(t,s)| / ||g0||_2^2 with g0 the finite Gaussian.
double s0_norm(const Signal& f);

// max_{t,s} |sigma(M_s T_t g0)|. Because g0 is real this equals
// max |V_{g0} sigma|, i.e. the sup-norm of the Gaussian STFT.
double s0prime_norm(const Signal& sigma);

struct CoefficientArray {
  TFLattice lattice;
  std::vector<Complex> coeffs;

  CoefficientArray(TFLattice lattice, std::vector<Complex> coeffs);
  Complex at(std::size_t k, std::size_t l) const {
    return coeffs[k * lattice.freq_indices().order() + l];
  }
};

struct FrameBounds {
  double lower = 0.0;
  double upper = 0.0;
};

// A > kFrameTolerance * B declares a frame.
inline constexpr double kFrameTolerance = 1e-10;

// Window plus lattice. The frame operator matrix, its spectrum and (for
// frames) the canonical dual window are computed once at construction and
// shared between copies.
class GaborSystem {
 public:
  GaborSystem(Signal window, TFLattice lattice);

  const Signal& window() const { return state_->window; }
  const TFLattice& lattice() const { return state_->lattice; }
  FrameBounds bounds() const { return state_->bounds; }
  bool is_frame() const { return state_->dual.has_value(); }
  // Throws NotAFrame when the frame operator is singular.
  const Signal& canonical_dual() const;
  const Eigen::MatrixXcd& frame_matrix() const { return state_->matrix; }

 private:
  struct State {
    Signal window;
    TFLattice lattice;
    Eigen::MatrixXcd matrix;
    FrameBounds bounds;
    std::optional<Signal> dual;
  };
  std::shared_ptr<const State> state_;
};

// Samples of V_window f on the lattice.
CoefficientArray gabor_analysis(const Signal& f, const Signal& window, const TFLattice& lattice);
// sum_{k,l} c_{k,l} M_{b l} T_{a k} window.
Signal gabor_synthesis(const CoefficientArray& c, const Signal& window);
Signal gabor_synthesis(const CoefficientArray& c, const GaborSystem& sys);

// S f = sum_lambda <f, pi(lambda) g> pi(lambda) g, applied through analysis
// and synthesis.
Signal frame_operator(const GaborSystem& sys, const Signal& f);

// Matrix of S assembled from Walnut's representation
// S[x][y] = [x - y in (N/b)Z] prod_j(N_j/b_j) sum_k g(x - a k) conj(g(y - a k)).
Eigen::MatrixXcd frame_matrix(const Signal& window, const TFLattice& lattice);

FrameBounds frame_bounds(const GaborSystem& sys);
const Signal& canonical_dual(const GaborSystem& sys);

// Canonical (minimal l2 norm) coefficients: samples of V_{dual} sigma.
CoefficientArray gabor_coefficients(const Signal& sigma, const GaborSystem& sys);

}  // namespace mildspec

#endif  // MILDSPEC_GABOR_HPP_
