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

#ifndef MILDSPEC_APPROX_HPP_
#define MILDSPEC_APPROX_HPP_

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "mildspec/group.hpp"
#include "mildspec/signal.hpp"

namespace mildspec {

enum class BupuShape { kTriangle, kBspline2, kIndicator };

// Throws InvalidArgument for unknown names ("triangle", "bspline2", "indicator").
BupuShape parse_bupu_shape(std::string_view name);
std::string to_string(BupuShape shape);

// Per-axis spacing of a rectangular lattice gap_1 Z x ... x gap_d Z. Throws
// InvalidArgument ("incompatible lattice spacing") for other lattices.
std::vector<std::int64_t> lattice_gaps(const Subgroup& lattice);

// Bounded uniform partition of unity: bumps[p] = T_lambda mother for the
// p-th lattice element, and sum_p bumps[p] == 1 everywhere.
//  triangle  - discrete hat 1 - |x|/gap of width 2 gap per axis
//  bspline2  - the hat convolved with itself, divided by gap
//  indicator - indicator of the centred fundamental cell
struct BUPU {
  Subgroup lattice;
  BupuShape shape;
  std::vector<std::int64_t> gaps;
  Signal mother;
  std::vector<Signal> bumps;
};

BUPU make_bupu(const GroupSpec& g, const Subgroup& lattice, BupuShape shape);

// Samples ordered like lattice.elements().
struct SampleArray {
  Subgroup lattice;
  std::vector<Complex> samples;

  SampleArray(Subgroup lattice, std::vector<Complex> samples);
};

SampleArray sample(const Signal& f, const Subgroup& lattice);

// E(c) = sum_lambda c_lambda T_lambda phi = (sum_lambda c_lambda delta_lambda) * phi,
// evaluated as an FFT convolution. The result interpolates c only when
// extension_contract(phi, lattice).interpolates(); otherwise it is still
// computed.
Signal semidiscrete_extension(const SampleArray& c, const Signal& phi);

struct ExtensionContract {
  bool unit_at_origin = false;    // phi(0) == 1
  bool isolated_on_lattice = false;  // phi vanishes on Lambda \ {0}
  bool inside_open_cell = false;  // supp(phi) in the open cell |x_j| < gap_j

  bool interpolates() const { return unit_at_origin && isolated_on_lattice; }
};

ExtensionContract extension_contract(const Signal& phi, const Subgroup& lattice);

// f (x) g on G1 x G2. With g(0) = 1, restricting to G1 x {0} returns f.
Signal tensor_extension(const Signal& f, const Signal& g);

struct SamplingBound {
  double lhs = 0.0;    // sum_lambda |f(lambda)|
  double ratio = 0.0;  // lhs / ||f||_S0, zero for f == 0
};

SamplingBound sampling_bound(const Signal& f, const Subgroup& lattice);

struct QuasiInterpolation {
  Signal approx;
  double sup_error = 0.0;
};

// sum_lambda f(lambda) bump_lambda and its sup-distance to f.
QuasiInterpolation quasi_interpolate(const Signal& f, const Subgroup& lattice, BupuShape shape);

}  // namespace mildspec

#endif  // MILDSPEC_APPROX_HPP_
