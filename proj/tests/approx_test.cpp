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

#include <random>

#include "gtest/gtest.h"
#include "mildspec/errors.hpp"
#include "mildspec/fourier.hpp"
#include "mildspec/gabor.hpp"
#include "oracles.hpp"

namespace mildspec {
namespace {

using C = Complex;

GroupElement el(std::int64_t x) { return GroupElement{{x}}; }

Subgroup mult(const GroupSpec& g, std::int64_t step) { return subgroup_generated(g, {g.element({step})}); }

constexpr BupuShape kShapes[] = {BupuShape::kTriangle, BupuShape::kBspline2, BupuShape::kIndicator};

TEST(Bupu, ShapeNames) {
  for (auto s : kShapes) EXPECT_EQ(parse_bupu_shape(to_string(s)), s);
  EXPECT_THROW(parse_bupu_shape("sinc"), InvalidArgument);
}

TEST(Bupu, TrivialLatticeGivesOneConstantBump) {
  const GroupSpec g({8});
  for (auto s : kShapes) {
    const BUPU b = make_bupu(g, trivial_subgroup(g), s);
    ASSERT_EQ(b.bumps.size(), 1u);
    EXPECT_LT(max_abs_diff(b.bumps[0], Signal::constant(g, 1)), 1e-12) << to_string(s);
  }
}

TEST(Bupu, FullLatticeGivesDiracBumps) {
  const GroupSpec g({8});
  const BUPU b = make_bupu(g, full_subgroup(g), BupuShape::kTriangle);
  ASSERT_EQ(b.bumps.size(), 8u);
  for (std::int64_t x = 0; x < 8; ++x) EXPECT_LT(max_abs_diff(b.bumps[x], dirac(g, el(x))), 1e-15);
}

TEST(Bupu, TriangleOnEvenLattice) {
  const GroupSpec g({8});
  const BUPU b = make_bupu(g, mult(g, 2), BupuShape::kTriangle);
  const std::vector<double> want{1, 0.5, 0, 0, 0, 0, 0, 0.5};
  for (std::size_t x = 0; x < 8; ++x) EXPECT_DOUBLE_EQ(b.mother[x].real(), want[x]);
  ASSERT_EQ(b.bumps.size(), 4u);
  for (std::size_t i = 0; i < 4; ++i) {
    EXPECT_LT(max_abs_diff(b.bumps[i], translate(b.mother, el(2 * i))), 1e-15);
  }
}

TEST(Bupu, PartitionOfUnityMatrix) {
  for (const auto& g : {GroupSpec({8}), GroupSpec({24}), GroupSpec({36}), GroupSpec({256}), GroupSpec({4, 6})}) {
    for (const auto& h : all_subgroups(g)) {
      std::vector<std::int64_t> gaps;
      try {
        gaps = lattice_gaps(h);
      } catch (const InvalidArgument&) {
        continue;
      }
      for (auto s : kShapes) {
        const BUPU b = make_bupu(g, h, s);
        std::vector<double> sum(g.order(), 0.0);
        for (const auto& bump : b.bumps) {
          for (std::size_t x = 0; x < g.order(); ++x) {
            EXPECT_GE(bump[x].real(), -1e-15);
            sum[x] += bump[x].real();
          }
        }
        for (std::size_t x = 0; x < g.order(); ++x) {
          if (s == BupuShape::kIndicator) {
            EXPECT_EQ(sum[x], 1.0);
          } else {
            EXPECT_NEAR(sum[x], 1.0, 1e-12) << to_string(g) << " " << to_string(h) << " " << to_string(s);
          }
        }
      }
    }
  }
}

TEST(Bupu, NonRectangularLatticeRejected) {
  const GroupSpec g({4, 4});
  const Subgroup diag = subgroup_generated(g, {g.element({1, 1})});
  EXPECT_THROW(lattice_gaps(diag), InvalidArgument);
  EXPECT_THROW(make_bupu(g, diag, BupuShape::kTriangle), InvalidArgument);
  EXPECT_THROW(make_bupu(GroupSpec({8}), diag, BupuShape::kTriangle), GroupMismatch);
}

TEST(Extension, DeltaSampleReturnsBump) {
  std::mt19937_64 rng(1);
  const GroupSpec g({12});
  const Subgroup lam = mult(g, 3);
  const Signal phi = oracle::random_signal(g, rng);
  std::vector<C> c(lam.order());
  c[0] = 1;
  EXPECT_LT(max_abs_diff(semidiscrete_extension(SampleArray(lam, c), phi), phi), 1e-14);
}

TEST(Extension, ConvolutionEqualsDirectSum) {
  std::mt19937_64 rng(2);
  for (const auto& g : {GroupSpec({24}), GroupSpec({4, 6})}) {
    for (const auto& lam : all_subgroups(g)) {
      const Signal phi = oracle::random_signal(g, rng);
      std::vector<C> c(lam.order());
      for (auto& v : c) v = oracle::random_signal(GroupSpec({1}), rng)[0];
      Signal direct = Signal::zeros(g);
      for (std::size_t i = 0; i < c.size(); ++i) direct += c[i] * translate(phi, lam.elements()[i]);
      EXPECT_LT(max_abs_diff(semidiscrete_extension(SampleArray(lam, c), phi), direct), 1e-12);
    }
  }
}

TEST(Extension, TriangleInterpolatesOnZ8) {
  const GroupSpec g({8});
  const Subgroup lam = mult(g, 2);
  const Signal phi = make_bupu(g, lam, BupuShape::kTriangle).mother;
  const ExtensionContract k = extension_contract(phi, lam);
  EXPECT_TRUE(k.unit_at_origin);
  EXPECT_TRUE(k.isolated_on_lattice);
  EXPECT_TRUE(k.inside_open_cell);
  const SampleArray c(lam, {C(1, 2), -3, C(0, 0.5), 7});
  const Signal e = semidiscrete_extension(c, phi);
  for (std::size_t i = 0; i < 4; ++i) EXPECT_NEAR(std::abs(e[lam.indices()[i]] - c.samples[i]), 0.0, 1e-15);
}

TEST(Extension, RestrictionIsSurjective) {
  std::mt19937_64 rng(3);
  for (const auto& g : {GroupSpec({24}), GroupSpec({36}), GroupSpec({4, 6})}) {
    for (const auto& lam : all_subgroups(g)) {
      std::vector<std::int64_t> gaps;
      try {
        gaps = lattice_gaps(lam);
      } catch (const InvalidArgument&) {
        continue;
      }
      for (auto s : {BupuShape::kTriangle, BupuShape::kIndicator}) {
        const Signal phi = make_bupu(g, lam, s).mother;
        ASSERT_TRUE(extension_contract(phi, lam).interpolates());
        const SampleArray c = sample(oracle::random_signal(g, rng), lam);
        const SampleArray back = sample(semidiscrete_extension(c, phi), lam);
        for (std::size_t i = 0; i < c.samples.size(); ++i) {
          EXPECT_NEAR(std::abs(back.samples[i] - c.samples[i]), 0.0, 1e-12);
        }
      }
    }
  }
}

TEST(Extension, ContractDetectsViolations) {
  const GroupSpec g({8});
  const Subgroup lam = mult(g, 2);
  const ExtensionContract wide = extension_contract(Signal::constant(g, 1), lam);
  EXPECT_TRUE(wide.unit_at_origin);
  EXPECT_FALSE(wide.isolated_on_lattice);
  EXPECT_FALSE(wide.inside_open_cell);
  EXPECT_FALSE(extension_contract(2.0 * dirac(g, el(0)), lam).unit_at_origin);
  const ExtensionContract spline = extension_contract(make_bupu(g, mult(g, 4), BupuShape::kBspline2).mother, mult(g, 4));
  EXPECT_FALSE(spline.inside_open_cell);
}

TEST(TensorExtension, RestrictsBackAndFactors) {
  std::mt19937_64 rng(4);
  const GroupSpec g1({4}), g2({6}), g({4, 6});
  const Signal f = oracle::random_signal(g1, rng), h = oracle::random_signal(g2, rng);
  const Subgroup axis = subgroup_generated(g, {g.element({1, 0})});
  EXPECT_LT(max_abs_diff(restriction(tensor_extension(f, Signal::constant(g2, 1)), axis), f), 1e-15);

  const Signal t = tensor_extension(f, h);
  for (std::size_t x = 0; x < 4; ++x) {
    for (std::size_t y = 0; y < 6; ++y) EXPECT_EQ(t[x * 6 + y], f[x] * h[y]);
  }
  const Signal lhs = oracle::naive_dft(t);
  const Signal rhs = tensor(oracle::naive_dft(f), oracle::naive_dft(h));
  EXPECT_LE(oracle::rel_err(lhs, rhs), 1e-12);
  EXPECT_LE(oracle::rel_err(dft(t), rhs), 1e-12);
  EXPECT_NEAR(s0_norm(t), s0_norm(f) * s0_norm(h), 1e-10 * s0_norm(t));
}

TEST(SamplingBound, Examples) {
  const GroupSpec g({24});
  const SamplingBound zero = sampling_bound(Signal::zeros(g), mult(g, 4));
  EXPECT_EQ(zero.lhs, 0.0);
  EXPECT_EQ(zero.ratio, 0.0);
  for (const auto& lam : all_subgroups(g)) {
    const SamplingBound d = sampling_bound(dirac(g, g.zero()), lam);
    EXPECT_EQ(d.lhs, 1.0);
    EXPECT_NEAR(d.ratio, 1.0 / s0_norm(dirac(g, g.zero())), 1e-14);
  }
}

TEST(SamplingBound, CorpusConstantIsStable) {
  const GroupSpec g({24});
  auto scan = [&](std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    double c = 0.0;
    for (int i = 0; i < 100; ++i) c = std::max(c, sampling_bound(oracle::random_signal(g, rng), mult(g, 4)).ratio);
    return c;
  };
  const double a = scan(7), b = scan(7), other = scan(8);
  EXPECT_EQ(a, b);
  EXPECT_TRUE(std::isfinite(a) && a > 0.0);
  EXPECT_NEAR(other, a, 0.1 * a);
}

TEST(QuasiInterpolation, ConstantIsReproduced) {
  const GroupSpec g({24});
  for (auto s : kShapes) {
    const QuasiInterpolation q = quasi_interpolate(Signal::constant(g, C(2, -1)), mult(g, 4), s);
    EXPECT_LE(q.sup_error, 1e-12);
  }
}

TEST(QuasiInterpolation, GaussianErrorShrinksWithRefinement) {
  const GroupSpec g({256});
  const Signal g0 = finite_gaussian(g);
  for (auto s : {BupuShape::kTriangle, BupuShape::kBspline2}) {
    const double e16 = quasi_interpolate(g0, mult(g, 16), s).sup_error;
    const double e8 = quasi_interpolate(g0, mult(g, 8), s).sup_error;
    const double e4 = quasi_interpolate(g0, mult(g, 4), s).sup_error;
    EXPECT_LT(e8, e16) << to_string(s);
    EXPECT_LT(e4, e8) << to_string(s);
  }
}

TEST(QuasiInterpolation, IndicatorMissesOffLatticeSpike) {
  const GroupSpec g({24});
  const QuasiInterpolation q = quasi_interpolate(dirac(g, el(5)), mult(g, 4), BupuShape::kIndicator);
  EXPECT_DOUBLE_EQ(q.sup_error, 1.0);
  EXPECT_EQ(q.approx.norm_inf(), 0.0);
}

}  // namespace
}  // namespace mildspec
