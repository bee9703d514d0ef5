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

#include "mildspec/fft.hpp"

#include <random>

#include "gtest/gtest.h"
#include "oracles.hpp"

namespace mildspec {
namespace {

std::vector<Complex> run(const Signal& f, fft::Direction dir) {
  std::vector<Complex> v(f.values().begin(), f.values().end());
  fft::transform(v, f.group(), dir);
  return v;
}

class FftLength : public ::testing::TestWithParam<std::int64_t> {};

TEST_P(FftLength, MatchesNaiveTransform) {
  std::mt19937_64 rng(GetParam());
  const GroupSpec g({GetParam()});
  const Signal f = oracle::random_signal(g, rng);
  EXPECT_LT(oracle::rel_err(run(f, fft::Direction::kForward), oracle::naive_dft(g, f.values())), 1e-12);
}

TEST_P(FftLength, InverseUndoesForwardUpToOrder) {
  std::mt19937_64 rng(GetParam() + 1);
  const GroupSpec g({GetParam()});
  const Signal f = oracle::random_signal(g, rng);
  auto v = run(f, fft::Direction::kForward);
  fft::transform(v, g, fft::Direction::kInverse);
  for (auto& x : v) x /= static_cast<double>(g.order());
  EXPECT_LT(oracle::rel_err(v, f.values()), 1e-13);
}

INSTANTIATE_TEST_SUITE_P(Lengths, FftLength,
                         ::testing::Values(1, 2, 3, 4, 5, 6, 7, 8, 9, 12, 16, 17, 24, 25, 36, 49, 61,
                                           64, 67, 97, 100, 128, 131, 210, 256, 243, 1009));

TEST(Fft, MultiAxisMatchesNaive) {
  std::mt19937_64 rng(17);
  for (const auto& g : {GroupSpec({4, 6}), GroupSpec({2, 3, 5}), GroupSpec({67, 3}), GroupSpec({1, 8})}) {
    const Signal f = oracle::random_signal(g, rng);
    EXPECT_LT(oracle::rel_err(run(f, fft::Direction::kForward), oracle::naive_dft(g, f.values())), 1e-12)
        << to_string(g);
  }
}

TEST(Fft, LargePrimesUseChirpRoute) {
  EXPECT_FALSE(fft::plan_for(61)->uses_bluestein());
  EXPECT_TRUE(fft::plan_for(67)->uses_bluestein());
  EXPECT_FALSE(fft::plan_for(1024)->uses_bluestein());
  EXPECT_EQ(fft::plan_for(24).get(), fft::plan_for(24).get());
}

TEST(Fft, DeltaTransformsToConstant) {
  const GroupSpec g({30});
  const auto v = run(dirac(g, g.zero()), fft::Direction::kForward);
  for (const auto& x : v) EXPECT_EQ(x, Complex(1.0));
}

}  // namespace
}  // namespace mildspec
