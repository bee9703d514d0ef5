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

#ifndef MILDSPEC_FFT_HPP_
#define MILDSPEC_FFT_HPP_

#include <cstddef>
#include <memory>
#include <span>
#include <vector>

#include "mildspec/group.hpp"

namespace mildspec::fft {

// forward: X[k] = sum_j x[j] exp(-2 pi i jk/n); inverse uses exp(+2 pi i jk/n).
// Neither direction normalizes.
enum class Direction { kForward, kInverse };

// Mixed-radix decimation in time for lengths whose prime factors are small,
// Bluestein's chirp-z convolution otherwise. Immutable once built, so one
// plan may serve concurrent callers.
class Plan {
 public:
  explicit Plan(std::size_t n);

  std::size_t size() const { return n_; }
  bool uses_bluestein() const { return static_cast<bool>(inner_); }
  void execute(std::span<Complex> data, Direction dir) const;

 private:
  void forward(std::span<Complex> data) const;
  void radix(const Complex* in, std::size_t stride, Complex* out, std::size_t n,
             std::size_t level) const;

  std::size_t n_;
  std::vector<std::size_t> factors_;
  std::vector<Complex> twiddles_;  // exp(-2 pi i j / n)
  // Bluestein state.
  std::unique_ptr<Plan> inner_;
  std::vector<Complex> chirp_;
  std::vector<Complex> kernel_spectrum_;
};

// Shared plan for length n, built once and cached.
std::shared_ptr<const Plan> plan_for(std::size_t n);

// In-place transform of data laid out in g's canonical order, applied
// along every axis.
void transform(std::span<Complex> data, const GroupSpec& g, Direction dir);

}  // namespace mildspec::fft

#endif  // MILDSPEC_FFT_HPP_
