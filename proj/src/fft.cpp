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

#include <map>
#include <mutex>

#include "mildspec/errors.hpp"

namespace mildspec::fft {
namespace {

// Largest prime handled by a direct butterfly before switching to Bluestein.
constexpr std::size_t kMaxDirectRadix = 61;

std::vector<std::size_t> prime_factors(std::size_t n) {
  std::vector<std::size_t> f;
  for (std::size_t p = 2; p * p <= n; ++p) {
    while (n % p == 0) {
      f.push_back(p);
      n /= p;
    }
  }
  if (n > 1) f.push_back(n);
  return f;
}

std::size_t next_pow2(std::size_t n) {
  std::size_t m = 1;
  while (m < n) m <<= 1;
  return m;
}

}  // namespace

Plan::Plan(std::size_t n) : n_(n) {
  if (n == 0) throw InvalidArgument("fft length must be positive");
  factors_ = prime_factors(n);
  const bool direct = factors_.empty() || factors_.back() <= kMaxDirectRadix;
  if (direct) {
    twiddles_.resize(n);
    const auto sn = static_cast<std::int64_t>(n);
    for (std::size_t j = 0; j < n; ++j) twiddles_[j] = unit_root(-static_cast<std::int64_t>(j), sn);
    return;
  }
  const std::size_t m = next_pow2(2 * n - 1);
  inner_ = std::make_unique<Plan>(m);
  const auto two_n = static_cast<std::int64_t>(2 * n);
  chirp_.resize(n);
  for (std::size_t j = 0; j < n; ++j) {
    const auto jj = static_cast<std::int64_t>((j * j) % (2 * n));
    chirp_[j] = unit_root(-jj, two_n);  // exp(-pi i j^2 / n)
  }
  kernel_spectrum_.assign(m, Complex{});
  kernel_spectrum_[0] = std::conj(chirp_[0]);
  for (std::size_t j = 1; j < n; ++j) {
    kernel_spectrum_[j] = std::conj(chirp_[j]);
    kernel_spectrum_[m - j] = std::conj(chirp_[j]);
  }
  inner_->forward(kernel_spectrum_);
}

void Plan::execute(std::span<Complex> data, Direction dir) const {
  if (data.size() != n_) throw InvalidArgument("fft input length does not match plan");
  if (dir == Direction::kForward) {
    forward(data);
    return;
  }
  for (auto& v : data) v = std::conj(v);
  forward(data);
  for (auto& v : data) v = std::conj(v);
}

void Plan::forward(std::span<Complex> data) const {
  if (n_ == 1) return;
  if (inner_) {
    const std::size_t m = inner_->size();
    std::vector<Complex> a(m);
    for (std::size_t j = 0; j < n_; ++j) a[j] = data[j] * chirp_[j];
    inner_->forward(a);
    for (std::size_t k = 0; k < m; ++k) a[k] *= kernel_spectrum_[k];
    for (auto& v : a) v = std::conj(v);
    inner_->forward(a);
    const double scale = 1.0 / static_cast<double>(m);
    for (std::size_t k = 0; k < n_; ++k) data[k] = chirp_[k] * std::conj(a[k]) * scale;
    return;
  }
  std::vector<Complex> out(n_);
  radix(data.data(), 1, out.data(), n_, 0);
  std::copy(out.begin(), out.end(), data.begin());
}

void Plan::radix(const Complex* in, std::size_t stride, Complex* out, std::size_t n,
                 std::size_t level) const {
  if (n == 1) {
    out[0] = in[0];
    return;
  }
  const std::size_t p = factors_[level];
  const std::size_t m = n / p;
  for (std::size_t r = 0; r < p; ++r) radix(in + r * stride, stride * p, out + r * m, m, level + 1);

  const std::size_t tw = n_ / n;
  const std::size_t root_p = n_ / p;
  std::vector<Complex> t(p);
  for (std::size_t k = 0; k < m; ++k) {
    for (std::size_t r = 0; r < p; ++r) t[r] = out[r * m + k] * twiddles_[(r * k * tw) % n_];
    if (p == 2) {
      out[k] = t[0] + t[1];
      out[k + m] = t[0] - t[1];
      continue;
    }
    for (std::size_t q = 0; q < p; ++q) {
      Complex acc = t[0];
      for (std::size_t r = 1; r < p; ++r) acc += t[r] * twiddles_[((r * q) % p) * root_p];
      out[q * m + k] = acc;
    }
  }
}

std::shared_ptr<const Plan> plan_for(std::size_t n) {
  static std::mutex mutex;
  static std::map<std::size_t, std::shared_ptr<const Plan>> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  auto plan = std::make_shared<const Plan>(n);
  cache.emplace(n, plan);
  return plan;
}

void transform(std::span<Complex> data, const GroupSpec& g, Direction dir) {
  if (data.size() != g.order()) throw InvalidArgument("transform size does not match group");
  std::size_t stride = g.order();
  std::vector<Complex> line;
  for (std::size_t j = 0; j < g.rank(); ++j) {
    const auto len = static_cast<std::size_t>(g.modulus(j));
    stride /= len;
    if (len == 1) continue;
    const auto plan = plan_for(len);
    line.resize(len);
    const std::size_t block = len * stride;
    for (std::size_t base = 0; base < g.order(); base += block) {
      for (std::size_t i = 0; i < stride; ++i) {
        for (std::size_t k = 0; k < len; ++k) line[k] = data[base + i + k * stride];
        plan->execute(line, dir);
        for (std::size_t k = 0; k < len; ++k) data[base + i + k * stride] = line[k];
      }
    }
  }
}

}  // namespace mildspec::fft
