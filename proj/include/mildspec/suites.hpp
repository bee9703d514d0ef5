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

// Self-checking verification suites and demos behind the command-line tool.
// Every check compares two independently computed quantities and records the
// residual next to its threshold.

#ifndef MILDSPEC_SUITES_HPP_
#define MILDSPEC_SUITES_HPP_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "mildspec/group.hpp"
#include "mildspec/approx.hpp"
#include "mildspec/io.hpp"
#include "mildspec/signal.hpp"

namespace mildspec {

struct CheckResult {
  std::string name;
  std::string group;
  std::string subgroup;  // empty when the check is not tied to a subgroup
  double residual = 0.0;
  double threshold = 0.0;
  // "<=" for residual ceilings, ">=" for lower bounds such as A / B.
  std::string relation = "<=";
  bool pass = false;
  // A check whose expected outcome is a refusal, such as NotAFrame.
  bool expected_negative = false;
  std::string note;
};

struct Measurement {
  std::string name;
  double value = 0.0;
  std::string note;
};

struct RunReport {
  std::string command;
  io::Json parameters = io::Json::object();
  std::vector<CheckResult> checks;
  std::vector<Measurement> measurements;
  std::optional<double> wall_time;  // seconds; left out of the JSON unless set

  bool pass() const;
  std::size_t failures() const;
  io::Json to_json() const;
};

struct SuiteOptions {
  GroupSpec group{std::vector<std::int64_t>{24}};
  std::uint64_t seed = 7;
  std::optional<std::vector<std::int64_t>> a;  // TF time step per axis
  std::optional<std::vector<std::int64_t>> b;  // TF frequency step per axis
  std::optional<double> tolerance;              // replaces every nonzero threshold
  int samples = 20;                             // random signals per property
  bool timing = false;                          // record wall time in the report
};

inline constexpr const char* kSuiteNames[] = {"group", "fourier", "gabor", "mild", "approx", "all"};

// Throws InvalidArgument for an unknown suite name.
RunReport run_suite(std::string_view suite, const SuiteOptions& options);

// Per axis, the largest d dividing N with d * d <= N / 4, so rho >= 4 when
// such a divisor exceeds 1.
std::vector<std::int64_t> default_tf_steps(const GroupSpec& g);

// Per axis, the smallest prime factor p of N when 2 p^2 <= N, else 1. Each
// axis then contributes redundancy at least 2.
std::vector<std::int64_t> fine_tf_steps(const GroupSpec& g);

struct DemoOutput {
  std::string csv;
  RunReport report;
};

inline constexpr const char* kDemoNames[] = {"comb-duality", "poisson", "periodic-spectrum",
                                             "mild-limit"};

struct DemoOptions {
  GroupSpec group{std::vector<std::int64_t>{24}};
  std::uint64_t seed = 7;
  std::optional<std::vector<std::int64_t>> period;  // periodic-spectrum only
  std::optional<std::vector<std::int64_t>> a;       // mild-limit only
  std::optional<std::vector<std::int64_t>> b;
};

// Throws InvalidArgument for an unknown demo name.
DemoOutput run_demo(std::string_view name, const DemoOptions& options);

// Quasi-interpolation errors for a target along a list of uniform gaps.
// Throws GroupMismatch when a gap does not divide every modulus.
struct ApproxRow {
  std::int64_t gap = 0;
  double sup_error = 0.0;
};
std::vector<ApproxRow> approx_errors(const Signal& target, std::span<const std::int64_t> gaps,
                                     BupuShape shape);

}  // namespace mildspec

#endif  // MILDSPEC_SUITES_HPP_
