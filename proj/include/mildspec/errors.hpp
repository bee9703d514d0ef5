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

#ifndef MILDSPEC_ERRORS_HPP_
#define MILDSPEC_ERRORS_HPP_

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace mildspec {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed arguments: bad moduli, out-of-range or wrong-rank elements,
// size mismatches.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// Two objects that must live on the same group (or a subgroup that must
// sit inside a given parent) do not.
class GroupMismatch : public Error {
 public:
  using Error::Error;
};

class BoundExceeded : public Error {
 public:
  using Error::Error;
};

// Input document does not match the expected JSON/CSV layout.
class SchemaError : public Error {
 public:
  using Error::Error;
};

// A signal carries mass off the lattice it was claimed to be supported on.
class SupportViolation : public Error {
 public:
  SupportViolation(std::vector<std::int64_t> where, double magnitude);

  const std::vector<std::int64_t>& where() const { return where_; }
  double magnitude() const { return magnitude_; }

 private:
  std::vector<std::int64_t> where_;
  double magnitude_;
};

// The frame operator of a Gabor system is (numerically) singular.
class NotAFrame : public Error {
 public:
  NotAFrame(double lower_bound, double upper_bound);

  double lower_bound() const { return lower_bound_; }
  double upper_bound() const { return upper_bound_; }

 private:
  double lower_bound_;
  double upper_bound_;
};

class NotPeriodic : public Error {
 public:
  NotPeriodic(std::vector<std::int64_t> shift, double deviation);

  const std::vector<std::int64_t>& shift() const { return shift_; }
  double deviation() const { return deviation_; }

 private:
  std::vector<std::int64_t> shift_;
  double deviation_;
};

}  // namespace mildspec

#endif  // MILDSPEC_ERRORS_HPP_
