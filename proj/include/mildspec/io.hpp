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

#ifndef MILDSPEC_IO_HPP_
#define MILDSPEC_IO_HPP_

#include <string>
#include <string_view>

#include "json.hpp"
#include "mildspec/gabor.hpp"
#include "mildspec/group.hpp"
#include "mildspec/signal.hpp"

namespace mildspec::io {

using Json = nlohmann::json;

// "24" or "4,6". Throws InvalidArgument.
GroupSpec parse_group(std::string_view text);
// Comma-separated positive integers. Throws InvalidArgument.
std::vector<std::int64_t> parse_int_list(std::string_view text);

// Every *_from_json throws SchemaError on layout problems.

// [N1, ..., Nd]
Json to_json(const GroupSpec& g);
GroupSpec group_from_json(const Json& j);

// {"group": [...], "generators": [[...], ...]}
Json to_json(const Subgroup& h);
Subgroup subgroup_from_json(const Json& j);

// {"group": [...], "values": [[re, im], ...]}
Json to_json(const Signal& f);
Signal signal_from_json(const Json& j);
std::vector<Complex> values_from_json(const Json& j);
Json values_to_json(std::span<const Complex> values);

// {"group": [...], "lattice": {"a": [...], "b": [...]}, "coeffs": [[re, im], ...]}
Json to_json(const CoefficientArray& c);
CoefficientArray coefficients_from_json(const Json& j);

// One row per element: i0,...,i{d-1},re,im.
std::string signal_to_csv(const Signal& f);
Signal signal_from_csv(std::string_view text, const GroupSpec& g);

// t0..,s0..,re,im,abs per (t, s).
std::string stft_to_csv(const STFTGrid& grid);

// Round-trip decimal formatting used by every CSV writer.
std::string format_double(double v);

// Throws SchemaError when the file cannot be read or parsed.
Json read_json_file(const std::string& path);
std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace mildspec::io

#endif  // MILDSPEC_IO_HPP_
