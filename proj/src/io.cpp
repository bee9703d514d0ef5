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

#include "mildspec/io.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "mildspec/errors.hpp"

namespace mildspec::io {

namespace {

std::int64_t parse_int(std::string_view s) {
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
  std::int64_t v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw InvalidArgument("not an integer: '" + std::string(s) + "'");
  }
  return v;
}

std::vector<std::int64_t> int_array(const Json& j, const char* what) {
  if (j.is_number_integer()) return {j.get<std::int64_t>()};
  if (!j.is_array()) throw SchemaError(std::string(what) + " must be an integer array");
  std::vector<std::int64_t> out;
  for (const auto& v : j) {
    if (!v.is_number_integer()) throw SchemaError(std::string(what) + " must hold integers");
    out.push_back(v.get<std::int64_t>());
  }
  return out;
}

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw SchemaError(std::string("missing field '") + key + "'");
  }
  return j.at(key);
}

}  // namespace

std::vector<std::int64_t> parse_int_list(std::string_view text) {
  std::vector<std::int64_t> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = text.find(',', start);
    out.push_back(parse_int(text.substr(start, comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

GroupSpec parse_group(std::string_view text) { return GroupSpec(parse_int_list(text)); }

Json to_json(const GroupSpec& g) {
  return Json(std::vector<std::int64_t>(g.moduli().begin(), g.moduli().end()));
}

GroupSpec group_from_json(const Json& j) {
  try {
    return GroupSpec(int_array(j, "group"));
  } catch (const InvalidArgument& e) {
    throw SchemaError(e.what());
  }
}

Json to_json(const Subgroup& h) {
  Json gens = Json::array();
  for (const auto& x : h.generators()) gens.push_back(x.coords);
  return Json{{"group", to_json(h.parent())}, {"generators", gens}};
}

Subgroup subgroup_from_json(const Json& j) {
  const GroupSpec g = group_from_json(field(j, "group"));
  const Json& gens = field(j, "generators");
  if (!gens.is_array()) throw SchemaError("generators must be an array");
  std::vector<GroupElement> elems;
  for (const auto& x : gens) {
    auto coords = int_array(x, "generator");
    if (coords.size() != g.rank()) throw GroupMismatch("generator rank does not match group");
    elems.push_back(g.element(std::move(coords)));
  }
  return Subgroup(g, std::move(elems));
}

Json values_to_json(std::span<const Complex> values) {
  Json arr = Json::array();
  for (const auto& v : values) arr.push_back({v.real(), v.imag()});
  return arr;
}

std::vector<Complex> values_from_json(const Json& j) {
  if (!j.is_array()) throw SchemaError("values must be an array");
  std::vector<Complex> out;
  out.reserve(j.size());
  for (const auto& v : j) {
    if (v.is_number()) {
      out.emplace_back(v.get<double>(), 0.0);
    } else if (v.is_array() && v.size() == 2 && v[0].is_number() && v[1].is_number()) {
      out.emplace_back(v[0].get<double>(), v[1].get<double>());
    } else {
      throw SchemaError("each value must be a number or a [re, im] pair");
    }
  }
  return out;
}

Json to_json(const Signal& f) {
  return Json{{"group", to_json(f.group())}, {"values", values_to_json(f.values())}};
}

Signal signal_from_json(const Json& j) {
  const GroupSpec g = group_from_json(field(j, "group"));
  auto values = values_from_json(field(j, "values"));
  if (values.size() != g.order()) {
    throw SchemaError("signal has " + std::to_string(values.size()) + " values for group " +
                      to_string(g));
  }
  try {
    return Signal(g, std::move(values));
  } catch (const InvalidArgument& e) {
    throw SchemaError(e.what());
  }
}

Json to_json(const CoefficientArray& c) {
  return Json{{"group", to_json(c.lattice.group())},
              {"lattice", {{"a", c.lattice.time_step()}, {"b", c.lattice.freq_step()}}},
              {"coeffs", values_to_json(c.coeffs)}};
}

CoefficientArray coefficients_from_json(const Json& j) {
  const GroupSpec g = group_from_json(field(j, "group"));
  const Json& lat = field(j, "lattice");
  auto a = int_array(field(lat, "a"), "a");
  auto b = int_array(field(lat, "b"), "b");
  if (a.size() == 1 && g.rank() > 1) a.assign(g.rank(), a[0]);
  if (b.size() == 1 && g.rank() > 1) b.assign(g.rank(), b[0]);
  try {
    TFLattice lattice(g, std::move(a), std::move(b));
    return CoefficientArray(std::move(lattice), values_from_json(field(j, "coeffs")));
  } catch (const InvalidArgument& e) {
    throw SchemaError(e.what());
  }
}

std::string format_double(double v) {
  char buf[32];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  if (ec != std::errc()) return "nan";
  return std::string(buf, ptr);
}

std::string signal_to_csv(const Signal& f) {
  const GroupSpec& g = f.group();
  std::ostringstream out;
  for (std::size_t j = 0; j < g.rank(); ++j) out << 'i' << j << ',';
  out << "re,im\n";
  for (std::size_t x = 0; x < f.size(); ++x) {
    for (auto c : g.element_at(x).coords) out << c << ',';
    out << format_double(f[x].real()) << ',' << format_double(f[x].imag()) << '\n';
  }
  return out.str();
}

Signal signal_from_csv(std::string_view text, const GroupSpec& g) {
  std::vector<Complex> values(g.order());
  std::vector<bool> seen(g.order(), false);
  std::istringstream in{std::string(text)};
  std::string line;
  bool header = true;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (header) {
      header = false;
      continue;
    }
    std::vector<std::string> cells;
    std::stringstream ls(line);
    std::string cell;
    while (std::getline(ls, cell, ',')) cells.push_back(cell);
    if (cells.size() != g.rank() + 2) throw SchemaError("csv row has wrong column count");
    std::vector<std::int64_t> coords(g.rank());
    try {
      for (std::size_t j = 0; j < g.rank(); ++j) coords[j] = parse_int(cells[j]);
      const GroupElement x{coords};
      if (!g.is_valid(x)) throw SchemaError("csv index out of range");
      const std::size_t i = g.index_of(x);
      values[i] = {std::stod(cells[g.rank()]), std::stod(cells[g.rank() + 1])};
      seen[i] = true;
    } catch (const std::invalid_argument&) {
      throw SchemaError("csv cell is not a number");
    } catch (const InvalidArgument& e) {
      throw SchemaError(e.what());
    }
  }
  for (bool s : seen) {
    if (!s) throw SchemaError("csv does not cover every group element");
  }
  return Signal(g, std::move(values));
}

std::string stft_to_csv(const STFTGrid& grid) {
  const GroupSpec& g = grid.group;
  std::ostringstream out;
  for (std::size_t j = 0; j < g.rank(); ++j) out << 't' << j << ',';
  for (std::size_t j = 0; j < g.rank(); ++j) out << 's' << j << ',';
  out << "re,im,abs\n";
  for (std::size_t t = 0; t < g.order(); ++t) {
    const auto te = g.element_at(t);
    for (std::size_t s = 0; s < g.order(); ++s) {
      for (auto c : te.coords) out << c << ',';
      for (auto c : g.element_at(s).coords) out << c << ',';
      const Complex v = grid.at(t, s);
      out << format_double(v.real()) << ',' << format_double(v.imag()) << ','
          << format_double(std::abs(v)) << '\n';
    }
  }
  return out.str();
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw SchemaError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Json read_json_file(const std::string& path) {
  const std::string text = read_text_file(path);
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw SchemaError(path + ": " + e.what());
  }
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path);
  out << text;
}

}  // namespace mildspec::io
