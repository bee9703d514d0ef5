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

// Runs the command-line binary and checks exit codes and file round trips.

#include <sys/wait.h>

#include <algorithm>
#include <complex>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <string>

#include "gtest/gtest.h"
#include "mildspec/io.hpp"

namespace mildspec {
namespace {

namespace fs = std::filesystem;
using io::Json;

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::path(::testing::TempDir()) /
           ("mildspec_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  int run(const std::string& args) const {
    const std::string cmd = std::string(MILDSPEC_CLI) + " " + args + " > " + path("stdout.txt") + " 2> " +
                            path("stderr.txt");
    const int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  }

  std::string read(const std::string& name) const {
    std::ifstream in(path(name));
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }

  void write_signal(const std::string& name, const GroupSpec& g, std::uint64_t seed) const {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    std::vector<Complex> v(g.order());
    for (auto& x : v) x = {u(rng), u(rng)};
    io::write_text_file(path(name), io::to_json(Signal(g, v)).dump());
  }

  Signal load(const std::string& name) const { return io::signal_from_json(io::read_json_file(path(name))); }

  fs::path dir_;
};

TEST_F(Cli, DftIdftRoundTrip) {
  write_signal("f.json", GroupSpec({4, 6}), 1);
  ASSERT_EQ(run("transform dft " + path("f.json") + " --out " + path("F.json")), 0);
  ASSERT_EQ(run("transform idft " + path("F.json") + " --out " + path("g.json")), 0);
  EXPECT_LE(max_abs_diff(load("f.json"), load("g.json")), 1e-10);
}

TEST_F(Cli, UnitaryDftPreservesNorm) {
  write_signal("f.json", GroupSpec({24}), 2);
  ASSERT_EQ(run("transform dft " + path("f.json") + " --normalization unitary --out " + path("F.json")), 0);
  EXPECT_NEAR(load("f.json").norm2(), load("F.json").norm2(), 1e-12);
}

TEST_F(Cli, GaborAnalyzeSynthRoundTrip) {
  write_signal("f.json", GroupSpec({24}), 3);
  ASSERT_EQ(run("gabor --group 24 --a 2 --b 2 analyze " + path("f.json") + " --out " + path("c.json")), 0);
  ASSERT_EQ(run("gabor --group 24 synth " + path("c.json") + " --out " + path("g.json")), 0);
  EXPECT_LE(max_abs_diff(load("f.json"), load("g.json")), 1e-9);
}

TEST_F(Cli, GaborRejectsWrongGroup) {
  write_signal("f.json", GroupSpec({24}), 4);
  EXPECT_EQ(run("gabor --group 36 --a 2 --b 2 analyze " + path("f.json")), 4);
}

TEST_F(Cli, GaborCriticalGaussianIsNotAFrame) {
  write_signal("f.json", GroupSpec({16}), 5);
  EXPECT_EQ(run("gabor --group 16 --a 8 --b 8 analyze " + path("f.json")), 1);
}

TEST_F(Cli, RestrictNonDividingLatticeIsGroupMismatch) {
  write_signal("f.json", GroupSpec({24}), 6);
  EXPECT_EQ(run("transform restrict " + path("f.json") + " --lattice 5"), 4);
}

TEST_F(Cli, RestrictThenExtendInterpolates) {
  write_signal("f.json", GroupSpec({24}), 7);
  ASSERT_EQ(run("transform restrict " + path("f.json") + " --lattice 4 --out " + path("r.json")), 0);
  ASSERT_EQ(run("extend " + path("r.json") + " --shape triangle --out " + path("e.json")), 0);
  const Signal f = load("f.json");
  const Signal e = load("e.json");
  for (std::size_t x = 0; x < f.size(); x += 4) EXPECT_LE(std::abs(f[x] - e[x]), 1e-12) << x;
}

TEST_F(Cli, StftWritesFullGrid) {
  write_signal("f.json", GroupSpec({12}), 8);
  ASSERT_EQ(run("stft " + path("f.json") + " --window gauss --out " + path("grid.csv")), 0);
  const std::string csv = read("grid.csv");
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 1 + 12 * 12);
}

TEST_F(Cli, VerifyPassesAndIsReproducible) {
  ASSERT_EQ(run("verify all --group 12 --seed 3 --report " + path("a.json")), 0);
  ASSERT_EQ(run("verify all --group 12 --seed 3 --report " + path("b.json")), 0);
  EXPECT_EQ(read("a.json"), read("b.json"));
  EXPECT_TRUE(Json::parse(read("a.json")).at("pass").get<bool>());
}

TEST_F(Cli, VerifyTightToleranceFails) { EXPECT_EQ(run("verify fourier --group 24 --tolerance 1e-30"), 1); }

TEST_F(Cli, UsageErrors) {
  EXPECT_EQ(run("verify all --group 0"), 2);
  EXPECT_EQ(run("verify nope"), 2);
  EXPECT_EQ(run("demo nope"), 2);
  EXPECT_EQ(run(""), 2);
  EXPECT_EQ(run("verify gabor --group 24 --a 5"), 2);
  EXPECT_EQ(run("--help"), 0);
}

TEST_F(Cli, SchemaErrors) {
  io::write_text_file(path("bad.json"), R"({"group":[24],"values":"x"})");
  EXPECT_EQ(run("transform dft " + path("bad.json")), 3);
  io::write_text_file(path("junk.json"), "not json");
  EXPECT_EQ(run("transform dft " + path("junk.json")), 3);
  io::write_text_file(path("short.json"), R"({"group":[24],"values":[[1,0]]})");
  EXPECT_EQ(run("transform dft " + path("short.json")), 3);
}

TEST_F(Cli, MildConvergeReportsRows) {
  const GroupSpec g({24});
  Json members = Json::array();
  for (std::int64_t d : {24, 12, 6, 3}) {
    std::vector<Complex> v(24);
    for (std::size_t x = 0; x < 24; x += static_cast<std::size_t>(d)) v[x] = 24.0 / static_cast<double>(d);
    members.push_back(io::to_json(Signal(g, v)));
  }
  io::write_text_file(path("seq.json"), Json{{"members", members}}.dump());
  io::write_text_file(path("lim.json"), io::to_json(Signal::constant(g, 1.0)).dump());
  ASSERT_EQ(run("mild-converge " + path("seq.json") + " --limit " + path("lim.json") + " --lattice a=2,b=2 --out " +
                path("r.json")),
            0);
  const Json r = Json::parse(read("r.json"));
  ASSERT_EQ(r.at("rows").size(), 4u);
  for (const auto& row : r.at("rows")) {
    EXPECT_TRUE(row.contains("d_pair"));
    EXPECT_TRUE(row.contains("d_stft"));
    EXPECT_TRUE(row.contains("d_coeff"));
  }
  io::write_text_file(path("other.json"), io::to_json(Signal::constant(GroupSpec({12}), 1.0)).dump());
  EXPECT_EQ(run("mild-converge " + path("seq.json") + " --limit " + path("other.json")), 4);
}

TEST_F(Cli, ApproxWritesDecreasingErrors) {
  ASSERT_EQ(run("approx --group 256 --lattice 16,8,4 --shape triangle --target gauss --out " + path("e.csv")), 0);
  std::istringstream in(read("e.csv"));
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, "gap,sup_error");
  double prev = 1e300;
  int rows = 0;
  while (std::getline(in, line)) {
    const double err = std::stod(line.substr(line.find(',') + 1));
    EXPECT_LT(err, prev);
    prev = err;
    ++rows;
  }
  EXPECT_EQ(rows, 3);
  EXPECT_EQ(run("approx --group 256 --lattice 5"), 4);
}

TEST_F(Cli, DemoWritesCsvAndReport) {
  ASSERT_EQ(run("demo comb-duality --group 36 --out " + path("c.csv") + " --report " + path("c.json")), 0);
  EXPECT_EQ(read("c.csv").rfind("subgroup,order", 0), 0u);
  EXPECT_TRUE(Json::parse(read("c.json")).at("pass").get<bool>());
  ASSERT_EQ(run("demo periodic-spectrum --group 12 --period 3 --out " + path("p.csv")), 0);
}

}  // namespace
}  // namespace mildspec
