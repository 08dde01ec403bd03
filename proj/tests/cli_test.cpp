// Copyright 2026 The hyperdisk Authors.
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

// End-to-end runs of the command-line tool.

#include <gtest/gtest.h>
#include <sys/wait.h>
#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "hyperdisk/io.hpp"

namespace hyperdisk {
namespace {

namespace fs = std::filesystem;

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("hyperdisk_cli_test_" + std::to_string(::getpid()) + "_" +
            ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  // Runs the tool with `args`; returns its exit code.
  int run(const std::string& args) const {
    const std::string command = std::string("\"") + HYPERDISK_CLI_PATH + "\" " +
                                args + " > \"" + (dir_ / "stdout").string() +
                                "\" 2> \"" + (dir_ / "stderr").string() + "\"";
    const int status = std::system(command.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  }

  std::string path(const std::string& name) const {
    return (dir_ / name).string();
  }

  static std::string slurp(const std::string& file) {
    std::ifstream in(file);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }

  fs::path dir_;
};

TEST_F(CliTest, GenerateIsDeterministic) {
  ASSERT_EQ(run("generate --n 800 --seed 5 --out " + path("a")), 0);
  ASSERT_EQ(run("generate --n 800 --seed 5 --out " + path("b")), 0);
  EXPECT_EQ(slurp(path("a.coords")), slurp(path("b.coords")));
  EXPECT_EQ(slurp(path("a.edges")), slurp(path("b.edges")));
  ASSERT_EQ(run("generate --n 800 --seed 6 --out " + path("c")), 0);
  EXPECT_NE(slurp(path("a.edges")), slurp(path("c.edges")));

  std::ifstream coords(path("a.coords"));
  const auto file = read_coordinates(coords);
  EXPECT_EQ(file.points.size(), 800u);
  EXPECT_NEAR(file.header.radius, 2 * std::log(800.0) - 1.0, 1e-12);
  std::ifstream edges(path("a.edges"));
  EXPECT_NO_THROW(assemble_graph(file.points, read_edges(edges)));
}

TEST_F(CliTest, SingleNodeWritesHeaderOnlyEdges) {
  ASSERT_EQ(run("generate --n 1 --out " + path("one")), 0);
  const std::string edges = slurp(path("one.edges"));
  EXPECT_EQ(edges.rfind("% hyperdisk edges v1 n=1 m=0\n", 0), 0u);
  for (std::istringstream in(edges); !in.eof();) {
    std::string line;
    std::getline(in, line);
    EXPECT_TRUE(line.empty() || line[0] == '%') << line;
  }
}

TEST_F(CliTest, ExitCodes) {
  EXPECT_EQ(run("generate --n 10 --alpha -1 --out " + path("x")), 1);
  EXPECT_EQ(run("generate --n 10 --temp 0 --kernel fermi --out " + path("x")),
            1);
  EXPECT_EQ(run("nonsense"), 1);
  EXPECT_EQ(run("generate --n 10 --out " + path("missing/dir/x")), 2);
  EXPECT_EQ(run("query --coords " + path("absent.coords") + " --phi 0 --r 1"),
            2);
  EXPECT_EQ(run("generate --n 10 --temp 0 --out " + path("t")), 0);
}

TEST_F(CliTest, DynamicReplaysToFinalSnapshot) {
  ASSERT_EQ(run("dynamic --n 700 --steps 150 --tau-r 0.01 --seed 3 --out " +
                path("d")),
            0);
  std::ifstream c0(path("d.coords"));
  std::ifstream e0(path("d.edges"));
  std::ifstream c1(path("d.final.coords"));
  std::ifstream e1(path("d.final.edges"));
  std::ifstream ds(path("d.deltas"));
  const GraphState initial =
      assemble_graph(read_coordinates(c0).points, read_edges(e0));
  const GraphState final_state =
      assemble_graph(read_coordinates(c1).points, read_edges(e1));
  const auto deltas = read_deltas(ds);
  EXPECT_EQ(deltas.size(), 150u);
  EXPECT_TRUE(replay(initial, deltas) == final_state);

  const std::string summary = slurp(path("d.summary.tsv"));
  EXPECT_EQ(summary.rfind("step\tms\tedges_added\tedges_removed\n", 0), 0u);
  EXPECT_EQ(std::count(summary.begin(), summary.end(), '\n'), 151);
}

TEST_F(CliTest, ZeroStepDynamicHasEmptyDeltaStream) {
  ASSERT_EQ(run("dynamic --n 200 --steps 0 --out " + path("z")), 0);
  EXPECT_EQ(slurp(path("z.deltas")), "% hyperdisk deltas v1 steps=0\n");
  EXPECT_EQ(slurp(path("z.edges")), slurp(path("z.final.edges")));
}

TEST_F(CliTest, QueryMatchesThresholdScan) {
  ASSERT_EQ(run("generate --n 500 --seed 2 --out " + path("g")), 0);
  ASSERT_EQ(run("query --coords " + path("g.coords") +
                " --phi 1.0 --r 3.0 --kernel threshold --out " + path("q")),
            0);
  std::ifstream coords(path("g.coords"));
  const auto file = read_coordinates(coords);
  std::size_t expected = 0;
  for (const auto& p : file.points) {
    expected += hyperbolic_distance({1.0, 3.0}, p) <= file.header.radius;
  }
  std::istringstream out(slurp(path("q")));
  std::string header;
  std::getline(out, header);
  EXPECT_NE(header.find(" result=" + std::to_string(expected)),
            std::string::npos)
      << header;
  std::size_t ids = 0;
  for (std::string line; std::getline(out, line);) {
    ++ids;
  }
  EXPECT_EQ(ids, expected);
}

TEST_F(CliTest, BenchWritesTsv) {
  ASSERT_EQ(
      run("bench --n 1000,2000 --balance 0.5,0.1 --iterations 100 --out " +
          path("bench.tsv")),
      0);
  const std::string tsv = slurp(path("bench.tsv"));
  EXPECT_EQ(std::count(tsv.begin(), tsv.end(), '\n'), 5);
  EXPECT_EQ(tsv.rfind("n\tbalance\tvariant\t", 0), 0u);
}

TEST_F(CliTest, ValidateSingleCheck) {
  ASSERT_EQ(run("validate --check distance_bounds --out " + path("v.tsv")), 0);
  const std::string tsv = slurp(path("v.tsv"));
  EXPECT_NE(tsv.find("distance_bounds\t10\tPASS"), std::string::npos) << tsv;
  EXPECT_EQ(run("validate --check no_such_check"), 1);
}

}  // namespace
}  // namespace hyperdisk
