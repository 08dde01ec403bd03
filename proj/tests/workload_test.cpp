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

#include "hyperdisk/workload.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <sstream>
#include <string>

#include "hyperdisk/io.hpp"

namespace hyperdisk {
namespace {

TEST(RunBench, RowsAndSchema) {
  BenchConfig config;
  config.sizes = {2000, 4000};
  config.balances = {0.5, 0.1};
  config.iterations = 200;
  config.seed = 4;
  const auto rows = run_bench(config);
  ASSERT_EQ(rows.size(), 4u);
  for (const auto& row : rows) {
    EXPECT_EQ(row.iterations, 198u);
    EXPECT_GT(row.mean_ms, 0.0);
    EXPECT_GE(row.mean_candidates, row.mean_result);
    EXPECT_GT(row.mean_cells, 0.0);
  }
  EXPECT_EQ(rows[0].n, 2000u);
  EXPECT_EQ(rows[1].balance, 0.1);
  // Same points and query positions for every balance: results agree in
  // distribution, and here exactly in their mean degree scale.
  EXPECT_NEAR(rows[0].mean_result, rows[1].mean_result,
              0.25 * rows[0].mean_result + 1.0);

  std::ostringstream out;
  write_bench_tsv(out, rows);
  std::istringstream in(out.str());
  std::string header;
  std::getline(in, header);
  EXPECT_EQ(header,
            "n\tbalance\tvariant\titerations\tmean_ms\tmedian_ms\t"
            "mean_candidates\tmean_cells\tmean_result");
  std::size_t lines = 0;
  for (std::string line; std::getline(in, line);) {
    ++lines;
    EXPECT_EQ(std::count(line.begin(), line.end(), '\t'), 8);
  }
  EXPECT_EQ(lines, 4u);
}

TEST(RunDynamic, OneDeltaPerMoveAndExactReplay) {
  DynamicConfig config;
  config.params.n = 500;
  config.params.alpha = 0.75;
  config.params.temperature = 0.1;
  config.params.radius_const = -1.0;
  config.params.seed = 21;
  config.steps = 40;
  config.moves_per_step = 3;
  config.tau_r = {0.0, 5.0};
  std::size_t streamed = 0;
  const auto run = run_dynamic(config, [&](const GraphDelta&) { ++streamed; });
  EXPECT_EQ(run.deltas.size(), 120u);
  EXPECT_EQ(streamed, 120u);
  EXPECT_EQ(run.step_ms.size(), 40u);
  EXPECT_TRUE(replay(run.initial, run.deltas) == run.final_state);
  EXPECT_EQ(run.deltas.front().step, 0u);
  EXPECT_EQ(run.deltas.back().step, 39u);
}

TEST(RunDynamic, CyclesGivenIds) {
  DynamicConfig config;
  config.params.n = 50;
  config.params.alpha = 1.0;
  config.params.temperature = 0.2;
  config.params.seed = 3;
  config.steps = 5;
  config.ids = {7, 3};
  const auto run = run_dynamic(config);
  ASSERT_EQ(run.deltas.size(), 5u);
  const NodeId expected[] = {7, 3, 7, 3, 7};
  for (std::size_t i = 0; i < 5; ++i) {
    EXPECT_EQ(run.deltas[i].node, expected[i]);
  }
}

TEST(RunDynamic, ZeroStepsLeavesGraphUnchanged) {
  DynamicConfig config;
  config.params.n = 100;
  config.params.alpha = 0.75;
  config.params.temperature = 0.1;
  config.params.seed = 8;
  const auto run = run_dynamic(config);
  EXPECT_TRUE(run.deltas.empty());
  EXPECT_TRUE(run.initial == run.final_state);
}

}  // namespace
}  // namespace hyperdisk
