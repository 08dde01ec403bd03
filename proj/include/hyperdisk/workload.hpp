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

#ifndef HYPERDISK_WORKLOAD_HPP_
#define HYPERDISK_WORKLOAD_HPP_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "hyperdisk/dynamics.hpp"
#include "hyperdisk/graph.hpp"
#include "hyperdisk/rhg.hpp"

namespace hyperdisk {

struct DynamicConfig {
  RhgParams params;
  std::size_t steps = 0;
  std::size_t moves_per_step = 1;
  StepRange tau_phi{0.0, 0.01};
  // Magnitudes in sinh(alpha r) units.
  StepRange tau_r{0.0, 0.0};
  // Nodes to move, cycled in order; empty picks uniformly at random.
  std::vector<NodeId> ids;
};

struct DynamicRun {
  GraphState initial;
  GraphState final_state;
  std::vector<GraphDelta> deltas;
  std::vector<double> step_ms;  // wall time per step
};

/// Generates the initial graph, then performs `steps` movement steps. Each
/// delta is handed to `on_delta` (if set) as soon as it exists.
DynamicRun run_dynamic(
    const DynamicConfig& config,
    const std::function<void(const GraphDelta&)>& on_delta = {});

enum class QueryVariant { aggregated, baseline };

const char* variant_name(QueryVariant variant);

struct BenchConfig {
  std::vector<std::size_t> sizes;
  std::vector<double> balances{0.5};
  std::size_t iterations = 1000;
  double alpha = 0.75;
  double temperature = 0.1;
  double radius_const = -1.0;
  std::size_t capacity = 128;
  std::uint64_t seed = 1;
  QueryVariant variant = QueryVariant::aggregated;
};

struct BenchRow {
  std::size_t n = 0;
  double balance = 0.0;
  QueryVariant variant = QueryVariant::aggregated;
  std::size_t iterations = 0;  // measured, warm-up excluded
  double mean_ms = 0.0;
  double median_ms = 0.0;
  double mean_candidates = 0.0;
  double mean_cells = 0.0;
  double mean_result = 0.0;

  double mean_extra_candidates() const { return mean_candidates - mean_result; }
};

/// One row per (n, balance). Each iteration queries the tree from a fresh
/// point drawn from the radial density; the first 1% of iterations warm up
/// caches and are not measured.
std::vector<BenchRow> run_bench(const BenchConfig& config);

void write_bench_tsv(std::ostream& out, const std::vector<BenchRow>& rows);

}  // namespace hyperdisk

#endif  // HYPERDISK_WORKLOAD_HPP_
