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

#include <algorithm>
#include <chrono>
#include <ostream>
#include <stdexcept>
#include <utility>
#include <variant>

#include "hyperdisk/io.hpp"
#include "hyperdisk/pnq.hpp"

namespace hyperdisk {

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point since) {
  return std::chrono::duration<double, std::milli>(Clock::now() - since)
      .count();
}

double median(std::vector<double> values) {
  if (values.empty()) {
    return 0.0;
  }
  const std::size_t mid = values.size() / 2;
  std::nth_element(values.begin(), values.begin() + mid, values.end());
  double result = values[mid];
  if (values.size() % 2 == 0) {
    result = 0.5 *
             (result + *std::max_element(values.begin(), values.begin() + mid));
  }
  return result;
}

}  // namespace

DynamicRun run_dynamic(const DynamicConfig& config,
                       const std::function<void(const GraphDelta&)>& on_delta) {
  if (config.params.geometry != Geometry::hyperbolic) {
    throw std::invalid_argument("dynamic runs need hyperbolic geometry");
  }
  if (config.steps > 0 && config.moves_per_step == 0 && config.ids.empty()) {
    throw std::invalid_argument("moves_per_step must be positive");
  }
  for (const NodeId id : config.ids) {
    if (id >= config.params.n) {
      throw std::invalid_argument("node id " + std::to_string(id) +
                                  " out of range");
    }
  }
  StaticGraph generated = generate_static(config.params);
  const RngStream root(config.params.seed);
  RngStream movement_rng = root.substream(2);
  RngStream step_rng = root.substream(3);
  MovementState movement =
      init_movement(config.params.n, config.tau_phi, config.tau_r,
                    config.params.density(), movement_rng);
  const EdgeKernel kernel = config.params.kernel();

  DynamicRun run;
  run.initial = generated.graph;
  run.step_ms.reserve(config.steps);
  std::size_t cursor = 0;
  std::vector<NodeId> batch;
  for (std::size_t step = 0; step < config.steps; ++step) {
    batch.clear();
    for (std::size_t i = 0; i < config.moves_per_step; ++i) {
      if (config.ids.empty()) {
        batch.push_back(static_cast<NodeId>(step_rng.below(config.params.n)));
      } else {
        batch.push_back(config.ids[cursor++ % config.ids.size()]);
      }
    }
    const auto start = Clock::now();
    auto deltas = dynamic_step(generated.graph, generated.tree, movement, batch,
                               kernel, step_rng, step);
    run.step_ms.push_back(elapsed_ms(start));
    for (auto& delta : deltas) {
      if (on_delta) {
        on_delta(delta);
      }
      run.deltas.push_back(std::move(delta));
    }
  }
  run.final_state = std::move(generated.graph);
  return run;
}

const char* variant_name(QueryVariant variant) {
  return variant == QueryVariant::aggregated ? "aggregated" : "baseline";
}

std::vector<BenchRow> run_bench(const BenchConfig& config) {
  if (config.sizes.empty() || config.balances.empty()) {
    throw std::invalid_argument("bench needs at least one n and balance");
  }
  if (config.iterations == 0) {
    throw std::invalid_argument("bench needs at least one iteration");
  }
  std::vector<BenchRow> rows;
  const RngStream root(config.seed);
  for (const std::size_t n : config.sizes) {
    RhgParams params;
    params.n = n;
    params.alpha = config.alpha;
    params.temperature = config.temperature;
    params.radius_const = config.radius_const;
    params.capacity = config.capacity;
    params.validate();
    // Points and query positions depend on n only, so a balance sweep
    // compares trees over identical inputs.
    const RngStream size_root = root.substream(n);
    RngStream point_rng = size_root.substream(0);
    const auto coords = sample_points(n, params.density(), point_rng);
    std::vector<PointRecord> records(n);
    for (std::size_t i = 0; i < n; ++i) {
      records[i] = PointRecord{coords[i], static_cast<NodeId>(i)};
    }
    for (const double balance : config.balances) {
      params.balance = balance;
      params.validate();
      const Quadtree tree = Quadtree::build(records, params.tree_config());
      const EdgeKernel kernel = params.kernel();
      RngStream position_rng = size_root.substream(1);
      RngStream query_rng = size_root.substream(2);
      const RadialDensity density = params.density();
      const std::size_t warmup = config.iterations / 100;

      std::vector<double> times;
      times.reserve(config.iterations);
      QueryStats totals;
      for (std::size_t it = 0; it < config.iterations; ++it) {
        const PolarPoint q = sample_point(position_rng, density);
        const auto start = Clock::now();
        const QueryResult result = std::visit(
            [&](const auto& k) {
              return config.variant == QueryVariant::aggregated
                         ? query_aggregated(tree, q, k, query_rng)
                         : query_baseline(tree, q, k, query_rng);
            },
            kernel);
        const double ms = elapsed_ms(start);
        if (it >= warmup) {
          times.push_back(ms);
          totals += result.stats;
        }
      }
      BenchRow row;
      row.n = n;
      row.balance = balance;
      row.variant = config.variant;
      row.iterations = times.size();
      const double count = static_cast<double>(times.size());
      double sum = 0.0;
      for (const double t : times) {
        sum += t;
      }
      row.mean_ms = sum / count;
      row.median_ms = median(times);
      row.mean_candidates =
          static_cast<double>(totals.candidates_examined) / count;
      row.mean_cells = static_cast<double>(totals.cells_examined) / count;
      row.mean_result = static_cast<double>(totals.result_size) / count;
      rows.push_back(row);
    }
  }
  return rows;
}

void write_bench_tsv(std::ostream& out, const std::vector<BenchRow>& rows) {
  out << "n\tbalance\tvariant\titerations\tmean_ms\tmedian_ms\t"
         "mean_candidates\tmean_cells\tmean_result\n";
  for (const BenchRow& row : rows) {
    out << row.n << '\t' << format_double(row.balance) << '\t'
        << variant_name(row.variant) << '\t' << row.iterations << '\t'
        << format_double(row.mean_ms) << '\t' << format_double(row.median_ms)
        << '\t' << format_double(row.mean_candidates) << '\t'
        << format_double(row.mean_cells) << '\t'
        << format_double(row.mean_result) << '\n';
  }
}

}  // namespace hyperdisk
