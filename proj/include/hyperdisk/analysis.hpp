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

#ifndef HYPERDISK_ANALYSIS_HPP_
#define HYPERDISK_ANALYSIS_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "hyperdisk/graph.hpp"
#include "hyperdisk/quadtree.hpp"

namespace hyperdisk {

struct PowerLawFit {
  double exponent = 0.0;
  std::uint64_t x_min = 0;
  std::size_t tail_size = 0;
  double ks_distance = 0.0;
};

/// Discrete power-law tail fit: the continuous MLE with the usual x_min - 1/2
/// correction, gamma = 1 + m / sum ln(x_i / (x_min - 1/2)), with x_min chosen
/// to minimize the KS distance between the empirical and fitted tails.
/// Empty when no candidate x_min leaves `min_tail` samples spread over at
/// least three distinct values.
std::optional<PowerLawFit> fit_power_law(std::span<const std::uint64_t> values,
                                         std::size_t min_tail = 50);

struct DegreeSummary {
  double mean = 0.0;
  std::vector<std::uint64_t> histogram;  // histogram[k] = #nodes of degree k
  std::optional<PowerLawFit> tail;
  std::size_t sample_size = 0;
};

DegreeSummary degree_stats(const GraphState& graph);

struct RadialVisitBand {
  double max_r_lo = 0.0;
  double max_r_hi = 0.0;
  std::size_t cells = 0;
  std::uint64_t visits = 0;

  double mean_visits() const {
    return cells == 0 ? 0.0 : static_cast<double>(visits) / cells;
  }
};

struct TreeSummary {
  int height = 0;
  std::size_t node_count = 0;
  std::size_t leaf_count = 0;
  std::vector<std::size_t> nodes_per_depth;
  std::vector<std::size_t> points_per_depth;  // points held by leaves
  std::vector<RadialVisitBand> visit_bands;   // empty without counters
};

/// Structural counts from a full traversal. When `visits` (indexed like
/// Quadtree::nodes()) is given, cells are grouped into `bands` equal-width
/// bands of their max_r.
TreeSummary tree_stats(const Quadtree& tree,
                       std::span<const std::uint64_t> visits = {},
                       std::size_t bands = 16);

struct ScalingSample {
  double n = 0.0;
  double work = 0.0;
  double result_size = 0.0;
};

struct ScalingReport {
  // work ~ sqrt_coef * sqrt(n) + result_coef * |N| + intercept
  double sqrt_coef = 0.0;
  double result_coef = 0.0;
  double intercept = 0.0;
  double sqrt_rms_residual = 0.0;
  // work ~ linear_slope * n + linear_intercept
  double linear_slope = 0.0;
  double linear_intercept = 0.0;
  double linear_rms_residual = 0.0;
  // Share of the linear model's prediction at the largest n carried by the
  // slope term.
  double linear_share = 0.0;
  // work[i + 1] / work[i] for the input order.
  std::vector<double> successive_ratios;
};

/// Least-squares fits of measured query work against n. Throws
/// std::invalid_argument for fewer than three samples.
ScalingReport scaling_report(std::span<const ScalingSample> samples);

}  // namespace hyperdisk

#endif  // HYPERDISK_ANALYSIS_HPP_
