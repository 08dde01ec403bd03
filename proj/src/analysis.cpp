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

#include "hyperdisk/analysis.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <iterator>
#include <stdexcept>

namespace hyperdisk {

std::optional<PowerLawFit> fit_power_law(std::span<const std::uint64_t> values,
                                         std::size_t min_tail) {
  std::vector<std::uint64_t> sorted;
  sorted.reserve(values.size());
  for (const auto v : values) {
    if (v >= 1) {
      sorted.push_back(v);
    }
  }
  std::sort(sorted.begin(), sorted.end());
  std::vector<std::uint64_t> distinct;
  std::unique_copy(sorted.begin(), sorted.end(), std::back_inserter(distinct));

  std::optional<PowerLawFit> best;
  for (std::size_t d = 0; d + 2 < distinct.size(); ++d) {
    const std::uint64_t x_min = distinct[d];
    const auto begin = std::lower_bound(sorted.begin(), sorted.end(), x_min);
    const auto tail = static_cast<std::size_t>(sorted.end() - begin);
    if (tail < min_tail) {
      break;
    }
    const double shifted_min = static_cast<double>(x_min) - 0.5;
    double log_sum = 0.0;
    for (auto it = begin; it != sorted.end(); ++it) {
      log_sum += std::log(static_cast<double>(*it) / shifted_min);
    }
    if (!(log_sum > 0.0)) {
      continue;
    }
    const double exponent = 1.0 + static_cast<double>(tail) / log_sum;
    // Compare P(X >= x) empirically and under the fit at each distinct x.
    double ks = 0.0;
    auto it = begin;
    for (std::size_t e = d; e < distinct.size(); ++e) {
      const std::uint64_t x = distinct[e];
      it = std::lower_bound(it, sorted.end(), x);
      const double empirical =
          static_cast<double>(sorted.end() - it) / static_cast<double>(tail);
      const double model = std::pow(
          (static_cast<double>(x) - 0.5) / shifted_min, 1.0 - exponent);
      ks = std::max(ks, std::abs(empirical - model));
    }
    if (!best || ks < best->ks_distance) {
      best = PowerLawFit{exponent, x_min, tail, ks};
    }
  }
  return best;
}

DegreeSummary degree_stats(const GraphState& graph) {
  if (graph.node_count() == 0) {
    throw std::invalid_argument("degree_stats needs a nonempty graph");
  }
  DegreeSummary out;
  out.sample_size = graph.node_count();
  std::vector<std::uint64_t> degrees(graph.node_count());
  std::uint64_t total = 0;
  for (NodeId u = 0; u < graph.node_count(); ++u) {
    degrees[u] = graph.degree(u);
    total += degrees[u];
    if (out.histogram.size() <= degrees[u]) {
      out.histogram.resize(degrees[u] + 1, 0);
    }
    ++out.histogram[degrees[u]];
  }
  out.mean = static_cast<double>(total) / static_cast<double>(out.sample_size);
  out.tail = fit_power_law(degrees);
  return out;
}

TreeSummary tree_stats(const Quadtree& tree,
                       std::span<const std::uint64_t> visits,
                       std::size_t bands) {
  TreeSummary out;
  const auto nodes = tree.nodes();
  out.node_count = nodes.size();
  if (!visits.empty()) {
    if (visits.size() != nodes.size()) {
      throw std::invalid_argument("visit counters must match the node count");
    }
    if (bands == 0) {
      throw std::invalid_argument("need at least one radial band");
    }
    const double radius = tree.config().radius();
    out.visit_bands.resize(bands);
    for (std::size_t b = 0; b < bands; ++b) {
      out.visit_bands[b].max_r_lo = radius * static_cast<double>(b) / bands;
      out.visit_bands[b].max_r_hi = radius * static_cast<double>(b + 1) / bands;
    }
  }
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    const QuadNode& node = nodes[i];
    const auto depth = static_cast<std::size_t>(node.depth);
    if (out.nodes_per_depth.size() <= depth) {
      out.nodes_per_depth.resize(depth + 1, 0);
      out.points_per_depth.resize(depth + 1, 0);
    }
    ++out.nodes_per_depth[depth];
    if (node.is_leaf()) {
      ++out.leaf_count;
      out.height = std::max(out.height, node.depth);
      out.points_per_depth[depth] += node.points.size();
    }
    if (!visits.empty()) {
      const double radius = tree.config().radius();
      auto band = static_cast<std::size_t>(node.bounds.max_r / radius *
                                           static_cast<double>(bands));
      band = std::min(band, bands - 1);
      ++out.visit_bands[band].cells;
      out.visit_bands[band].visits += visits[i];
    }
  }
  return out;
}

ScalingReport scaling_report(std::span<const ScalingSample> samples) {
  if (samples.size() < 3) {
    throw std::invalid_argument("scaling_report needs at least three sizes");
  }
  const auto rows = static_cast<Eigen::Index>(samples.size());
  Eigen::MatrixXd sqrt_design(rows, 3);
  Eigen::MatrixXd linear_design(rows, 2);
  Eigen::VectorXd work(rows);
  for (Eigen::Index i = 0; i < rows; ++i) {
    const auto& s = samples[static_cast<std::size_t>(i)];
    sqrt_design(i, 0) = std::sqrt(s.n);
    sqrt_design(i, 1) = s.result_size;
    sqrt_design(i, 2) = 1.0;
    linear_design(i, 0) = s.n;
    linear_design(i, 1) = 1.0;
    work(i) = s.work;
  }
  ScalingReport out;
  const Eigen::VectorXd sqrt_fit =
      sqrt_design.colPivHouseholderQr().solve(work);
  out.sqrt_coef = sqrt_fit(0);
  out.result_coef = sqrt_fit(1);
  out.intercept = sqrt_fit(2);
  out.sqrt_rms_residual =
      std::sqrt((sqrt_design * sqrt_fit - work).squaredNorm() / rows);

  const Eigen::VectorXd linear_fit =
      linear_design.colPivHouseholderQr().solve(work);
  out.linear_slope = linear_fit(0);
  out.linear_intercept = linear_fit(1);
  out.linear_rms_residual =
      std::sqrt((linear_design * linear_fit - work).squaredNorm() / rows);
  double n_max = 0.0;
  for (const auto& s : samples) {
    n_max = std::max(n_max, s.n);
  }
  const double slope_part = std::abs(out.linear_slope * n_max);
  const double denom = slope_part + std::abs(out.linear_intercept);
  out.linear_share = denom > 0.0 ? slope_part / denom : 0.0;

  for (std::size_t i = 1; i < samples.size(); ++i) {
    out.successive_ratios.push_back(samples[i].work / samples[i - 1].work);
  }
  return out;
}

}  // namespace hyperdisk
