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

#include <gtest/gtest.h>

#include <cmath>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "hyperdisk/random.hpp"
#include "support.hpp"

namespace hyperdisk {
namespace {

GraphState cycle(std::size_t n) {
  std::vector<PolarPoint> pts(n);
  GraphState g(pts);
  for (NodeId i = 0; i < n; ++i) {
    g.add_edge(i, static_cast<NodeId>((i + 1) % n));
  }
  return g;
}

TEST(DegreeStats, Cycle) {
  const auto s = degree_stats(cycle(100));
  EXPECT_DOUBLE_EQ(s.mean, 2.0);
  ASSERT_EQ(s.histogram.size(), 3u);
  EXPECT_EQ(s.histogram[2], 100u);
  EXPECT_FALSE(s.tail.has_value());
}

TEST(DegreeStats, Star) {
  constexpr std::size_t n = 51;
  GraphState g{std::vector<PolarPoint>(n)};
  for (NodeId i = 1; i < n; ++i) {
    g.add_edge(0, i);
  }
  const auto s = degree_stats(g);
  EXPECT_DOUBLE_EQ(s.mean, 2.0 * (n - 1) / n);
  EXPECT_EQ(
      std::accumulate(s.histogram.begin(), s.histogram.end(), std::uint64_t{0}),
      n);
  EXPECT_EQ(s.histogram[1], n - 1);
  EXPECT_EQ(s.histogram[n - 1], 1u);
  EXPECT_THROW(degree_stats(GraphState{}), std::invalid_argument);
}

TEST(FitPowerLaw, RecoversSyntheticExponent) {
  // Discrete samples from P(X >= x) ~ ((x - 1/2) / 4.5)^(1 - gamma), x >= 5.
  constexpr double kGamma = 2.5;
  RngStream rng(12);
  std::vector<std::uint64_t> values;
  for (int i = 0; i < 50000; ++i) {
    const double x =
        4.5 * std::pow(1.0 - rng.uniform(), -1.0 / (kGamma - 1.0)) + 0.5;
    values.push_back(static_cast<std::uint64_t>(std::floor(x)));
  }
  // Pad the head with values that do not follow the law.
  for (int i = 0; i < 20000; ++i) {
    values.push_back(1 + rng.below(4));
  }
  const auto fit = fit_power_law(values);
  ASSERT_TRUE(fit.has_value());
  EXPECT_NEAR(fit->exponent, kGamma, 0.05);
  EXPECT_GE(fit->x_min, 4u);
  EXPECT_LT(fit->ks_distance, 0.02);
}

TEST(FitPowerLaw, TooFewDistinctValues) {
  const std::vector<std::uint64_t> flat(1000, 3);
  EXPECT_FALSE(fit_power_law(flat).has_value());
  EXPECT_FALSE(fit_power_law(std::vector<std::uint64_t>{}).has_value());
}

TEST(TreeStats, SingleLeaf) {
  QuadtreeConfig config = testing::hyperbolic_config(1.0, 10.0);
  Quadtree tree(config);
  tree.insert({1.0, 1.0}, 0);
  const auto s = tree_stats(tree);
  EXPECT_EQ(s.height, 0);
  EXPECT_EQ(s.node_count, 1u);
  EXPECT_EQ(s.leaf_count, 1u);
  EXPECT_EQ(s.points_per_depth, std::vector<std::size_t>{1});
}

TEST(TreeStats, CountsAgreeWithTree) {
  const auto config = testing::hyperbolic_config(0.75, 14.0, 4);
  RngStream rng(2);
  std::vector<PolarPoint> pts;
  const auto density = config.density;
  for (int i = 0; i < 3000; ++i) {
    pts.push_back({kTwoPi * rng.uniform(), density.inverse_cdf(rng.uniform())});
  }
  const Quadtree tree = Quadtree::build(testing::to_records(pts), config);
  std::vector<std::uint64_t> visits(tree.nodes().size(), 2);
  const auto s = tree_stats(tree, visits, 7);
  EXPECT_EQ(s.height, tree.height());
  EXPECT_EQ(s.node_count, tree.nodes().size());
  // Every internal node has four children.
  EXPECT_EQ(s.node_count, 1 + 4 * (s.node_count - s.leaf_count));
  std::size_t points = 0;
  std::size_t cells = 0;
  std::uint64_t visit_total = 0;
  for (auto p : s.points_per_depth) points += p;
  for (const auto& band : s.visit_bands) {
    cells += band.cells;
    visit_total += band.visits;
  }
  EXPECT_EQ(points, 3000u);
  EXPECT_EQ(cells, s.node_count);
  EXPECT_EQ(visit_total, 2 * s.node_count);
  EXPECT_THROW(tree_stats(tree, std::vector<std::uint64_t>(3, 0)),
               std::invalid_argument);
}

TEST(ScalingReport, RecoversSqrtModel) {
  std::vector<ScalingSample> samples;
  const double results[] = {3.0, 9.0, 4.0, 12.0, 7.0};
  double n = 1024;
  for (const double r : results) {
    samples.push_back({n, 3.0 * std::sqrt(n) + 2.0 * r + 5.0, r});
    n *= 4;
  }
  const auto report = scaling_report(samples);
  EXPECT_NEAR(report.sqrt_coef, 3.0, 0.03);
  EXPECT_NEAR(report.result_coef, 2.0, 0.02);
  EXPECT_LT(report.sqrt_rms_residual, 1e-6);
  ASSERT_EQ(report.successive_ratios.size(), 4u);
  EXPECT_NEAR(report.successive_ratios[0], samples[1].work / samples[0].work,
              1e-12);
}

TEST(ScalingReport, LinearWorkHasFullShare) {
  std::vector<ScalingSample> samples;
  for (double n = 1000; n <= 64000; n *= 2) {
    samples.push_back({n, 0.5 * n, 1.0});
  }
  const auto report = scaling_report(samples);
  EXPECT_NEAR(report.linear_slope, 0.5, 1e-9);
  EXPECT_NEAR(report.linear_share, 1.0, 1e-6);
  EXPECT_THROW(scaling_report(std::span(samples).first(2)),
               std::invalid_argument);
}

}  // namespace
}  // namespace hyperdisk
