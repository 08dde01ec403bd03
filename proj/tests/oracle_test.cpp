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

#include "hyperdisk/oracle.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <stdexcept>
#include <vector>

#include "support.hpp"

namespace hyperdisk {
namespace {

std::vector<PointRecord> line_of_points(std::size_t n) {
  std::vector<PolarPoint> pts;
  for (std::size_t i = 0; i < n; ++i) {
    pts.push_back({0.01 * i, 1.0 + 0.1 * i});
  }
  return testing::to_records(pts);
}

TEST(QueryNaive, ConstantKernels) {
  const auto points = line_of_points(50);
  RngStream rng(1);
  EXPECT_TRUE(query_naive(points, {0, 0}, ConstantKernel(0.0),
                          Geometry::hyperbolic, rng)
                  .empty());
  EXPECT_EQ(
      query_naive(points, {0, 0}, ConstantKernel(1.0), Geometry::euclidean, rng)
          .size(),
      50u);
}

TEST(FrequencyTable, CountsAndErrors) {
  FrequencyTable t({4, 7, 9});
  const std::vector<NodeId> a = {7, 9};
  const std::vector<NodeId> b = {9};
  t.record(a);
  t.record(b);
  EXPECT_EQ(t.trials(), 2u);
  EXPECT_EQ(t.counts()[0], 0u);
  EXPECT_EQ(t.counts()[1], 1u);
  EXPECT_EQ(t.counts()[2], 2u);
  EXPECT_DOUBLE_EQ(t.frequency(1), 0.5);
  const std::vector<NodeId> stranger = {5};
  EXPECT_THROW(t.record(stranger), std::invalid_argument);
  EXPECT_THROW(FrequencyTable({1, 1}), std::invalid_argument);
}

TEST(CompareFrequencies, IdenticalTables) {
  FrequencyTable a({0, 1, 2});
  FrequencyTable b({0, 1, 2});
  const std::vector<NodeId> hit = {0, 2};
  for (int i = 0; i < 10; ++i) {
    a.record(hit);
    b.record(hit);
  }
  const auto cmp = compare_frequencies(a, b);
  EXPECT_DOUBLE_EQ(cmp.p_value, 1.0);
  EXPECT_TRUE(cmp.flagged.empty());
  EXPECT_THROW(compare_frequencies(a, FrequencyTable({0, 1, 3})),
               std::invalid_argument);
}

TEST(CompareFrequencies, DetectsShiftedPoint) {
  FrequencyTable a({0, 1});
  FrequencyTable b({0, 1});
  RngStream rng(3);
  for (int i = 0; i < 5000; ++i) {
    std::vector<NodeId> ra;
    std::vector<NodeId> rb;
    if (rng.uniform() < 0.5) ra.push_back(0);
    if (rng.uniform() < 0.5) rb.push_back(0);
    if (rng.uniform() < 0.3) ra.push_back(1);
    if (rng.uniform() < 0.4) rb.push_back(1);
    a.record(ra);
    b.record(rb);
  }
  const auto cmp = compare_frequencies(a, b);
  EXPECT_LT(cmp.p_value, 1e-6);
  EXPECT_EQ(cmp.flagged, std::vector<NodeId>{1});
}

TEST(CheckInclusion, ExactAndBiased) {
  FrequencyTable t({0, 1, 2});
  RngStream rng(5);
  for (int i = 0; i < 4000; ++i) {
    std::vector<NodeId> r = {0};  // p = 1
    if (rng.uniform() < 0.25) r.push_back(2);
    t.record(r);
  }
  const std::vector<double> right = {1.0, 0.0, 0.25};
  EXPECT_EQ(check_inclusion(t, right).within, 3u);
  const std::vector<double> wrong = {1.0, 0.0, 0.3};
  const auto check = check_inclusion(t, wrong);
  EXPECT_EQ(check.within, 2u);
  EXPECT_EQ(check.outside, std::vector<NodeId>{2});
  const std::vector<double> short_list = {1.0};
  EXPECT_THROW(check_inclusion(t, short_list), std::invalid_argument);
}

TEST(KsTest, Controls) {
  RngStream rng(7);
  std::vector<double> uniform;
  std::vector<double> squared;
  for (int i = 0; i < 5000; ++i) {
    const double u = rng.uniform();
    uniform.push_back(u);
    squared.push_back(u * u);
  }
  const auto cdf = [](double x) { return std::clamp(x, 0.0, 1.0); };
  EXPECT_GT(ks_test(uniform, cdf).p_value, 0.01);
  EXPECT_LT(ks_test(squared, cdf).p_value, 1e-10);
  EXPECT_THROW(ks_test({0.1, 0.2}, cdf), std::invalid_argument);
}

TEST(KolmogorovSurvival, KnownValues) {
  // Q(1.3581) ~ 0.05 and Q(1.6276) ~ 0.01 are the textbook critical points.
  EXPECT_NEAR(kolmogorov_survival(1.3581), 0.05, 1e-4);
  EXPECT_NEAR(kolmogorov_survival(1.6276), 0.01, 1e-4);
  EXPECT_NEAR(kolmogorov_survival(0.0), 1.0, 1e-12);
}

TEST(ChiSquare, SurvivalAndFit) {
  // 2 degrees of freedom: survival is exp(-x / 2).
  EXPECT_NEAR(chi_square_survival(3.0, 2.0), std::exp(-1.5), 1e-14);
  EXPECT_NEAR(chi_square_survival(3.84145882069412, 1.0), 0.05, 1e-9);
  const std::vector<double> observed = {10, 20, 30};
  const std::vector<double> expected = {10, 20, 30};
  const auto fit = chi_square_goodness_of_fit(observed, expected);
  EXPECT_DOUBLE_EQ(fit.statistic, 0.0);
  EXPECT_DOUBLE_EQ(fit.p_value, 1.0);
  const std::vector<double> skewed = {30, 20, 10};
  EXPECT_LT(chi_square_goodness_of_fit(skewed, expected).p_value, 1e-6);
  EXPECT_THROW(chi_square_goodness_of_fit(skewed, std::vector<double>{1.0}),
               std::invalid_argument);
}

TEST(ChiSquare, PoolsSparseBins) {
  const std::vector<double> observed = {50, 49, 1, 0, 0};
  const std::vector<double> expected = {50, 48, 1, 0.5, 0.5};
  const auto fit = chi_square_goodness_of_fit(observed, expected);
  EXPECT_LT(fit.degrees_of_freedom, 4.0);
  EXPECT_GT(fit.p_value, 0.5);
}

}  // namespace
}  // namespace hyperdisk
