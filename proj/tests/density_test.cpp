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

#include "hyperdisk/density.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <stdexcept>

namespace hyperdisk {
namespace {

TEST(RadialDensity, HyperbolicCdfEndpointsAndInverse) {
  const auto d = RadialDensity::hyperbolic(0.75, 17.0);
  EXPECT_EQ(d.cdf(0.0), 0.0);
  EXPECT_EQ(d.cdf(17.0), 1.0);
  double previous = -1.0;
  for (int i = 0; i <= 1000; ++i) {
    const double x = i / 1000.0;
    EXPECT_NEAR(d.cdf(d.inverse_cdf(x)), x, 1e-9);
    const double r = 17.0 * i / 1000.0;
    EXPECT_GE(d.cdf(r), previous);
    previous = d.cdf(r);
  }
  EXPECT_EQ(d.inverse_cdf(0.0), 0.0);
  EXPECT_EQ(d.inverse_cdf(1.0), 17.0);
}

TEST(RadialDensity, InverseCdfMatchesOracle) {
  // 2 asinh(sqrt(0.3) sinh 5), 60-digit evaluation.
  const auto d = RadialDensity::hyperbolic(1.0, 10.0);
  EXPECT_NEAR(d.inverse_cdf(0.3), 8.79623901874116289576144788889543, 1e-13);
}

TEST(RadialDensity, DensityPositiveExactlyInsideDisk) {
  const auto d = RadialDensity::hyperbolic(1.0, 10.0);
  EXPECT_GT(d.density(1e-3), 0.0);
  EXPECT_GT(d.density(9.999), 0.0);
  EXPECT_EQ(d.density(10.0), 0.0);
  EXPECT_EQ(d.density(10.5), 0.0);
  // Matches the derivative of the cdf.
  const double h = 1e-6;
  EXPECT_NEAR(d.density(6.0), (d.cdf(6.0 + h) - d.cdf(6.0 - h)) / (2 * h),
              1e-6);
}

TEST(RadialDensity, EuclideanUniform) {
  const auto d = RadialDensity::euclidean_uniform(4.0);
  EXPECT_DOUBLE_EQ(d.cdf(2.0), 0.25);
  EXPECT_DOUBLE_EQ(d.inverse_cdf(0.25), 2.0);
  EXPECT_DOUBLE_EQ(d.density(2.0), 0.25);
}

TEST(RadialDensity, SplitRadiusClosedForm) {
  // acosh((cosh 20 + 1) / 2), 60-digit evaluation.
  const auto d = RadialDensity::hyperbolic(1.0, 20.0);
  EXPECT_NEAR(d.split_radius(0.0, 20.0, 0.5),
              19.3068528235623619142181124039576, 1e-12);
  // acosh(0.1 cosh(0.75 * 9) + 0.9 cosh(0.75 * 2)) / 0.75.
  const auto e = RadialDensity::hyperbolic(0.75, 12.0);
  EXPECT_NEAR(e.split_radius(2.0, 9.0, 0.1), 5.99424115310035525663057101432616,
              1e-12);
}

TEST(RadialDensity, SplitRadiusCarriesInnerShare) {
  const auto d = RadialDensity::hyperbolic(0.6, 14.0);
  for (const double b : {0.001, 0.01, 0.1, 0.5, 0.9}) {
    const double mid = d.split_radius(3.0, 11.0, b);
    EXPECT_NEAR(d.cdf(mid) - d.cdf(3.0), b * (d.cdf(11.0) - d.cdf(3.0)), 1e-12);
    EXPECT_GE(mid, 3.0);
    EXPECT_LE(mid, 11.0);
  }
}

TEST(RadialDensity, RejectsBadParameters) {
  EXPECT_THROW(RadialDensity::hyperbolic(0.0, 10.0), std::invalid_argument);
  EXPECT_THROW(RadialDensity::hyperbolic(1.0, -1.0), std::invalid_argument);
  EXPECT_THROW(RadialDensity::hyperbolic(1.0, 2000.0), std::invalid_argument);
  EXPECT_THROW(RadialDensity::euclidean_uniform(0.0), std::invalid_argument);
}

}  // namespace
}  // namespace hyperdisk
