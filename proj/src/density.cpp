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

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace hyperdisk {

RadialDensity::RadialDensity(Kind kind, double alpha, double radius)
    : kind_(kind), alpha_(alpha), radius_(radius) {
  if (!(radius > 0.0) || !std::isfinite(radius)) {
    throw std::invalid_argument("disk radius must be positive and finite");
  }
  if (kind == Kind::hyperbolic) {
    if (!(alpha > 0.0) || !std::isfinite(alpha)) {
      throw std::invalid_argument("alpha must be positive and finite");
    }
    half_outer_sinh_ = std::sinh(0.5 * alpha * radius);
    if (!std::isfinite(half_outer_sinh_)) {
      throw std::invalid_argument("alpha * R too large for double precision");
    }
  }
}

RadialDensity RadialDensity::hyperbolic(double alpha, double radius) {
  return RadialDensity(Kind::hyperbolic, alpha, radius);
}

RadialDensity RadialDensity::euclidean_uniform(double radius) {
  return RadialDensity(Kind::euclidean_uniform, 1.0, radius);
}

double RadialDensity::density(double r) const {
  if (r < 0.0 || r >= radius_) {
    return 0.0;
  }
  if (kind_ == Kind::hyperbolic) {
    // cosh(aR) - 1 = 2 sinh^2(aR/2)
    return alpha_ * std::sinh(alpha_ * r) /
           (2.0 * half_outer_sinh_ * half_outer_sinh_);
  }
  return 2.0 * r / (radius_ * radius_);
}

double RadialDensity::cdf(double r) const {
  if (r <= 0.0) {
    return 0.0;
  }
  if (r >= radius_) {
    return 1.0;
  }
  if (kind_ == Kind::hyperbolic) {
    // (cosh(ar) - 1) / (cosh(aR) - 1) = (sinh(ar/2) / sinh(aR/2))^2
    const double ratio = std::sinh(0.5 * alpha_ * r) / half_outer_sinh_;
    return ratio * ratio;
  }
  const double ratio = r / radius_;
  return ratio * ratio;
}

double RadialDensity::inverse_cdf(double x) const {
  x = std::clamp(x, 0.0, 1.0);
  if (kind_ == Kind::hyperbolic) {
    const double r = 2.0 * std::asinh(std::sqrt(x) * half_outer_sinh_) / alpha_;
    return std::min(r, radius_);
  }
  return std::min(radius_ * std::sqrt(x), radius_);
}

double RadialDensity::split_radius(double min_r, double max_r,
                                   double inner_share) const {
  const double lo = cdf(min_r);
  const double hi = cdf(max_r);
  const double mid = inverse_cdf(lo + inner_share * (hi - lo));
  return std::clamp(mid, min_r, max_r);
}

}  // namespace hyperdisk
