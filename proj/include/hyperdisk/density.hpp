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

#ifndef HYPERDISK_DENSITY_HPP_
#define HYPERDISK_DENSITY_HPP_

namespace hyperdisk {

/// Radial point distribution on a disk of radius R: density j, cumulative J
/// with J(0) = 0 and J(R) = 1, and its inverse. Angles are always uniform.
///
/// Two families are provided. `hyperbolic(alpha, R)` is the random
/// hyperbolic graph density j(r) = alpha sinh(alpha r) / (cosh(alpha R) - 1);
/// `euclidean_uniform(R)` is the uniform density on a Euclidean disk,
/// j(r) = 2r / R^2.
class RadialDensity {
 public:
  enum class Kind { hyperbolic, euclidean_uniform };

  static RadialDensity hyperbolic(double alpha, double radius);
  static RadialDensity euclidean_uniform(double radius);

  double density(double r) const;
  double cdf(double r) const;
  double inverse_cdf(double x) const;

  /// Radius inside [min_r, max_r] such that the inner ring [min_r, mid)
  /// carries `inner_share` of the ring's probability mass.
  double split_radius(double min_r, double max_r, double inner_share) const;

  Kind kind() const { return kind_; }
  double alpha() const { return alpha_; }
  double radius() const { return radius_; }

 private:
  RadialDensity(Kind kind, double alpha, double radius);

  Kind kind_;
  double alpha_;
  double radius_;
  double half_outer_sinh_ = 0.0;  // sinh(alpha R / 2), hyperbolic only
};

}  // namespace hyperdisk

#endif  // HYPERDISK_DENSITY_HPP_
