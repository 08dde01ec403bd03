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

#include "hyperdisk/geometry.hpp"

#include <algorithm>
#include <array>
#include <cassert>
#include <cmath>
#include <limits>

namespace hyperdisk {

namespace {

constexpr double kPi = std::numbers::pi;

// Signed difference wrapped into [-pi, pi]. One fold suffices for angles
// already in [0, 2pi); the remainder call covers everything else.
double angle_difference(double a, double b) {
  double d = a - b;
  if (d > kPi) {
    d -= kTwoPi;
  } else if (d < -kPi) {
    d += kTwoPi;
  }
  if (d > kPi || d < -kPi) {
    d = std::remainder(a - b, kTwoPi);
  }
  return d;
}

// Up to ten boundary points whose distance to q can be extremal.
class CandidateSet {
 public:
  void add(double phi, double r) { points_[size_++] = PolarPoint{phi, r}; }

  template <typename Metric>
  DistanceBounds evaluate(const PolarPoint& q, bool q_inside,
                          Metric metric) const {
    double lo = std::numeric_limits<double>::infinity();
    double hi = 0.0;
    for (std::size_t i = 0; i < size_; ++i) {
      const double d = metric(q, points_[i]);
      lo = std::min(lo, d);
      hi = std::max(hi, d);
    }
    return DistanceBounds{q_inside ? 0.0 : lo, hi};
  }

 private:
  std::array<PolarPoint, 10> points_{};
  std::size_t size_ = 0;
};

void add_corners(CandidateSet& set, const CellBounds& c) {
  set.add(c.min_phi, c.min_r);
  set.add(c.min_phi, c.max_r);
  set.add(c.max_phi, c.min_r);
  set.add(c.max_phi, c.max_r);
}

// Extrema along the arcs r = min_r and r = max_r sit at phi_q and at the
// mirrored angle phi_q + pi.
void add_arc_extrema(CandidateSet& set, const CellBounds& c,
                     const PolarPoint& q) {
  if (c.min_phi < q.phi && q.phi < c.max_phi) {
    set.add(q.phi, c.min_r);
    set.add(q.phi, c.max_r);
  }
  const double mirrored = normalize_angle(q.phi + kPi);
  if (c.min_phi < mirrored && mirrored < c.max_phi) {
    set.add(mirrored, c.min_r);
    set.add(mirrored, c.max_r);
  }
}

// Stationary point of r -> dist(q, (phi_ray, r)) in the hyperbolic plane,
// r* = 1/2 ln((a+b)/(a-b)) with a = cosh r_q, b = sinh r_q cos(phi_q -
// phi_ray). Both a+b and a-b are evaluated as sums of non-negative terms so
// that large r_q does not cancel them to zero.
bool hyperbolic_ray_extremum(const PolarPoint& q, double phi_ray,
                             double* extremum) {
  const double half = 0.5 * angle_difference(q.phi, phi_ray);
  const double sh = std::sinh(q.r);
  const double em = std::exp(-q.r);
  const double s = std::sin(half);
  const double c = std::cos(half);
  const double a_plus_b = em + 2.0 * sh * c * c;
  const double a_minus_b = em + 2.0 * sh * s * s;
  if (!(a_plus_b > 0.0) || !(a_minus_b > 0.0)) {
    return false;  // a == b: no extremum in R
  }
  *extremum = 0.5 * (std::log(a_plus_b) - std::log(a_minus_b));
  return std::isfinite(*extremum);
}

}  // namespace

double normalize_angle(double phi) {
  double result = std::fmod(phi, kTwoPi);
  if (result < 0.0) {
    result += kTwoPi;
  }
  // fmod of a tiny negative value plus 2pi rounds to exactly 2pi.
  if (result >= kTwoPi) {
    result = 0.0;
  }
  return result;
}

double hyperbolic_distance(const PreparedPoint& a, const PreparedPoint& b) {
  // cosh d = cosh(r1 - r2) + 2 sinh r1 sinh r2 sin^2(dphi / 2), which is the
  // textbook cosh r1 cosh r2 - sinh r1 sinh r2 cos(dphi) without the
  // catastrophic cancellation for near-coincident points.
  const double half_radial = std::sinh(0.5 * (a.point.r - b.point.r));
  const double half_angle =
      std::sin(0.5 * angle_difference(a.point.phi, b.point.phi));
  const double excess =
      std::max(0.0, 2.0 * half_radial * half_radial +
                        2.0 * a.sinh_r * b.sinh_r * half_angle * half_angle);
  // acosh(1 + x) = log1p(x + sqrt(x (x + 2))); the product overflows once
  // both radii approach 350.
  const double root = excess < 1e150
                          ? std::sqrt(excess * (excess + 2.0))
                          : std::sqrt(excess) * std::sqrt(excess + 2.0);
  return std::log1p(excess + root);
}

double euclidean_distance(const PolarPoint& a, const PolarPoint& b) {
  const double half_angle = std::sin(0.5 * angle_difference(a.phi, b.phi));
  const double dr = a.r - b.r;
  return std::sqrt(
      std::max(0.0, dr * dr + 4.0 * a.r * b.r * half_angle * half_angle));
}

DistanceBounds cell_distance_bounds_hyperbolic(const CellBounds& cell,
                                               const PolarPoint& q) {
  assert(cell.min_phi <= cell.max_phi && cell.max_phi <= kTwoPi);
  CandidateSet set;
  add_corners(set, cell);
  for (const double phi_ray : {cell.min_phi, cell.max_phi}) {
    double extremum = 0.0;
    if (hyperbolic_ray_extremum(q, phi_ray, &extremum) &&
        cell.min_r < extremum && extremum < cell.max_r) {
      set.add(phi_ray, extremum);
    }
  }
  add_arc_extrema(set, cell, q);
  return set.evaluate(q, cell.contains(q),
                      [](const PolarPoint& a, const PolarPoint& b) {
                        return hyperbolic_distance(a, b);
                      });
}

DistanceBounds cell_distance_bounds_euclidean(const CellBounds& cell,
                                              const PolarPoint& q) {
  assert(cell.min_phi <= cell.max_phi && cell.max_phi <= kTwoPi);
  CandidateSet set;
  add_corners(set, cell);
  for (const double phi_ray : {cell.min_phi, cell.max_phi}) {
    // Foot of the perpendicular from q onto the ray.
    const double extremum = q.r * std::cos(phi_ray - q.phi);
    if (cell.min_r < extremum && extremum < cell.max_r) {
      set.add(phi_ray, extremum);
    }
  }
  add_arc_extrema(set, cell, q);
  return set.evaluate(q, cell.contains(q), euclidean_distance);
}

}  // namespace hyperdisk
