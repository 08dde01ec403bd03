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

#ifndef HYPERDISK_GEOMETRY_HPP_
#define HYPERDISK_GEOMETRY_HPP_

#include <cmath>
#include <numbers>

namespace hyperdisk {

inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// A point on the disk in polar coordinates. In hyperbolic mode `r` is the
/// hyperbolic distance to the origin (native representation); in Euclidean
/// mode it is the plain radius.
struct PolarPoint {
  double phi = 0.0;
  double r = 0.0;

  friend bool operator==(const PolarPoint&, const PolarPoint&) = default;
};

/// A point with sinh(r) cached for repeated hyperbolic distance evaluation.
struct PreparedPoint {
  PolarPoint point;
  double sinh_r = 0.0;

  PreparedPoint() = default;
  explicit PreparedPoint(const PolarPoint& p)
      : point(p), sinh_r(std::sinh(p.r)) {}
};

/// Polar cell [min_phi, max_phi) x [min_r, max_r).
struct CellBounds {
  double min_phi = 0.0;
  double max_phi = kTwoPi;
  double min_r = 0.0;
  double max_r = 0.0;

  bool contains(const PolarPoint& p) const {
    return min_phi <= p.phi && p.phi < max_phi && min_r <= p.r && p.r < max_r;
  }
};

struct DistanceBounds {
  double infimum = 0.0;
  double supremum = 0.0;
};

enum class Geometry { hyperbolic, euclidean };

/// Maps any finite angle into [0, 2pi).
double normalize_angle(double phi);

double hyperbolic_distance(const PreparedPoint& a, const PreparedPoint& b);
double euclidean_distance(const PolarPoint& a, const PolarPoint& b);

// Both overloads run the same arithmetic, so cached and uncached evaluation
// agree bit for bit.
inline double hyperbolic_distance(const PolarPoint& a, const PolarPoint& b) {
  return hyperbolic_distance(PreparedPoint(a), PreparedPoint(b));
}

inline double distance(Geometry geometry, const PolarPoint& a,
                       const PolarPoint& b) {
  return geometry == Geometry::hyperbolic ? hyperbolic_distance(a, b)
                                          : euclidean_distance(a, b);
}

inline double distance(Geometry geometry, const PreparedPoint& a,
                       const PreparedPoint& b) {
  return geometry == Geometry::hyperbolic
             ? hyperbolic_distance(a, b)
             : euclidean_distance(a.point, b.point);
}

// Infimum and supremum of the distance from q to the closed cell. The
// candidate set holds the four corners plus every interior extremum of the
// distance restricted to one of the four boundary curves; the infimum is 0
// when q lies inside the cell. Cells must not straddle the 0/2pi seam.
DistanceBounds cell_distance_bounds_hyperbolic(const CellBounds& cell,
                                               const PolarPoint& q);
DistanceBounds cell_distance_bounds_euclidean(const CellBounds& cell,
                                              const PolarPoint& q);

inline DistanceBounds cell_distance_bounds(Geometry geometry,
                                           const CellBounds& cell,
                                           const PolarPoint& q) {
  return geometry == Geometry::hyperbolic
             ? cell_distance_bounds_hyperbolic(cell, q)
             : cell_distance_bounds_euclidean(cell, q);
}

}  // namespace hyperdisk

#endif  // HYPERDISK_GEOMETRY_HPP_
