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

#ifndef HYPERDISK_RHG_HPP_
#define HYPERDISK_RHG_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "hyperdisk/graph.hpp"
#include "hyperdisk/kernel.hpp"
#include "hyperdisk/quadtree.hpp"
#include "hyperdisk/random.hpp"

namespace hyperdisk {

/// R = 2 ln(n) + C. Requires n >= 2.
double target_radius(double n, double radius_const);

/// gamma = 2 alpha + 1 (curvature fixed to 1).
inline double degree_exponent(double alpha) { return 2.0 * alpha + 1.0; }

/// The power-law prediction only holds for alpha >= 1/2.
inline bool in_power_law_regime(double alpha) { return alpha >= 0.5; }

struct RhgParams {
  std::size_t n = 0;
  double alpha = 1.0;
  double temperature = 0.0;
  // Disk radius; when unset, R = 2 ln(max(n, 2)) + radius_const.
  std::optional<double> radius;
  double radius_const = 0.0;
  std::uint64_t seed = 0;

  Geometry geometry = Geometry::hyperbolic;
  // Kernel radius for Euclidean mode; hyperbolic graphs always use R.
  std::optional<double> edge_radius;

  std::size_t capacity = 128;
  double balance = 0.5;

  double resolved_radius() const;
  double kernel_radius() const;
  RadialDensity density() const;
  QuadtreeConfig tree_config() const;
  EdgeKernel kernel() const;

  /// Throws std::invalid_argument on inconsistent parameters.
  void validate() const;
};

/// Angle uniform on [0, 2pi), radius by inverse-CDF sampling of `density`.
PolarPoint sample_point(RngStream& rng, const RadialDensity& density);

/// Hyperbolic convenience overload: r = acosh(1 + u (cosh(aR) - 1)) / a.
PolarPoint sample_point(RngStream& rng, double alpha, double radius);

std::vector<PolarPoint> sample_points(std::size_t n,
                                      const RadialDensity& density,
                                      RngStream& rng);

struct StaticGraph {
  GraphState graph;
  Quadtree tree;
};

/// Samples coordinates from the params' seed and generates the graph.
StaticGraph generate_static(const RhgParams& params);

/// Generates edges for fixed coordinates: one aggregated neighborhood query
/// per vertex u, keeping returned v only when v > u, so each unordered pair
/// is sampled exactly once. `edge_seed` fixes the per-vertex streams.
StaticGraph generate_edges(std::vector<PolarPoint> coordinates,
                           const RhgParams& params, std::uint64_t edge_seed);

/// Worker threads for parallel sections: HYPERDISK_THREADS if set, else the
/// hardware concurrency.
unsigned worker_threads();

}  // namespace hyperdisk

#endif  // HYPERDISK_RHG_HPP_
