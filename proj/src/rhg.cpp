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

#include "hyperdisk/rhg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>
#include <variant>

#include "hyperdisk/pnq.hpp"

namespace hyperdisk {

double target_radius(double n, double radius_const) {
  if (!(n >= 2.0)) {
    throw std::invalid_argument("target_radius requires n >= 2");
  }
  return 2.0 * std::log(n) + radius_const;
}

double RhgParams::resolved_radius() const {
  if (radius) {
    return *radius;
  }
  // A single vertex has no edges; any positive radius will do.
  return target_radius(static_cast<double>(std::max<std::size_t>(n, 2)),
                       radius_const);
}

double RhgParams::kernel_radius() const {
  if (geometry == Geometry::hyperbolic) {
    return resolved_radius();
  }
  if (!edge_radius) {
    throw std::invalid_argument("Euclidean mode requires an edge radius");
  }
  return *edge_radius;
}

RadialDensity RhgParams::density() const {
  return geometry == Geometry::hyperbolic
             ? RadialDensity::hyperbolic(alpha, resolved_radius())
             : RadialDensity::euclidean_uniform(resolved_radius());
}

QuadtreeConfig RhgParams::tree_config() const {
  QuadtreeConfig config;
  config.capacity = capacity;
  config.balance = balance;
  config.geometry = geometry;
  config.density = density();
  return config;
}

EdgeKernel RhgParams::kernel() const {
  return make_edge_kernel(kernel_radius(), temperature);
}

void RhgParams::validate() const {
  if (n < 1) {
    throw std::invalid_argument("n must be >= 1");
  }
  if (!(alpha > 0.0)) {
    throw std::invalid_argument("alpha must be > 0");
  }
  if (!(temperature >= 0.0) || !std::isfinite(temperature)) {
    throw std::invalid_argument("temperature must be finite and >= 0");
  }
  const double r = resolved_radius();
  if (!(r > 0.0) || !std::isfinite(r)) {
    throw std::invalid_argument("disk radius must be positive, got " +
                                std::to_string(r));
  }
  if (n > std::numeric_limits<NodeId>::max()) {
    throw std::invalid_argument("n exceeds the node id range");
  }
  (void)kernel_radius();
  tree_config().validate();
}

PolarPoint sample_point(RngStream& rng, const RadialDensity& density) {
  const double phi = normalize_angle(kTwoPi * rng.uniform());
  const double r = density.inverse_cdf(rng.uniform());
  return PolarPoint{phi, r};
}

PolarPoint sample_point(RngStream& rng, double alpha, double radius) {
  return sample_point(rng, RadialDensity::hyperbolic(alpha, radius));
}

std::vector<PolarPoint> sample_points(std::size_t n,
                                      const RadialDensity& density,
                                      RngStream& rng) {
  std::vector<PolarPoint> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    out.push_back(sample_point(rng, density));
  }
  return out;
}

unsigned worker_threads() {
  if (const char* env = std::getenv("HYPERDISK_THREADS")) {
    const long value = std::strtol(env, nullptr, 10);
    if (value >= 1) {
      return static_cast<unsigned>(value);
    }
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

StaticGraph generate_edges(std::vector<PolarPoint> coordinates,
                           const RhgParams& params, std::uint64_t edge_seed) {
  params.validate();
  const std::size_t n = coordinates.size();
  std::vector<PointRecord> records(n);
  for (std::size_t i = 0; i < n; ++i) {
    records[i] = PointRecord{coordinates[i], static_cast<NodeId>(i)};
  }
  Quadtree tree = Quadtree::build(records, params.tree_config());
  GraphState graph(std::move(coordinates));
  const EdgeKernel kernel = params.kernel();
  const RngStream edge_root(edge_seed);

  // Each worker harvests a contiguous block of query vertices; blocks are
  // merged in vertex order so the result is independent of the thread count.
  const unsigned threads = static_cast<unsigned>(
      std::min<std::size_t>(worker_threads(), n == 0 ? 1 : n));
  std::vector<std::vector<Edge>> harvested(threads);
  auto work = [&](unsigned t) {
    const std::size_t begin = n * t / threads;
    const std::size_t end = n * (t + 1) / threads;
    for (std::size_t u = begin; u < end; ++u) {
      RngStream rng = edge_root.substream(u);
      const PolarPoint q = graph.position(static_cast<NodeId>(u));
      const QueryResult result = std::visit(
          [&](const auto& k) { return query_aggregated(tree, q, k, rng); },
          kernel);
      for (const NodeId v : result.ids) {
        if (v > u) {
          harvested[t].push_back(Edge{static_cast<NodeId>(u), v});
        }
      }
    }
  };
  if (threads == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) {
      pool.emplace_back(work, t);
    }
    for (auto& thread : pool) {
      thread.join();
    }
  }
  for (const auto& block : harvested) {
    for (const Edge& e : block) {
      graph.add_edge(e.u, e.v);
    }
  }
  return StaticGraph{std::move(graph), std::move(tree)};
}

StaticGraph generate_static(const RhgParams& params) {
  params.validate();
  const RngStream root(params.seed);
  RngStream coordinate_rng = root.substream(0);
  auto coordinates = sample_points(params.n, params.density(), coordinate_rng);
  return generate_edges(std::move(coordinates), params,
                        root.substream(1).seed());
}

}  // namespace hyperdisk
