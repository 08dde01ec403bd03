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

#include "hyperdisk/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <iterator>
#include <stdexcept>
#include <string>
#include <variant>

namespace hyperdisk {

namespace {

void check_range(const StepRange& range, const char* name) {
  if (!std::isfinite(range.lo) || !std::isfinite(range.hi) ||
      range.lo > range.hi) {
    throw std::invalid_argument(std::string(name) +
                                " range must be finite with lo <= hi");
  }
}

}  // namespace

MovementState init_movement(std::size_t n, StepRange phi, StepRange r,
                            const RadialDensity& density, RngStream& rng) {
  check_range(phi, "tau_phi");
  check_range(r, "tau_r");
  if (r.lo < 0.0) {
    throw std::invalid_argument(
        "tau_r range gives magnitudes, lo must be >= 0");
  }
  const double limit = std::sinh(density.alpha() * density.radius());
  if (r.hi > limit) {
    throw std::invalid_argument("tau_r magnitude exceeds sinh(alpha R) = " +
                                std::to_string(limit));
  }
  MovementState state;
  state.tau_phi.resize(n);
  state.tau_r.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    state.tau_phi[i] = phi.lo + (phi.hi - phi.lo) * rng.uniform();
    const double magnitude = r.lo + (r.hi - r.lo) * rng.uniform();
    state.tau_r[i] = rng.uniform() < 0.5 ? -magnitude : magnitude;
  }
  return state;
}

MoveResult move_point(const PolarPoint& p, double tau_phi, double tau_r,
                      double radius, double alpha) {
  const double ceiling = std::sinh(alpha * radius);
  double y = std::sinh(alpha * p.r) + tau_r;
  bool reflected = false;
  if (y > ceiling) {
    y = 2.0 * ceiling - y;
    tau_r = -tau_r;
    reflected = true;
  } else if (y < 0.0) {
    y = -y;
    tau_r = -tau_r;
    reflected = true;
  }
  const double r = std::clamp(std::asinh(y) / alpha, 0.0, radius);
  return MoveResult{PolarPoint{normalize_angle(p.phi + tau_phi), r}, tau_r,
                    reflected};
}

std::vector<GraphDelta> dynamic_step(GraphState& graph, Quadtree& tree,
                                     MovementState& movement,
                                     std::span<const NodeId> to_move,
                                     const EdgeKernel& kernel, RngStream& rng,
                                     std::uint64_t step) {
  if (tree.geometry() != Geometry::hyperbolic) {
    throw std::invalid_argument("the movement model is hyperbolic only");
  }
  const double radius = tree.config().radius();
  const double alpha = tree.config().density.alpha();
  std::vector<GraphDelta> deltas;
  deltas.reserve(to_move.size());
  for (const NodeId u : to_move) {
    if (u >= graph.node_count() || !tree.contains(u)) {
      throw std::invalid_argument("node " + std::to_string(u) +
                                  " does not exist");
    }
    const PolarPoint old_position = graph.position(u);
    tree.remove(old_position, u);
    const MoveResult moved = move_point(old_position, movement.tau_phi[u],
                                        movement.tau_r[u], radius, alpha);
    movement.tau_r[u] = moved.tau_r;
    tree.insert(moved.position, u);
    graph.set_position(u, moved.position);

    std::vector<NodeId> before = graph.remove_incident_edges(u);
    const QueryResult result = std::visit(
        [&](const auto& k) {
          return query_aggregated(tree, moved.position, k, rng);
        },
        kernel);
    std::vector<NodeId> after;
    after.reserve(result.ids.size());
    for (const NodeId v : result.ids) {
      if (v != u) {
        graph.add_edge(u, v);
        after.push_back(v);
      }
    }
    std::sort(before.begin(), before.end());
    std::sort(after.begin(), after.end());

    GraphDelta delta;
    delta.step = step;
    delta.node = u;
    delta.position = moved.position;
    std::vector<NodeId> diff;
    std::set_difference(after.begin(), after.end(), before.begin(),
                        before.end(), std::back_inserter(diff));
    for (const NodeId v : diff) {
      delta.edges_added.push_back(Edge::make(u, v));
    }
    diff.clear();
    std::set_difference(before.begin(), before.end(), after.begin(),
                        after.end(), std::back_inserter(diff));
    for (const NodeId v : diff) {
      delta.edges_removed.push_back(Edge::make(u, v));
    }
    deltas.push_back(std::move(delta));
  }
  return deltas;
}

void apply_delta(GraphState& graph, const GraphDelta& delta) {
  if (delta.node >= graph.node_count()) {
    throw std::logic_error("delta moves unknown node " +
                           std::to_string(delta.node));
  }
  graph.set_position(delta.node, delta.position);
  for (const Edge& e : delta.edges_removed) {
    if (!graph.remove_edge(e.u, e.v)) {
      throw std::logic_error("delta removes absent edge " +
                             std::to_string(e.u) + "-" + std::to_string(e.v));
    }
  }
  for (const Edge& e : delta.edges_added) {
    if (!graph.add_edge(e.u, e.v)) {
      throw std::logic_error("delta adds existing edge " + std::to_string(e.u) +
                             "-" + std::to_string(e.v));
    }
  }
}

}  // namespace hyperdisk
