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

#ifndef HYPERDISK_DYNAMICS_HPP_
#define HYPERDISK_DYNAMICS_HPP_

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "hyperdisk/graph.hpp"
#include "hyperdisk/kernel.hpp"
#include "hyperdisk/pnq.hpp"
#include "hyperdisk/quadtree.hpp"
#include "hyperdisk/random.hpp"

namespace hyperdisk {

struct StepRange {
  double lo = 0.0;
  double hi = 0.0;
};

/// Per-node constant step values. tau_r acts on x = sinh(alpha r) and only
/// changes sign when a node bounces off r = 0 or r = R.
struct MovementState {
  std::vector<double> tau_phi;
  std::vector<double> tau_r;

  std::size_t size() const { return tau_phi.size(); }
};

/// tau_phi ~ U[phi.lo, phi.hi]; |tau_r| ~ U[r.lo, r.hi] with a fair random
/// sign. Throws if a range is not finite or ordered, or if r.hi exceeds
/// sinh(alpha R) (a step must never need two reflections).
MovementState init_movement(std::size_t n, StepRange phi, StepRange r,
                            const RadialDensity& density, RngStream& rng);

struct MoveResult {
  PolarPoint position;
  double tau_r = 0.0;
  bool reflected = false;
};

/// One movement step: rotate by tau_phi (mod 2pi) and shift sinh(alpha r) by
/// tau_r, mirroring at 0 and sinh(alpha R) and flipping tau_r on a bounce.
MoveResult move_point(const PolarPoint& p, double tau_phi, double tau_r,
                      double radius, double alpha);

/// Net change caused by moving one node.
struct GraphDelta {
  std::uint64_t step = 0;
  NodeId node = 0;
  PolarPoint position;
  std::vector<Edge> edges_added;
  std::vector<Edge> edges_removed;
};

/// Moves every node in `to_move` in order: remove it from the tree, advance
/// it, reinsert it, drop its edges and resample them with one aggregated
/// query from the new position. Requires a hyperbolic tree. Returns one delta
/// per moved node, all tagged with `step`.
std::vector<GraphDelta> dynamic_step(GraphState& graph, Quadtree& tree,
                                     MovementState& movement,
                                     std::span<const NodeId> to_move,
                                     const EdgeKernel& kernel, RngStream& rng,
                                     std::uint64_t step = 0);

/// Applies a delta to a graph; throws std::logic_error if it does not fit.
void apply_delta(GraphState& graph, const GraphDelta& delta);

}  // namespace hyperdisk

#endif  // HYPERDISK_DYNAMICS_HPP_
