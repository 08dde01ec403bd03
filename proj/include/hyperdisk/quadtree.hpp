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

#ifndef HYPERDISK_QUADTREE_HPP_
#define HYPERDISK_QUADTREE_HPP_

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <unordered_set>
#include <vector>

#include "hyperdisk/density.hpp"
#include "hyperdisk/geometry.hpp"

namespace hyperdisk {

using NodeId = std::uint32_t;

struct PointRecord {
  PolarPoint position;
  NodeId id = 0;
};

/// Leaf storage: the record plus cached sinh(r).
struct StoredPoint {
  PreparedPoint coords;
  NodeId id = 0;

  const PolarPoint& position() const { return coords.point; }
};

struct QuadtreeConfig {
  std::size_t capacity = 128;
  // Share of a cell's probability mass given to its two inner children:
  // J(mid_r) = balance J(max_r) + (1 - balance) J(min_r). Small values make
  // inner cells thin and speed up queries.
  double balance = 0.5;
  Geometry geometry = Geometry::hyperbolic;
  RadialDensity density = RadialDensity::hyperbolic(1.0, 1.0);
  // Leaves at this depth never split and may exceed capacity.
  int max_depth = 40;

  double radius() const { return density.radius(); }

  /// Throws std::invalid_argument on capacity < 1 or balance outside (0, 1).
  void validate() const;
};

inline constexpr std::uint32_t kNoChildren = UINT32_MAX;

struct QuadNode {
  CellBounds bounds;
  // Children occupy nodes [first_child, first_child + 4) in the canonical
  // order inner-left, inner-right, outer-left, outer-right.
  std::uint32_t first_child = kNoChildren;
  int depth = 0;
  std::size_t subtree_size = 0;
  std::vector<StoredPoint> points;  // leaves only

  bool is_leaf() const { return first_child == kNoChildren; }
};

/// The four children of `cell`: the angle range is halved and the radial
/// range is cut at the density-aware split radius.
std::array<CellBounds, 4> split_cell(const CellBounds& cell,
                                     const QuadtreeConfig& config);

/// Polar region quadtree over the disk [0, 2pi) x [0, R] with per-subtree
/// point counts.
///
/// Points live at the leaves. A leaf splits into four children once it holds
/// more than `capacity` points; removal never merges cells. Node 0 is the
/// root. Concurrent readers are fine; insert and remove need exclusive access.
class Quadtree {
 public:
  explicit Quadtree(QuadtreeConfig config);

  /// Sequential insertion of every record.
  static Quadtree build(std::span<const PointRecord> points,
                        QuadtreeConfig config);

  /// Throws std::domain_error if `position` is outside the disk and
  /// std::invalid_argument if `id` is already present.
  void insert(const PolarPoint& position, NodeId id);

  /// Throws std::invalid_argument if `id` is not present and
  /// std::logic_error if it is not found in the leaf `position` maps to.
  void remove(const PolarPoint& position, NodeId id);

  bool contains(NodeId id) const { return ids_.contains(id); }
  std::size_t size() const { return nodes_.front().subtree_size; }

  const QuadtreeConfig& config() const { return config_; }
  Geometry geometry() const { return config_.geometry; }

  std::span<const QuadNode> nodes() const { return nodes_; }
  const QuadNode& node(std::uint32_t index) const { return nodes_[index]; }
  const QuadNode& root() const { return nodes_.front(); }

  /// Maximum leaf depth; 0 for a single-leaf tree.
  int height() const;

  /// Index of the leaf whose cell contains `position`.
  std::uint32_t leaf_for(const PolarPoint& position) const;

  /// All stored points in canonical (depth-first, child-order) sequence.
  std::vector<PointRecord> points() const;

  /// Fault injection for validation runs: widens the reported gap between
  /// inner and outer children by raising every outer child's min_r halfway
  /// to its max_r, without moving any point. Distance bounds of the affected
  /// cells stop being sound.
  void corrupt_split_bounds_for_testing();

 private:
  std::uint32_t child_for(const QuadNode& parent,
                          const PolarPoint& position) const;
  void split(std::uint32_t leaf);
  void check_in_disk(const PolarPoint& position) const;

  QuadtreeConfig config_;
  std::vector<QuadNode> nodes_;
  std::unordered_set<NodeId> ids_;
};

}  // namespace hyperdisk

#endif  // HYPERDISK_QUADTREE_HPP_
