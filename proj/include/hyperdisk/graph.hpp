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

#ifndef HYPERDISK_GRAPH_HPP_
#define HYPERDISK_GRAPH_HPP_

#include <compare>
#include <cstddef>
#include <span>
#include <vector>

#include "hyperdisk/geometry.hpp"
#include "hyperdisk/quadtree.hpp"

namespace hyperdisk {

/// Unordered vertex pair, stored with u < v.
struct Edge {
  NodeId u = 0;
  NodeId v = 0;

  static Edge make(NodeId a, NodeId b) {
    return a < b ? Edge{a, b} : Edge{b, a};
  }

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Node coordinates plus a simple undirected adjacency without self-loops or
/// parallel edges. Node ids are 0..n-1.
class GraphState {
 public:
  GraphState() = default;
  explicit GraphState(std::vector<PolarPoint> coordinates);

  std::size_t node_count() const { return coordinates_.size(); }
  std::size_t edge_count() const { return edge_count_; }

  const PolarPoint& position(NodeId u) const { return coordinates_[u]; }
  void set_position(NodeId u, const PolarPoint& p) { coordinates_[u] = p; }
  std::span<const PolarPoint> coordinates() const { return coordinates_; }

  std::span<const NodeId> neighbors(NodeId u) const { return adjacency_[u]; }
  std::size_t degree(NodeId u) const { return adjacency_[u].size(); }

  bool has_edge(NodeId u, NodeId v) const;

  /// Returns false if the edge already exists. Throws on self-loops and
  /// out-of-range ids.
  bool add_edge(NodeId u, NodeId v);

  /// Returns false if the edge was absent.
  bool remove_edge(NodeId u, NodeId v);

  /// Removes every edge at u and returns the former neighbors.
  std::vector<NodeId> remove_incident_edges(NodeId u);

  /// All edges, sorted.
  std::vector<Edge> edges() const;

  friend bool operator==(const GraphState& a, const GraphState& b);

 private:
  void check_id(NodeId u) const;

  std::vector<PolarPoint> coordinates_;
  std::vector<std::vector<NodeId>> adjacency_;
  std::size_t edge_count_ = 0;
};

}  // namespace hyperdisk

#endif  // HYPERDISK_GRAPH_HPP_
