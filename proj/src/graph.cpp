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

#include "hyperdisk/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>

namespace hyperdisk {

namespace {

bool erase_one(std::vector<NodeId>& list, NodeId value) {
  const auto it = std::find(list.begin(), list.end(), value);
  if (it == list.end()) {
    return false;
  }
  *it = list.back();
  list.pop_back();
  return true;
}

}  // namespace

GraphState::GraphState(std::vector<PolarPoint> coordinates)
    : coordinates_(std::move(coordinates)), adjacency_(coordinates_.size()) {}

void GraphState::check_id(NodeId u) const {
  if (u >= coordinates_.size()) {
    throw std::out_of_range("node id " + std::to_string(u) + " out of range");
  }
}

bool GraphState::has_edge(NodeId u, NodeId v) const {
  check_id(u);
  check_id(v);
  // Scan the shorter list; hubs can have thousands of neighbors.
  const auto& a = adjacency_[u].size() <= adjacency_[v].size() ? adjacency_[u]
                                                               : adjacency_[v];
  const NodeId other = &a == &adjacency_[u] ? v : u;
  return std::find(a.begin(), a.end(), other) != a.end();
}

bool GraphState::add_edge(NodeId u, NodeId v) {
  if (u == v) {
    throw std::invalid_argument("self-loop at node " + std::to_string(u));
  }
  if (has_edge(u, v)) {
    return false;
  }
  adjacency_[u].push_back(v);
  adjacency_[v].push_back(u);
  ++edge_count_;
  return true;
}

bool GraphState::remove_edge(NodeId u, NodeId v) {
  check_id(u);
  check_id(v);
  if (!erase_one(adjacency_[u], v)) {
    return false;
  }
  erase_one(adjacency_[v], u);
  --edge_count_;
  return true;
}

std::vector<NodeId> GraphState::remove_incident_edges(NodeId u) {
  check_id(u);
  std::vector<NodeId> former = std::move(adjacency_[u]);
  adjacency_[u] = {};
  for (const NodeId v : former) {
    erase_one(adjacency_[v], u);
  }
  edge_count_ -= former.size();
  return former;
}

std::vector<Edge> GraphState::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (NodeId u = 0; u < adjacency_.size(); ++u) {
    for (const NodeId v : adjacency_[u]) {
      if (u < v) {
        out.push_back(Edge{u, v});
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool operator==(const GraphState& a, const GraphState& b) {
  if (a.node_count() != b.node_count() || a.edge_count() != b.edge_count()) {
    return false;
  }
  for (std::size_t i = 0; i < a.node_count(); ++i) {
    if (!(a.coordinates_[i] == b.coordinates_[i])) {
      return false;
    }
  }
  return a.edges() == b.edges();
}

}  // namespace hyperdisk
