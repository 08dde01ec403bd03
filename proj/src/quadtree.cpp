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

#include "hyperdisk/quadtree.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

namespace hyperdisk {

void QuadtreeConfig::validate() const {
  if (capacity < 1) {
    throw std::invalid_argument("quadtree capacity must be >= 1");
  }
  if (!(balance > 0.0 && balance < 1.0)) {
    throw std::invalid_argument("balance must lie in (0, 1)");
  }
  if (max_depth < 0) {
    throw std::invalid_argument("max_depth must be >= 0");
  }
}

std::array<CellBounds, 4> split_cell(const CellBounds& cell,
                                     const QuadtreeConfig& config) {
  const double mid_phi = 0.5 * (cell.min_phi + cell.max_phi);
  const double mid_r =
      config.density.split_radius(cell.min_r, cell.max_r, config.balance);
  return {
      CellBounds{cell.min_phi, mid_phi, cell.min_r, mid_r},
      CellBounds{mid_phi, cell.max_phi, cell.min_r, mid_r},
      CellBounds{cell.min_phi, mid_phi, mid_r, cell.max_r},
      CellBounds{mid_phi, cell.max_phi, mid_r, cell.max_r},
  };
}

Quadtree::Quadtree(QuadtreeConfig config) : config_(std::move(config)) {
  config_.validate();
  QuadNode root;
  root.bounds = CellBounds{0.0, kTwoPi, 0.0, config_.radius()};
  nodes_.push_back(std::move(root));
}

Quadtree Quadtree::build(std::span<const PointRecord> points,
                         QuadtreeConfig config) {
  Quadtree tree(std::move(config));
  tree.ids_.reserve(points.size());
  for (const auto& p : points) {
    tree.insert(p.position, p.id);
  }
  return tree;
}

void Quadtree::check_in_disk(const PolarPoint& position) const {
  if (!(position.phi >= 0.0 && position.phi < kTwoPi && position.r >= 0.0 &&
        position.r <= config_.radius())) {
    throw std::domain_error("point (" + std::to_string(position.phi) + ", " +
                            std::to_string(position.r) +
                            ") lies outside the disk");
  }
}

std::uint32_t Quadtree::child_for(const QuadNode& parent,
                                  const PolarPoint& position) const {
  const CellBounds& inner_left = nodes_[parent.first_child].bounds;
  std::uint32_t offset = 0;
  if (position.phi >= inner_left.max_phi) {
    offset += 1;
  }
  if (position.r >= inner_left.max_r) {
    offset += 2;
  }
  return parent.first_child + offset;
}

std::uint32_t Quadtree::leaf_for(const PolarPoint& position) const {
  std::uint32_t index = 0;
  while (!nodes_[index].is_leaf()) {
    index = child_for(nodes_[index], position);
  }
  return index;
}

void Quadtree::insert(const PolarPoint& position, NodeId id) {
  check_in_disk(position);
  if (!ids_.insert(id).second) {
    throw std::invalid_argument("duplicate node id " + std::to_string(id));
  }
  std::uint32_t index = 0;
  for (;;) {
    QuadNode& node = nodes_[index];
    ++node.subtree_size;
    if (node.is_leaf()) {
      break;
    }
    index = child_for(node, position);
  }
  nodes_[index].points.push_back(StoredPoint{PreparedPoint(position), id});
  if (nodes_[index].points.size() > config_.capacity &&
      nodes_[index].depth < config_.max_depth) {
    split(index);
  }
}

void Quadtree::split(std::uint32_t leaf) {
  const auto children = split_cell(nodes_[leaf].bounds, config_);
  const auto first = static_cast<std::uint32_t>(nodes_.size());
  const int depth = nodes_[leaf].depth + 1;
  for (const auto& bounds : children) {
    QuadNode child;
    child.bounds = bounds;
    child.depth = depth;
    nodes_.push_back(std::move(child));
  }
  // nodes_ may have reallocated; take references only now.
  QuadNode& parent = nodes_[leaf];
  parent.first_child = first;
  std::vector<StoredPoint> points = std::move(parent.points);
  parent.points = {};
  for (const auto& p : points) {
    QuadNode& child = nodes_[child_for(nodes_[leaf], p.position())];
    child.points.push_back(p);
    ++child.subtree_size;
  }
  for (std::uint32_t c = first; c < first + 4; ++c) {
    if (nodes_[c].points.size() > config_.capacity &&
        nodes_[c].depth < config_.max_depth) {
      split(c);
    }
  }
}

void Quadtree::remove(const PolarPoint& position, NodeId id) {
  if (!ids_.contains(id)) {
    throw std::invalid_argument("node id " + std::to_string(id) +
                                " is not in the tree");
  }
  const std::uint32_t leaf = leaf_for(position);
  auto& points = nodes_[leaf].points;
  const auto it =
      std::find_if(points.begin(), points.end(),
                   [id](const StoredPoint& p) { return p.id == id; });
  if (it == points.end()) {
    throw std::logic_error("node id " + std::to_string(id) +
                           " not found in the leaf containing its position");
  }
  *it = points.back();
  points.pop_back();
  ids_.erase(id);
  std::uint32_t index = 0;
  for (;;) {
    QuadNode& node = nodes_[index];
    --node.subtree_size;
    if (node.is_leaf()) {
      break;
    }
    index = child_for(node, position);
  }
}

int Quadtree::height() const {
  int height = 0;
  for (const auto& node : nodes_) {
    if (node.is_leaf()) {
      height = std::max(height, node.depth);
    }
  }
  return height;
}

std::vector<PointRecord> Quadtree::points() const {
  std::vector<PointRecord> out;
  out.reserve(size());
  std::vector<std::uint32_t> stack{0};
  while (!stack.empty()) {
    const QuadNode& node = nodes_[stack.back()];
    stack.pop_back();
    if (node.is_leaf()) {
      for (const auto& p : node.points) {
        out.push_back(PointRecord{p.position(), p.id});
      }
    } else {
      for (std::uint32_t c = 4; c-- > 0;) {
        stack.push_back(node.first_child + c);
      }
    }
  }
  return out;
}

void Quadtree::corrupt_split_bounds_for_testing() {
  for (auto& node : nodes_) {
    if (node.is_leaf()) {
      continue;
    }
    for (std::uint32_t c = 2; c < 4; ++c) {
      CellBounds& outer = nodes_[node.first_child + c].bounds;
      outer.min_r = 0.5 * (outer.min_r + outer.max_r);
    }
  }
}

}  // namespace hyperdisk
