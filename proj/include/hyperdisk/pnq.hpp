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

#ifndef HYPERDISK_PNQ_HPP_
#define HYPERDISK_PNQ_HPP_

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "hyperdisk/kernel.hpp"
#include "hyperdisk/quadtree.hpp"
#include "hyperdisk/random.hpp"

namespace hyperdisk {

struct QueryStats {
  std::uint64_t candidates_examined = 0;
  std::uint64_t cells_examined = 0;
  std::uint64_t result_size = 0;

  QueryStats& operator+=(const QueryStats& other) {
    candidates_examined += other.candidates_examined;
    cells_examined += other.cells_examined;
    result_size += other.result_size;
    return *this;
  }
};

struct QueryResult {
  std::vector<NodeId> ids;
  QueryStats stats;
};

/// Number of elements skipped before the next candidate when each element is
/// a candidate independently with probability `b_bar`:
/// floor(ln(1 - u) / ln(1 - b_bar)), so Pr(gap = i) = (1 - b_bar)^i b_bar.
/// Returns nullopt for an infinite gap (b_bar == 0, or a gap beyond 2^63).
std::optional<std::uint64_t> sample_gap(double b_bar, double u);

inline std::optional<std::uint64_t> sample_gap(double b_bar, RngStream& rng) {
  if (b_bar >= 1.0) {
    return 0;
  }
  return sample_gap(b_bar, rng.uniform());
}

/// A subtree is sampled as one virtual leaf when it holds less than one
/// expected candidate.
inline bool should_aggregate(std::uint64_t subtree_size, double b_bar) {
  return static_cast<double>(subtree_size) * b_bar < 1.0;
}

/// Optional per-node visit counter, indexed like Quadtree::nodes().
using VisitCounts = std::span<std::uint64_t>;

namespace detail {

// Distance bounds are computed in floating point; shaving a few ulps off the
// infimum keeps b_bar an upper bound for every point in the cell.
inline double probability_bound(const Quadtree& tree, const QuadNode& node,
                                const PolarPoint& q, const auto& kernel) {
  const double infimum =
      cell_distance_bounds(tree.geometry(), node.bounds, q).infimum;
  return kernel(std::max(0.0, infimum - 1e-10 * (1.0 + infimum)));
}

inline bool accept(double probability, double b_bar, RngStream& rng) {
  const double ratio = probability / b_bar;
  return ratio >= 1.0 || rng.uniform() < ratio;
}

inline void count_visit(VisitCounts visits, std::uint32_t index) {
  if (!visits.empty()) {
    ++visits[index];
  }
}

}  // namespace detail

/// Descends the subtree rooted at `subtree` to its k-th point in canonical
/// order and returns it with probability f(dist(q, p_k)) / b_bar.
template <DistanceKernel Kernel>
std::optional<NodeId> maybe_get_kth_element(
    const Quadtree& tree, std::uint32_t subtree, const PolarPoint& q,
    const Kernel& kernel, std::uint64_t k, double b_bar, RngStream& rng,
    QueryStats* stats = nullptr, VisitCounts visits = {}) {
  return maybe_get_kth_element(tree, subtree, PreparedPoint(q), kernel, k,
                               b_bar, rng, stats, visits);
}

template <DistanceKernel Kernel>
std::optional<NodeId> maybe_get_kth_element(
    const Quadtree& tree, std::uint32_t subtree, const PreparedPoint& q,
    const Kernel& kernel, std::uint64_t k, double b_bar, RngStream& rng,
    QueryStats* stats = nullptr, VisitCounts visits = {}) {
  std::uint32_t index = subtree;
  if (k >= tree.node(index).subtree_size) {
    return std::nullopt;
  }
  for (;;) {
    const QuadNode& node = tree.node(index);
    if (node.is_leaf()) {
      if (k >= node.points.size()) {
        throw std::logic_error("subtree sizes disagree with leaf contents");
      }
      const StoredPoint& p = node.points[k];
      const double f = kernel(distance(tree.geometry(), q, p.coords));
      if (detail::accept(f, b_bar, rng)) {
        return p.id;
      }
      return std::nullopt;
    }
    std::uint64_t offset = 0;
    std::uint32_t next = kNoChildren;
    for (std::uint32_t c = 0; c < 4; ++c) {
      const std::uint64_t size = tree.node(node.first_child + c).subtree_size;
      if (k - offset < size) {
        next = node.first_child + c;
        break;
      }
      offset += size;
    }
    if (next == kNoChildren) {
      throw std::logic_error("subtree size exceeds the sum of its children");
    }
    k -= offset;
    index = next;
    if (stats != nullptr) {
      ++stats->cells_examined;
    }
    detail::count_visit(visits, index);
  }
}

namespace detail {

// Gap-samples indices [0, size) with bound b_bar and hands each candidate
// index to `take`.
template <typename Take>
void sample_candidates(std::uint64_t size, double b_bar, RngStream& rng,
                       QueryStats& stats, Take&& take) {
  std::uint64_t i = 0;
  while (i < size) {
    const auto gap = sample_gap(b_bar, rng);
    if (!gap || *gap >= size - i) {
      break;
    }
    i += *gap;
    ++stats.candidates_examined;
    take(i);
    ++i;
  }
}

template <DistanceKernel Kernel>
void baseline_visit(const Quadtree& tree, std::uint32_t index,
                    const PreparedPoint& q, const Kernel& kernel,
                    RngStream& rng, QueryResult& out) {
  const QuadNode& node = tree.node(index);
  ++out.stats.cells_examined;
  if (!node.is_leaf()) {
    for (std::uint32_t c = 0; c < 4; ++c) {
      baseline_visit(tree, node.first_child + c, q, kernel, rng, out);
    }
    return;
  }
  if (node.points.empty()) {
    return;
  }
  const double b_bar = probability_bound(tree, node, q.point, kernel);
  if (!(b_bar > 0.0)) {
    return;
  }
  sample_candidates(
      node.points.size(), b_bar, rng, out.stats, [&](std::uint64_t i) {
        const StoredPoint& p = node.points[i];
        const double f = kernel(distance(tree.geometry(), q, p.coords));
        if (accept(f, b_bar, rng)) {
          out.ids.push_back(p.id);
        }
      });
}

template <DistanceKernel Kernel>
void aggregated_visit(const Quadtree& tree, std::uint32_t index,
                      const PreparedPoint& q, const Kernel& kernel,
                      RngStream& rng, QueryResult& out, VisitCounts visits) {
  const QuadNode& node = tree.node(index);
  ++out.stats.cells_examined;
  count_visit(visits, index);
  if (node.subtree_size == 0) {
    return;
  }
  const double b_bar = probability_bound(tree, node, q.point, kernel);
  if (!(b_bar > 0.0)) {
    return;
  }
  if (!node.is_leaf() && !should_aggregate(node.subtree_size, b_bar)) {
    for (std::uint32_t c = 0; c < 4; ++c) {
      aggregated_visit(tree, node.first_child + c, q, kernel, rng, out, visits);
    }
    return;
  }
  sample_candidates(
      node.subtree_size, b_bar, rng, out.stats, [&](std::uint64_t k) {
        if (auto id = maybe_get_kth_element(tree, index, q, kernel, k, b_bar,
                                            rng, &out.stats, visits)) {
          out.ids.push_back(*id);
        }
      });
}

}  // namespace detail

/// Linear-time probabilistic neighborhood query: visits every cell and
/// gap-samples candidates leaf by leaf. Each stored point p is returned
/// independently with probability f(dist(q, p)).
template <DistanceKernel Kernel>
QueryResult query_baseline(const Quadtree& tree, const PolarPoint& q,
                           const Kernel& kernel, RngStream& rng) {
  QueryResult out;
  detail::baseline_visit(tree, 0, PreparedPoint(q), kernel, rng, out);
  out.stats.result_size = out.ids.size();
  return out;
}

/// Probabilistic neighborhood query with subtree aggregation: any subtree
/// with |S| * b_bar < 1 is sampled as a single virtual leaf. Same output
/// distribution as query_baseline, O((|N| + sqrt n) log n) work whp.
template <DistanceKernel Kernel>
QueryResult query_aggregated(const Quadtree& tree, const PolarPoint& q,
                             const Kernel& kernel, RngStream& rng,
                             VisitCounts visits = {}) {
  QueryResult out;
  detail::aggregated_visit(tree, 0, PreparedPoint(q), kernel, rng, out, visits);
  out.stats.result_size = out.ids.size();
  return out;
}

}  // namespace hyperdisk

#endif  // HYPERDISK_PNQ_HPP_
