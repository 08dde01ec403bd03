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

#ifndef HYPERDISK_IO_HPP_
#define HYPERDISK_IO_HPP_

#include <cstddef>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "hyperdisk/dynamics.hpp"
#include "hyperdisk/geometry.hpp"
#include "hyperdisk/graph.hpp"

namespace hyperdisk {

/// Thrown by the readers below; the message carries the offending line.
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Shortest text that parses back to the same double: "%.17g".
std::string format_double(double value);

struct CoordinateHeader {
  std::size_t n = 0;
  double radius = 0.0;
  double alpha = 0.0;
  Geometry mode = Geometry::hyperbolic;
};

struct CoordinateFile {
  CoordinateHeader header;
  std::vector<PolarPoint> points;
};

// Coordinate file:
//   % hyperdisk coords v1 n=<n> R=<R> alpha=<a> mode=<h|e>
//   <id>\t<phi>\t<r>
// with ids 0..n-1 in order.
void write_coordinates(std::ostream& out, const CoordinateHeader& header,
                       std::span<const PolarPoint> points);
CoordinateFile read_coordinates(std::istream& in);

// Edge list: any number of '%' comment lines, then "<u>\t<v>" with u < v.
void write_edges(std::ostream& out, std::span<const Edge> edges,
                 std::span<const std::string> comments = {});
std::vector<Edge> read_edges(std::istream& in);

// Delta stream. Each moved node produces
//   <step>\tM\t<id>\t<phi>\t<r>
// followed by its edge changes "<step>\t-\t<u>\t<v>" (removals first) and
// "<step>\t+\t<u>\t<v>".
void write_delta(std::ostream& out, const GraphDelta& delta);
std::vector<GraphDelta> read_deltas(std::istream& in);

/// Applies every delta in order to a copy of `initial`.
GraphState replay(GraphState initial, std::span<const GraphDelta> deltas);

/// Builds a graph from coordinates plus an edge list; throws FormatError on
/// ids out of range, self-loops or duplicates.
GraphState assemble_graph(std::vector<PolarPoint> coordinates,
                          std::span<const Edge> edges);

}  // namespace hyperdisk

#endif  // HYPERDISK_IO_HPP_
