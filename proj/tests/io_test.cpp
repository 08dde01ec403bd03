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

#include "hyperdisk/io.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

namespace hyperdisk {
namespace {

TEST(FormatDouble, RoundTripsExactly) {
  for (const double x : {0.0, 1.0 / 3.0, 6.283185307179586, 1e-300, 26.7258872,
                         std::nextafter(1.0, 2.0)}) {
    EXPECT_EQ(std::stod(format_double(x)), x);
  }
  EXPECT_EQ(format_double(0.5), "0.5");
}

TEST(Coordinates, RoundTrip) {
  const std::vector<PolarPoint> pts = {{0.0, 0.0},
                                       {1.0 / 3.0, 7.123456789012345},
                                       {std::nextafter(kTwoPi, 0.0), 12.5}};
  const CoordinateHeader header{3, 12.5, 0.75, Geometry::hyperbolic};
  std::stringstream ss;
  write_coordinates(ss, header, pts);
  const std::string text = ss.str();
  EXPECT_EQ(text.substr(0, text.find('\n')),
            "% hyperdisk coords v1 n=3 R=12.5 alpha=0.75 mode=h");
  EXPECT_NE(text.find("\n1\t0.33333333333333331\t7.1234567890123452\n"),
            std::string::npos);
  const auto back = read_coordinates(ss);
  EXPECT_EQ(back.header.n, 3u);
  EXPECT_EQ(back.header.radius, 12.5);
  EXPECT_EQ(back.header.alpha, 0.75);
  EXPECT_EQ(back.header.mode, Geometry::hyperbolic);
  EXPECT_EQ(back.points, pts);
}

TEST(Coordinates, EuclideanModeAndCrlf) {
  std::istringstream in(
      "% hyperdisk coords v1 n=1 R=2 alpha=1 mode=e\r\n0\t1.5\t0.25\r\n");
  const auto f = read_coordinates(in);
  EXPECT_EQ(f.header.mode, Geometry::euclidean);
  EXPECT_EQ(f.points, (std::vector<PolarPoint>{{1.5, 0.25}}));
}

TEST(Coordinates, RejectsMalformedInput) {
  const char* bad[] = {
      "",
      "% hyperdisk edges v1 n=1 R=2 alpha=1 mode=h\n0\t1\t1\n",
      "% hyperdisk coords v1 n=2 R=2 alpha=1 mode=h\n0\t1\t1\n",
      "% hyperdisk coords v1 n=1 R=2 alpha=1 mode=h\n1\t1\t1\n",
      "% hyperdisk coords v1 n=1 R=2 alpha=1 mode=x\n0\t1\t1\n",
      "% hyperdisk coords v1 n=1 R=2 mode=h\n0\t1\t1\n",
      "% hyperdisk coords v1 n=1 R=2 alpha=1 mode=h\n0\tone\t1\n",
      "% hyperdisk coords v1 n=1 R=2 alpha=1 mode=h\n0\t1\n",
  };
  for (const char* text : bad) {
    std::istringstream in(text);
    EXPECT_THROW(read_coordinates(in), FormatError) << text;
  }
}

TEST(Edges, RoundTripWithComments) {
  const std::vector<Edge> edges = {{0, 1}, {0, 5}, {3, 4}};
  const std::vector<std::string> comments = {"hyperdisk edges v1 n=6 m=3"};
  std::stringstream ss;
  write_edges(ss, edges, comments);
  EXPECT_EQ(ss.str(), "% hyperdisk edges v1 n=6 m=3\n0\t1\n0\t5\n3\t4\n");
  EXPECT_EQ(read_edges(ss), edges);
}

TEST(Edges, RejectsBadPairs) {
  for (const char* text :
       {"1\t0\n", "2\t2\n", "0 1\n", "0\t1\t2\n", "a\tb\n"}) {
    std::istringstream in(text);
    EXPECT_THROW(read_edges(in), FormatError) << text;
  }
}

TEST(Deltas, RoundTripAndLayout) {
  GraphDelta d;
  d.step = 7;
  d.node = 2;
  d.position = {0.25, 3.5};
  d.edges_removed = {{1, 2}};
  d.edges_added = {{2, 4}, {2, 9}};
  GraphDelta quiet;
  quiet.step = 8;
  quiet.node = 4;
  quiet.position = {1.0, 1.0};
  std::stringstream ss;
  write_delta(ss, d);
  write_delta(ss, quiet);
  EXPECT_EQ(ss.str(),
            "7\tM\t2\t0.25\t3.5\n7\t-\t1\t2\n7\t+\t2\t4\n7\t+\t2\t9\n"
            "8\tM\t4\t1\t1\n");
  const auto back = read_deltas(ss);
  ASSERT_EQ(back.size(), 2u);
  EXPECT_EQ(back[0].step, 7u);
  EXPECT_EQ(back[0].node, 2u);
  EXPECT_EQ(back[0].position, d.position);
  EXPECT_EQ(back[0].edges_removed, d.edges_removed);
  EXPECT_EQ(back[0].edges_added, d.edges_added);
  EXPECT_TRUE(back[1].edges_added.empty());
}

TEST(Deltas, RejectsOrphanAndForeignEdges) {
  for (const char* text :
       {"0\t+\t1\t2\n", "0\tM\t3\t1\t1\n0\t+\t1\t2\n", "0\tX\t1\t2\n",
        "0\tM\t3\t1\n", "0\tM\t3\t1\t1\n1\t+\t3\t4\n"}) {
    std::istringstream in(text);
    EXPECT_THROW(read_deltas(in), FormatError) << text;
  }
}

TEST(AssembleGraph, ValidatesEdges) {
  const std::vector<PolarPoint> pts(3);
  const std::vector<Edge> ok = {{0, 1}, {1, 2}};
  EXPECT_EQ(assemble_graph(pts, ok).edge_count(), 2u);
  const std::vector<Edge> out_of_range = {{0, 3}};
  EXPECT_THROW(assemble_graph(pts, out_of_range), FormatError);
  const std::vector<Edge> duplicate = {{0, 1}, {0, 1}};
  EXPECT_THROW(assemble_graph(pts, duplicate), FormatError);
}

TEST(Replay, AppliesInOrder) {
  GraphState g(std::vector<PolarPoint>(3));
  g.add_edge(0, 1);
  GraphDelta d;
  d.node = 2;
  d.position = {1.0, 2.0};
  d.edges_added = {{0, 2}};
  const std::vector<GraphDelta> deltas = {d};
  const GraphState after = replay(g, deltas);
  EXPECT_EQ(after.edges(), (std::vector<Edge>{{0, 1}, {0, 2}}));
  EXPECT_EQ(g.edge_count(), 1u);  // input untouched
}

}  // namespace
}  // namespace hyperdisk
