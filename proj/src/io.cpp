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

#include <charconv>
#include <cstdio>
#include <istream>
#include <ostream>
#include <string_view>
#include <system_error>

namespace hyperdisk {

namespace {

constexpr std::string_view kCoordsMagic = "% hyperdisk coords v1";

[[noreturn]] void fail(std::size_t line_no, const std::string& what) {
  throw FormatError("line " + std::to_string(line_no) + ": " + what);
}

std::vector<std::string_view> split(std::string_view line, char sep) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = line.find(sep, start);
    fields.push_back(line.substr(start, pos - start));
    if (pos == std::string_view::npos) {
      return fields;
    }
    start = pos + 1;
  }
}

template <typename T>
T parse_number(std::string_view text, std::size_t line_no) {
  T value{};
  const char* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end || text.empty()) {
    fail(line_no, "bad number '" + std::string(text) + "'");
  }
  return value;
}

NodeId parse_id(std::string_view text, std::size_t line_no) {
  return parse_number<NodeId>(text, line_no);
}

// Strips a trailing '\r' so files edited on Windows still parse.
std::string_view trim_line(const std::string& line) {
  std::string_view view = line;
  if (!view.empty() && view.back() == '\r') {
    view.remove_suffix(1);
  }
  return view;
}

Edge parse_edge(std::string_view u, std::string_view v, std::size_t line_no) {
  const NodeId a = parse_id(u, line_no);
  const NodeId b = parse_id(v, line_no);
  if (a >= b) {
    fail(line_no, "edge endpoints must satisfy u < v");
  }
  return Edge{a, b};
}

void write_edge_line(std::ostream& out, std::uint64_t step, char op,
                     const Edge& e) {
  out << step << '\t' << op << '\t' << e.u << '\t' << e.v << '\n';
}

}  // namespace

std::string format_double(double value) {
  char buf[32];
  const int len = std::snprintf(buf, sizeof buf, "%.17g", value);
  return std::string(buf, static_cast<std::size_t>(len));
}

void write_coordinates(std::ostream& out, const CoordinateHeader& header,
                       std::span<const PolarPoint> points) {
  out << kCoordsMagic << " n=" << header.n
      << " R=" << format_double(header.radius)
      << " alpha=" << format_double(header.alpha)
      << " mode=" << (header.mode == Geometry::hyperbolic ? 'h' : 'e') << '\n';
  for (std::size_t id = 0; id < points.size(); ++id) {
    out << id << '\t' << format_double(points[id].phi) << '\t'
        << format_double(points[id].r) << '\n';
  }
}

CoordinateFile read_coordinates(std::istream& in) {
  CoordinateFile file;
  std::string raw;
  std::size_t line_no = 1;
  if (!std::getline(in, raw)) {
    fail(line_no, "missing coordinate header");
  }
  std::string_view header = trim_line(raw);
  if (!header.starts_with(kCoordsMagic)) {
    fail(line_no, "not a hyperdisk coordinate file");
  }
  header.remove_prefix(kCoordsMagic.size());
  bool seen_n = false;
  bool seen_r = false;
  bool seen_alpha = false;
  bool seen_mode = false;
  for (std::string_view token : split(header, ' ')) {
    if (token.empty()) {
      continue;
    }
    const std::size_t eq = token.find('=');
    if (eq == std::string_view::npos) {
      fail(line_no, "malformed header field '" + std::string(token) + "'");
    }
    const std::string_view key = token.substr(0, eq);
    const std::string_view value = token.substr(eq + 1);
    if (key == "n") {
      file.header.n = parse_number<std::size_t>(value, line_no);
      seen_n = true;
    } else if (key == "R") {
      file.header.radius = parse_number<double>(value, line_no);
      seen_r = true;
    } else if (key == "alpha") {
      file.header.alpha = parse_number<double>(value, line_no);
      seen_alpha = true;
    } else if (key == "mode") {
      if (value == "h") {
        file.header.mode = Geometry::hyperbolic;
      } else if (value == "e") {
        file.header.mode = Geometry::euclidean;
      } else {
        fail(line_no, "mode must be h or e");
      }
      seen_mode = true;
    }
  }
  if (!(seen_n && seen_r && seen_alpha && seen_mode)) {
    fail(line_no, "header needs n, R, alpha and mode");
  }
  file.points.reserve(file.header.n);
  while (std::getline(in, raw)) {
    ++line_no;
    const std::string_view line = trim_line(raw);
    if (line.empty()) {
      continue;
    }
    const auto fields = split(line, '\t');
    if (fields.size() != 3) {
      fail(line_no, "expected <id> <phi> <r>");
    }
    if (parse_number<std::size_t>(fields[0], line_no) != file.points.size()) {
      fail(line_no, "ids must be consecutive from 0");
    }
    file.points.push_back(PolarPoint{parse_number<double>(fields[1], line_no),
                                     parse_number<double>(fields[2], line_no)});
  }
  if (file.points.size() != file.header.n) {
    fail(line_no, "header announces " + std::to_string(file.header.n) +
                      " points, found " + std::to_string(file.points.size()));
  }
  return file;
}

void write_edges(std::ostream& out, std::span<const Edge> edges,
                 std::span<const std::string> comments) {
  for (const std::string& comment : comments) {
    out << "% " << comment << '\n';
  }
  for (const Edge& e : edges) {
    out << e.u << '\t' << e.v << '\n';
  }
}

std::vector<Edge> read_edges(std::istream& in) {
  std::vector<Edge> edges;
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const std::string_view line = trim_line(raw);
    if (line.empty() || line.front() == '%') {
      continue;
    }
    const auto fields = split(line, '\t');
    if (fields.size() != 2) {
      fail(line_no, "expected <u> <v>");
    }
    edges.push_back(parse_edge(fields[0], fields[1], line_no));
  }
  return edges;
}

void write_delta(std::ostream& out, const GraphDelta& delta) {
  out << delta.step << "\tM\t" << delta.node << '\t'
      << format_double(delta.position.phi) << '\t'
      << format_double(delta.position.r) << '\n';
  for (const Edge& e : delta.edges_removed) {
    write_edge_line(out, delta.step, '-', e);
  }
  for (const Edge& e : delta.edges_added) {
    write_edge_line(out, delta.step, '+', e);
  }
}

std::vector<GraphDelta> read_deltas(std::istream& in) {
  std::vector<GraphDelta> deltas;
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const std::string_view line = trim_line(raw);
    if (line.empty() || line.front() == '%') {
      continue;
    }
    const auto fields = split(line, '\t');
    if (fields.size() < 2) {
      fail(line_no, "truncated record");
    }
    const auto step = parse_number<std::uint64_t>(fields[0], line_no);
    const std::string_view op = fields[1];
    if (op == "M") {
      if (fields.size() != 5) {
        fail(line_no, "expected <step> M <id> <phi> <r>");
      }
      GraphDelta delta;
      delta.step = step;
      delta.node = parse_id(fields[2], line_no);
      delta.position = PolarPoint{parse_number<double>(fields[3], line_no),
                                  parse_number<double>(fields[4], line_no)};
      deltas.push_back(std::move(delta));
      continue;
    }
    if (op != "+" && op != "-") {
      fail(line_no, "unknown op '" + std::string(op) + "'");
    }
    if (fields.size() != 4) {
      fail(line_no, "expected <step> <op> <u> <v>");
    }
    if (deltas.empty() || deltas.back().step != step) {
      fail(line_no, "edge record without a preceding move record");
    }
    const Edge e = parse_edge(fields[2], fields[3], line_no);
    if (e.u != deltas.back().node && e.v != deltas.back().node) {
      fail(line_no, "edge does not touch the moved node");
    }
    (op == "+" ? deltas.back().edges_added : deltas.back().edges_removed)
        .push_back(e);
  }
  return deltas;
}

GraphState replay(GraphState initial, std::span<const GraphDelta> deltas) {
  for (const GraphDelta& delta : deltas) {
    apply_delta(initial, delta);
  }
  return initial;
}

GraphState assemble_graph(std::vector<PolarPoint> coordinates,
                          std::span<const Edge> edges) {
  GraphState graph(std::move(coordinates));
  for (const Edge& e : edges) {
    if (e.v >= graph.node_count()) {
      throw FormatError("edge " + std::to_string(e.u) + "-" +
                        std::to_string(e.v) + " references a missing node");
    }
    if (!graph.add_edge(e.u, e.v)) {
      throw FormatError("duplicate edge " + std::to_string(e.u) + "-" +
                        std::to_string(e.v));
    }
  }
  return graph;
}

}  // namespace hyperdisk
