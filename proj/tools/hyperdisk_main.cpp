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

// Command-line front end: generate, dynamic, bench, validate and query.
//
// Exit codes: 0 success, 1 invalid parameters, 2 unwritable or unreadable
// files, 3 failed validation checks.

#include <cmath>
#include <cstdio>
#include <exception>
#include <fstream>
#include <iostream>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "CLI11.hpp"
#include "hyperdisk/io.hpp"
#include "hyperdisk/kernel.hpp"
#include "hyperdisk/pnq.hpp"
#include "hyperdisk/rhg.hpp"
#include "hyperdisk/validation.hpp"
#include "hyperdisk/workload.hpp"

namespace {

using namespace hyperdisk;

constexpr int kExitInvalid = 1;
constexpr int kExitIo = 2;
constexpr int kExitFailed = 3;

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct GraphOptions {
  std::size_t n = 1000;
  double alpha = 0.75;
  double temperature = 0.1;
  std::optional<double> radius;
  double radius_const = -1.0;
  std::size_t capacity = 128;
  double balance = 0.5;
  std::uint64_t seed = 1;
  std::string mode = "h";
  std::optional<double> edge_radius;
  // Empty picks by temperature: threshold at T = 0, fermi otherwise.
  std::string kernel;

  RhgParams params() const {
    RhgParams p;
    p.n = n;
    p.alpha = alpha;
    p.temperature = kernel == "threshold" ? 0.0 : temperature;
    if (kernel == "fermi" && !(temperature > 0.0)) {
      throw std::invalid_argument("the fermi kernel needs --temp > 0");
    }
    p.radius = radius;
    p.radius_const = radius_const;
    p.capacity = capacity;
    p.balance = balance;
    p.seed = seed;
    p.geometry = parse_mode(mode);
    p.edge_radius = edge_radius;
    p.validate();
    return p;
  }

  static Geometry parse_mode(const std::string& text) {
    if (text == "h" || text == "hyperbolic") {
      return Geometry::hyperbolic;
    }
    if (text == "e" || text == "euclidean") {
      return Geometry::euclidean;
    }
    throw std::invalid_argument("--mode must be h or e");
  }
};

void add_graph_options(CLI::App& cmd, GraphOptions& o) {
  cmd.add_option("--n", o.n, "number of vertices")->capture_default_str();
  cmd.add_option("--alpha", o.alpha, "radial dispersion")
      ->capture_default_str();
  cmd.add_option("--temp", o.temperature, "temperature; 0 selects threshold")
      ->capture_default_str();
  cmd.add_option("--radius", o.radius,
                 "disk radius (overrides --radius-const)");
  cmd.add_option("--radius-const", o.radius_const, "C in R = 2 ln n + C")
      ->capture_default_str();
  cmd.add_option("--capacity", o.capacity, "quadtree leaf capacity")
      ->capture_default_str();
  cmd.add_option("--balance", o.balance, "inner-children mass share")
      ->capture_default_str();
  cmd.add_option("--seed", o.seed, "random seed")->capture_default_str();
  cmd.add_option("--mode", o.mode, "geometry: h (hyperbolic) or e (euclidean)")
      ->capture_default_str();
  cmd.add_option("--edge-radius", o.edge_radius,
                 "connection radius, required in euclidean mode");
  cmd.add_option("--kernel", o.kernel,
                 "edge kernel; defaults to threshold at T = 0, else fermi")
      ->check(CLI::IsMember({"fermi", "threshold"}));
}

std::ofstream open_output(const std::string& path) {
  std::ofstream out(path);
  if (!out) {
    throw IoError("cannot open '" + path + "' for writing");
  }
  return out;
}

std::ifstream open_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw IoError("cannot open '" + path + "' for reading");
  }
  return in;
}

void finish(std::ofstream& out, const std::string& path) {
  out.flush();
  if (!out) {
    throw IoError("write to '" + path + "' failed");
  }
}

void write_graph(const std::string& prefix, const GraphState& graph,
                 const RhgParams& params) {
  const std::string coords_path = prefix + ".coords";
  const std::string edges_path = prefix + ".edges";
  std::ofstream coords = open_output(coords_path);
  std::ofstream edges = open_output(edges_path);
  write_coordinates(
      coords,
      CoordinateHeader{graph.node_count(), params.resolved_radius(),
                       params.alpha, params.geometry},
      graph.coordinates());
  const std::vector<std::string> comments{
      "hyperdisk edges v1 n=" + std::to_string(graph.node_count()) +
          " m=" + std::to_string(graph.edge_count()),
      "alpha=" + format_double(params.alpha) +
          " T=" + format_double(params.temperature) +
          " R=" + format_double(params.resolved_radius()) +
          " seed=" + std::to_string(params.seed)};
  const auto edge_list = graph.edges();
  write_edges(edges, edge_list, comments);
  finish(coords, coords_path);
  finish(edges, edges_path);
}

int cmd_generate(const GraphOptions& o, const std::string& prefix) {
  const RhgParams params = o.params();
  const StaticGraph g = generate_static(params);
  write_graph(prefix, g.graph, params);
  std::cerr << "generated n=" << g.graph.node_count()
            << " m=" << g.graph.edge_count() << " mean_degree="
            << (g.graph.node_count() == 0
                    ? 0.0
                    : 2.0 * static_cast<double>(g.graph.edge_count()) /
                          static_cast<double>(g.graph.node_count()))
            << '\n';
  return 0;
}

struct DynamicOptions {
  std::size_t steps = 0;
  std::size_t moves_per_step = 1;
  double tau_phi = 0.01;
  double tau_r = 0.001;
  std::vector<NodeId> ids;
};

int cmd_dynamic(const GraphOptions& o, const DynamicOptions& d,
                const std::string& prefix) {
  DynamicConfig config;
  config.params = o.params();
  config.steps = d.steps;
  config.moves_per_step = d.moves_per_step;
  config.ids = d.ids;
  if (!(d.tau_phi >= 0.0) || !(d.tau_r >= 0.0) || d.tau_r > 1.0) {
    throw std::invalid_argument(
        "--tau-phi must be >= 0 and --tau-r must lie in [0, 1]");
  }
  const double ceiling =
      std::sinh(config.params.alpha * config.params.resolved_radius());
  config.tau_phi = StepRange{-d.tau_phi, d.tau_phi};
  config.tau_r = StepRange{0.0, d.tau_r * ceiling};

  // Open everything up front so a bad path fails before any work.
  const std::string delta_path = prefix + ".deltas";
  const std::string summary_path = prefix + ".summary.tsv";
  std::ofstream deltas = open_output(delta_path);
  std::ofstream summary = open_output(summary_path);
  deltas << "% hyperdisk deltas v1 steps=" << d.steps << '\n';

  const DynamicRun run = run_dynamic(
      config, [&](const GraphDelta& delta) { write_delta(deltas, delta); });
  finish(deltas, delta_path);
  write_graph(prefix, run.initial, config.params);
  write_graph(prefix + ".final", run.final_state, config.params);

  summary << "step\tms\tedges_added\tedges_removed\n";
  std::size_t next = 0;
  for (std::size_t step = 0; step < run.step_ms.size(); ++step) {
    std::size_t added = 0;
    std::size_t removed = 0;
    while (next < run.deltas.size() && run.deltas[next].step == step) {
      added += run.deltas[next].edges_added.size();
      removed += run.deltas[next].edges_removed.size();
      ++next;
    }
    summary << step << '\t' << format_double(run.step_ms[step]) << '\t' << added
            << '\t' << removed << '\n';
  }
  finish(summary, summary_path);
  std::cerr << "dynamic steps=" << d.steps << " records=" << run.deltas.size()
            << " final_m=" << run.final_state.edge_count() << '\n';
  return 0;
}

struct BenchOptions {
  std::vector<std::size_t> sizes{1u << 14};
  std::vector<double> balances{0.5};
  std::size_t iterations = 1000;
  double alpha = 0.75;
  double temperature = 0.1;
  double radius_const = -1.0;
  std::size_t capacity = 128;
  std::uint64_t seed = 1;
  std::string variant = "aggregated";
  std::string out = "-";
};

int cmd_bench(const BenchOptions& o) {
  BenchConfig config;
  config.sizes = o.sizes;
  config.balances = o.balances;
  config.iterations = o.iterations;
  config.alpha = o.alpha;
  config.temperature = o.temperature;
  config.radius_const = o.radius_const;
  config.capacity = o.capacity;
  config.seed = o.seed;
  config.variant = o.variant == "baseline" ? QueryVariant::baseline
                                           : QueryVariant::aggregated;
  std::ofstream file;
  if (o.out != "-") {
    file = open_output(o.out);
  }
  const auto rows = run_bench(config);
  write_bench_tsv(o.out == "-" ? std::cout : file, rows);
  if (o.out != "-") {
    finish(file, o.out);
  }
  return 0;
}

struct ValidateOptions {
  std::string suite = "quick";
  std::uint64_t seed = 1;
  bool inject_fault = false;
  std::vector<std::string> checks;
  std::string out = "-";
};

int cmd_validate(const ValidateOptions& o) {
  ValidationOptions options;
  options.suite = o.suite == "full" ? Suite::full : Suite::quick;
  options.seed = o.seed;
  options.inject_fault = o.inject_fault;
  options.only = o.checks;
  std::ofstream file;
  if (o.out != "-") {
    file = open_output(o.out);
  }
  std::ostream& out = o.out == "-" ? std::cout : file;
  write_validation_header(out);
  bool all = true;
  run_validation(options, [&](const CheckResult& r) {
    write_validation_row(out, r);
    out.flush();
    all = all && r.passed;
  });
  if (o.out != "-") {
    finish(file, o.out);
  }
  return all ? 0 : kExitFailed;
}

struct QueryOptions {
  std::string coords;
  double phi = 0.0;
  double r = 0.0;
  std::string kernel = "fermi";
  double temperature = 0.1;
  std::optional<double> radius;
  std::string variant = "aggregated";
  std::size_t capacity = 128;
  double balance = 0.5;
  std::uint64_t seed = 1;
  std::string out = "-";
};

int cmd_query(const QueryOptions& o) {
  std::ifstream in = open_input(o.coords);
  CoordinateFile file = [&] {
    try {
      return read_coordinates(in);
    } catch (const FormatError& e) {
      throw std::invalid_argument(o.coords + ": " + e.what());
    }
  }();
  QuadtreeConfig config;
  config.capacity = o.capacity;
  config.balance = o.balance;
  config.geometry = file.header.mode;
  config.density =
      file.header.mode == Geometry::hyperbolic
          ? RadialDensity::hyperbolic(file.header.alpha, file.header.radius)
          : RadialDensity::euclidean_uniform(file.header.radius);
  config.validate();
  std::vector<PointRecord> records(file.points.size());
  for (std::size_t i = 0; i < records.size(); ++i) {
    records[i] = PointRecord{file.points[i], static_cast<NodeId>(i)};
  }
  const Quadtree tree = Quadtree::build(records, config);
  const EdgeKernel kernel = make_named_kernel(
      o.kernel, o.radius.value_or(file.header.radius), o.temperature);
  const PolarPoint q{normalize_angle(o.phi), o.r};
  RngStream rng(o.seed);
  const QueryResult result = std::visit(
      [&](const auto& k) {
        return o.variant == "baseline" ? query_baseline(tree, q, k, rng)
                                       : query_aggregated(tree, q, k, rng);
      },
      kernel);
  std::ofstream out_file;
  if (o.out != "-") {
    out_file = open_output(o.out);
  }
  std::ostream& out = o.out == "-" ? std::cout : out_file;
  out << "% candidates=" << result.stats.candidates_examined
      << " cells=" << result.stats.cells_examined
      << " result=" << result.stats.result_size << '\n';
  for (const NodeId id : result.ids) {
    out << id << '\n';
  }
  if (o.out != "-") {
    finish(out_file, o.out);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Random hyperbolic graphs via probabilistic neighborhood queries"};
  app.require_subcommand(1);

  GraphOptions graph;
  std::string prefix = "hyperdisk";
  auto* generate = app.add_subcommand("generate", "sample a static graph");
  add_graph_options(*generate, graph);
  generate->add_option("--out", prefix, "output prefix (.coords, .edges)")
      ->capture_default_str();

  DynamicOptions dyn;
  auto* dynamic =
      app.add_subcommand("dynamic", "move nodes and stream edge deltas");
  add_graph_options(*dynamic, graph);
  dynamic
      ->add_option("--out", prefix,
                   "output prefix (.coords, .edges, .deltas, .final.*, "
                   ".summary.tsv)")
      ->capture_default_str();
  dynamic->add_option("--steps", dyn.steps, "movement steps")
      ->capture_default_str();
  dynamic
      ->add_option("--moves-per-step", dyn.moves_per_step,
                   "nodes moved per step")
      ->capture_default_str();
  dynamic
      ->add_option("--tau-phi", dyn.tau_phi, "angular steps drawn from [-x, x]")
      ->capture_default_str();
  dynamic
      ->add_option("--tau-r", dyn.tau_r,
                   "radial step magnitudes drawn from [0, x sinh(alpha R)]")
      ->capture_default_str();
  dynamic->add_option("--ids", dyn.ids, "nodes to move, cycled in order")
      ->delimiter(',');

  BenchOptions bench;
  auto* bench_cmd = app.add_subcommand("bench", "time neighborhood queries");
  bench_cmd->add_option("--n", bench.sizes, "vertex counts")
      ->delimiter(',')
      ->capture_default_str();
  bench_cmd->add_option("--balance", bench.balances, "balance values")
      ->delimiter(',')
      ->capture_default_str();
  bench_cmd
      ->add_option("--steps,--iterations", bench.iterations, "queries per row")
      ->capture_default_str();
  bench_cmd->add_option("--alpha", bench.alpha)->capture_default_str();
  bench_cmd->add_option("--temp", bench.temperature)->capture_default_str();
  bench_cmd->add_option("--radius-const", bench.radius_const)
      ->capture_default_str();
  bench_cmd->add_option("--capacity", bench.capacity)->capture_default_str();
  bench_cmd->add_option("--seed", bench.seed)->capture_default_str();
  bench_cmd->add_option("--variant", bench.variant)
      ->check(CLI::IsMember({"aggregated", "baseline"}))
      ->capture_default_str();
  bench_cmd->add_option("--out", bench.out, "TSV path, - for stdout")
      ->capture_default_str();

  ValidateOptions validate;
  auto* validate_cmd =
      app.add_subcommand("validate", "run the statistical validation suite");
  validate_cmd->add_option("--suite", validate.suite)
      ->check(CLI::IsMember({"quick", "full"}))
      ->capture_default_str();
  validate_cmd->add_option("--seed", validate.seed)->capture_default_str();
  validate_cmd->add_flag("--inject-fault", validate.inject_fault,
                         "corrupt quadtree split bounds first");
  validate_cmd->add_option("--check", validate.checks, "run only these checks")
      ->delimiter(',');
  validate_cmd->add_option("--out", validate.out, "TSV path, - for stdout")
      ->capture_default_str();

  QueryOptions query;
  auto* query_cmd = app.add_subcommand(
      "query", "one neighborhood query on a coordinate file");
  query_cmd->add_option("--coords", query.coords, "coordinate file")
      ->required();
  query_cmd->add_option("--phi", query.phi, "query angle")->required();
  query_cmd->add_option("--r", query.r, "query radius")->required();
  query_cmd->add_option("--kernel", query.kernel)
      ->check(CLI::IsMember({"fermi", "threshold"}))
      ->capture_default_str();
  query_cmd->add_option("--temp", query.temperature)->capture_default_str();
  query_cmd->add_option("--radius", query.radius,
                        "kernel radius, defaults to the file's R");
  query_cmd->add_option("--variant", query.variant)
      ->check(CLI::IsMember({"aggregated", "baseline"}))
      ->capture_default_str();
  query_cmd->add_option("--capacity", query.capacity)->capture_default_str();
  query_cmd->add_option("--balance", query.balance)->capture_default_str();
  query_cmd->add_option("--seed", query.seed)->capture_default_str();
  query_cmd->add_option("--out", query.out, "output path, - for stdout")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInvalid;
  }

  try {
    if (generate->parsed()) {
      return cmd_generate(graph, prefix);
    }
    if (dynamic->parsed()) {
      return cmd_dynamic(graph, dyn, prefix);
    }
    if (bench_cmd->parsed()) {
      return cmd_bench(bench);
    }
    if (validate_cmd->parsed()) {
      return cmd_validate(validate);
    }
    return cmd_query(query);
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitIo;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInvalid;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInvalid;
  }
}
