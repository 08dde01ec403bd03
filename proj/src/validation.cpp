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

#include "hyperdisk/validation.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <variant>

#include "hyperdisk/analysis.hpp"
#include "hyperdisk/dynamics.hpp"
#include "hyperdisk/io.hpp"
#include "hyperdisk/oracle.hpp"
#include "hyperdisk/pnq.hpp"
#include "hyperdisk/rhg.hpp"
#include "hyperdisk/workload.hpp"

namespace hyperdisk {

namespace {

bool is_full(const ValidationOptions& o) { return o.suite == Suite::full; }

std::uint64_t derived_seed(const ValidationOptions& o, std::uint64_t salt) {
  return RngStream::mix_seed(o.seed, salt);
}

std::string num(double value) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4g", value);
  return buf;
}

template <typename Range>
std::string join(const Range& values) {
  std::string out;
  for (const auto& v : values) {
    if (!out.empty()) {
      out += ',';
    }
    out += num(static_cast<double>(v));
  }
  return out;
}

std::vector<PointRecord> to_records(std::span<const PolarPoint> coords) {
  std::vector<PointRecord> records(coords.size());
  for (std::size_t i = 0; i < coords.size(); ++i) {
    records[i] = PointRecord{coords[i], static_cast<NodeId>(i)};
  }
  return records;
}

// The experimental setting used throughout: alpha = 0.75, T = 0.1,
// R = 2 ln n - 1. The generation checks use a strongly unbalanced tree
// because it is an order of magnitude faster; the tree shape only changes
// which candidates are examined, not the output distribution.
RhgParams experiment_params(std::size_t n, std::uint64_t seed) {
  RhgParams p;
  p.n = n;
  p.alpha = 0.75;
  p.temperature = 0.1;
  p.radius_const = -1.0;
  p.seed = seed;
  p.balance = 0.001;
  return p;
}

int ceil_log4(std::size_t n) {
  int k = 0;
  std::size_t power = 1;
  while (power < n) {
    power *= 4;
    ++k;
  }
  return k;
}

CheckResult check_average_degree(const ValidationOptions& o) {
  const std::size_t n =
      is_full(o) ? std::size_t{1} << 17 : std::size_t{1} << 15;
  const int seeds = is_full(o) ? 3 : 1;
  CheckResult r;
  r.threshold = "mean degree in [8.4, 10.2] for each of " +
                std::to_string(seeds) + " seeds";
  std::vector<double> means;
  r.passed = true;
  for (int s = 0; s < seeds; ++s) {
    const StaticGraph g =
        generate_static(experiment_params(n, derived_seed(o, 100 + s)));
    const double mean = 2.0 * static_cast<double>(g.graph.edge_count()) /
                        static_cast<double>(n);
    means.push_back(mean);
    r.passed = r.passed && mean >= 8.4 && mean <= 10.2;
  }
  r.measured = "n=" + std::to_string(n) + " mean=" + join(means);
  return r;
}

CheckResult check_degree_exponent(const ValidationOptions& o) {
  const std::size_t n = is_full(o) ? 100000 : 50000;
  const StaticGraph g =
      generate_static(experiment_params(n, derived_seed(o, 200)));
  const DegreeSummary summary = degree_stats(g.graph);
  CheckResult r;
  const double predicted = degree_exponent(0.75);
  r.threshold = "|gamma - " + num(predicted) + "| <= 0.3";
  if (!summary.tail) {
    r.measured = "no power-law tail found";
    return r;
  }
  r.passed = std::abs(summary.tail->exponent - predicted) <= 0.3;
  r.measured = "n=" + std::to_string(n) +
               " gamma=" + num(summary.tail->exponent) +
               " x_min=" + std::to_string(summary.tail->x_min) +
               " tail=" + std::to_string(summary.tail->tail_size);
  return r;
}

CheckResult check_inclusion(const ValidationOptions& o) {
  constexpr std::size_t kPoints = 200;
  const std::size_t trials = is_full(o) ? 10000 : 2000;
  RhgParams params;
  params.n = kPoints;
  params.alpha = 0.75;
  params.radius_const = -1.0;
  params.capacity = 4;  // deep tree, so aggregation actually happens
  const double radius = params.resolved_radius();
  RngStream point_rng(derived_seed(o, 300));
  const auto coords = sample_points(kPoints, params.density(), point_rng);
  const auto records = to_records(coords);
  Quadtree tree = Quadtree::build(records, params.tree_config());
  if (o.inject_fault) {
    tree.corrupt_split_bounds_for_testing();
  }
  const FermiKernel kernel(radius, 0.5);
  std::vector<NodeId> ids(kPoints);
  for (std::size_t i = 0; i < kPoints; ++i) {
    ids[i] = static_cast<NodeId>(i);
  }

  CheckResult r;
  r.threshold =
      ">= 99% of points within 3 sigma per variant; pairwise "
      "homogeneity p > 0.001";
  r.passed = true;
  r.measured = "trials=" + std::to_string(trials);
  // One query near the center, where most points have sizeable inclusion
  // probabilities, and one halfway out.
  const std::array<PolarPoint, 2> queries{PolarPoint{1.0, 1.0},
                                          PolarPoint{4.0, 0.5 * radius}};
  for (std::size_t qi = 0; qi < queries.size(); ++qi) {
    const PolarPoint& q = queries[qi];
    std::vector<double> probs(kPoints);
    for (std::size_t i = 0; i < kPoints; ++i) {
      probs[i] = kernel(hyperbolic_distance(q, coords[i]));
    }
    FrequencyTable naive(ids);
    FrequencyTable baseline(ids);
    FrequencyTable aggregated(ids);
    RngStream naive_rng(derived_seed(o, 310 + 10 * qi));
    RngStream baseline_rng(derived_seed(o, 311 + 10 * qi));
    RngStream aggregated_rng(derived_seed(o, 312 + 10 * qi));
    for (std::size_t t = 0; t < trials; ++t) {
      naive.record(
          query_naive(records, q, kernel, Geometry::hyperbolic, naive_rng));
      baseline.record(query_baseline(tree, q, kernel, baseline_rng).ids);
      aggregated.record(query_aggregated(tree, q, kernel, aggregated_rng).ids);
    }
    std::string within;
    for (const FrequencyTable* table : {&naive, &baseline, &aggregated}) {
      const double fraction =
          hyperdisk::check_inclusion(*table, probs).fraction();
      r.passed = r.passed && fraction >= 0.99;
      within += (within.empty() ? "" : ",") + num(fraction);
    }
    std::string pvalues;
    const std::array<std::pair<const FrequencyTable*, const FrequencyTable*>, 3>
        pairs{{{&naive, &baseline},
               {&naive, &aggregated},
               {&baseline, &aggregated}}};
    for (const auto& [a, b] : pairs) {
      const double p = compare_frequencies(*a, *b).p_value;
      r.passed = r.passed && p > 0.001;
      pvalues += (pvalues.empty() ? "" : ",") + num(p);
    }
    r.measured += " q" + std::to_string(qi + 1) +
                  ": within(naive,base,agg)=" + within +
                  " p(nb,na,ba)=" + pvalues;
  }
  return r;
}

CheckResult check_threshold_exact(const ValidationOptions& o) {
  constexpr std::size_t n = 2000;
  const int seeds = is_full(o) ? 5 : 2;
  CheckResult r;
  r.threshold = "edge set identical to the pairwise scan for every seed";
  int exact = 0;
  for (int s = 0; s < seeds; ++s) {
    RhgParams p = experiment_params(n, derived_seed(o, 400 + s));
    p.temperature = 0.0;
    p.balance = 0.5;
    const StaticGraph g = generate_static(p);
    const double radius = p.resolved_radius();
    const auto coords = g.graph.coordinates();
    std::vector<Edge> expected;
    for (std::size_t u = 0; u < n; ++u) {
      for (std::size_t v = u + 1; v < n; ++v) {
        if (hyperbolic_distance(coords[u], coords[v]) <= radius) {
          expected.push_back(
              Edge{static_cast<NodeId>(u), static_cast<NodeId>(v)});
        }
      }
    }
    exact += g.graph.edges() == expected ? 1 : 0;
  }
  r.passed = exact == seeds;
  r.measured = std::to_string(exact) + "/" + std::to_string(seeds) + " exact";
  return r;
}

CheckResult check_movement(const ValidationOptions& o) {
  constexpr std::size_t n = 1000;
  constexpr int kSeeds = 5;
  const std::size_t steps = is_full(o) ? 10000 : 1000;
  const double radius = target_radius(static_cast<double>(n), -1.0);
  CheckResult r;
  r.threshold = "radial and angular KS p > 0.01 in >= 4 of 5 seeds per alpha";
  r.passed = true;
  std::string measured = "steps=" + std::to_string(steps);
  for (const double alpha : {0.75, 1.0}) {
    const RadialDensity density = RadialDensity::hyperbolic(alpha, radius);
    const double ceiling = std::sinh(alpha * radius);
    int passing = 0;
    double worst = 1.0;
    for (int s = 0; s < kSeeds; ++s) {
      RngStream rng(derived_seed(o, 500 + s + (alpha == 1.0 ? 50 : 0)));
      auto points = sample_points(n, density, rng);
      MovementState movement =
          init_movement(n, StepRange{-0.01, 0.01},
                        StepRange{0.0, 0.01 * ceiling}, density, rng);
      for (std::size_t step = 0; step < steps; ++step) {
        for (std::size_t i = 0; i < n; ++i) {
          const MoveResult moved = move_point(points[i], movement.tau_phi[i],
                                              movement.tau_r[i], radius, alpha);
          points[i] = moved.position;
          movement.tau_r[i] = moved.tau_r;
        }
      }
      std::vector<double> radii(n);
      std::vector<double> angles(n);
      for (std::size_t i = 0; i < n; ++i) {
        radii[i] = points[i].r;
        angles[i] = points[i].phi;
      }
      const double p_r =
          ks_test(radii, [&](double x) { return density.cdf(x); }).p_value;
      const double p_phi =
          ks_test(angles, [](double x) { return x / kTwoPi; }).p_value;
      worst = std::min({worst, p_r, p_phi});
      passing += (p_r > 0.01 && p_phi > 0.01) ? 1 : 0;
    }
    r.passed = r.passed && passing >= 4;
    measured += " alpha=" + num(alpha) + ":" + std::to_string(passing) +
                "/5 min_p=" + num(worst);
  }
  r.measured = measured;
  return r;
}

std::vector<double> successive(const std::vector<double>& values) {
  std::vector<double> ratios;
  for (std::size_t i = 1; i < values.size(); ++i) {
    ratios.push_back(values[i] / values[i - 1]);
  }
  return ratios;
}

CheckResult check_sublinear(const ValidationOptions& o) {
  BenchConfig config;
  config.sizes =
      is_full(o)
          ? std::vector<std::size_t>{1u << 14, 1u << 16, 1u << 18, 1u << 20}
          : std::vector<std::size_t>{1u << 12, 1u << 14, 1u << 16};
  config.iterations = is_full(o) ? 1000 : 300;
  config.seed = derived_seed(o, 600);
  const auto aggregated = run_bench(config);
  config.variant = QueryVariant::baseline;
  config.iterations = is_full(o) ? 100 : 50;
  const auto baseline = run_bench(config);

  std::vector<double> extra;
  std::vector<double> base_extra;
  std::vector<double> base_cells;
  std::vector<ScalingSample> samples;
  for (std::size_t i = 0; i < aggregated.size(); ++i) {
    extra.push_back(aggregated[i].mean_extra_candidates());
    base_extra.push_back(baseline[i].mean_extra_candidates());
    base_cells.push_back(baseline[i].mean_cells);
    samples.push_back(ScalingSample{static_cast<double>(aggregated[i].n),
                                    aggregated[i].mean_candidates,
                                    aggregated[i].mean_result});
  }
  const auto ratios = successive(extra);
  const auto base_ratios = successive(base_cells);
  CheckResult r;
  r.threshold =
      "aggregated extra-candidate ratio <= 2.5 per 4x step; "
      "baseline cell ratio >= 3.0";
  r.passed = std::all_of(ratios.begin(), ratios.end(),
                         [](double x) { return x <= 2.5; }) &&
             std::all_of(base_ratios.begin(), base_ratios.end(),
                         [](double x) { return x >= 3.0; });
  const ScalingReport fit = scaling_report(samples);
  r.measured = "agg_extra=" + join(extra) + " ratios=" + join(ratios) +
               " sqrt_coef=" + num(fit.sqrt_coef) +
               " | base_cells=" + join(base_cells) +
               " ratios=" + join(base_ratios) +
               " base_extra_ratios=" + join(successive(base_extra));
  return r;
}

CheckResult check_tree_shape(const ValidationOptions& o) {
  const std::vector<std::size_t> sizes =
      is_full(o) ? std::vector<std::size_t>{1000, 10000, 100000}
                 : std::vector<std::size_t>{1000, 10000};
  const int seeds = is_full(o) ? 20 : 5;
  CheckResult r;
  r.threshold = "height <= 3 ceil(log4 n) and nodes <= 8n, capacity 1";
  r.passed = true;
  std::string measured;
  for (const std::size_t n : sizes) {
    RhgParams p = experiment_params(n, 0);
    p.capacity = 1;
    p.balance = 0.5;
    int max_height = 0;
    double max_ratio = 0.0;
    for (int s = 0; s < seeds; ++s) {
      RngStream rng(derived_seed(o, 700 + 97 * n + s));
      const auto coords = sample_points(n, p.density(), rng);
      const Quadtree tree =
          Quadtree::build(to_records(coords), p.tree_config());
      max_height = std::max(max_height, tree.height());
      max_ratio = std::max(max_ratio, static_cast<double>(tree.nodes().size()) /
                                          static_cast<double>(n));
    }
    const int bound = 3 * ceil_log4(n);
    r.passed = r.passed && max_height <= bound && max_ratio <= 8.0;
    measured += (measured.empty() ? "" : " ") + std::string("n=") +
                std::to_string(n) + ":h=" + std::to_string(max_height) + "/" +
                std::to_string(bound) + ",nodes/n=" + num(max_ratio);
  }
  r.measured = measured;
  return r;
}

CheckResult check_cell_probability(const ValidationOptions& o) {
  constexpr std::size_t n = 100000;
  RhgParams p = experiment_params(n, 0);
  p.balance = 0.5;
  RngStream rng(derived_seed(o, 800));
  const auto coords = sample_points(n, p.density(), rng);
  const Quadtree tree = Quadtree::build(to_records(coords), p.tree_config());
  std::vector<double> observed;
  for (const QuadNode& node : tree.nodes()) {
    if (node.depth == 3) {
      observed.push_back(static_cast<double>(node.subtree_size));
    }
  }
  CheckResult r;
  r.threshold = "64 depth-3 cells, chi-square p > 0.001";
  if (observed.size() != 64) {
    r.measured = std::to_string(observed.size()) + " depth-3 cells";
    return r;
  }
  const std::vector<double> expected(64, static_cast<double>(n) / 64.0);
  const ChiSquareResult chi = chi_square_goodness_of_fit(observed, expected);
  r.passed = chi.p_value > 0.001;
  r.measured = "chi2=" + num(chi.statistic) +
               " dof=" + num(chi.degrees_of_freedom) + " p=" + num(chi.p_value);
  return r;
}

CheckResult check_balance_speedup(const ValidationOptions& o) {
  BenchConfig config;
  config.sizes = {is_full(o) ? std::size_t{1} << 20 : std::size_t{1} << 18};
  config.balances = {0.5, 0.1, 0.01, 0.001};
  config.iterations = is_full(o) ? 1000 : 300;
  config.seed = derived_seed(o, 900);
  const auto rows = run_bench(config);
  std::vector<double> ms;
  for (const BenchRow& row : rows) {
    ms.push_back(row.mean_ms);
  }
  bool monotone = true;
  for (std::size_t i = 1; i < ms.size(); ++i) {
    monotone = monotone && ms[i] <= ms[i - 1];
  }
  const double speedup = ms.front() / ms.back();
  CheckResult r;
  r.threshold = "mean ms at b=0.5 / mean ms at b=0.001 >= 3";
  r.passed = speedup >= 3.0;
  r.measured = "n=" + std::to_string(config.sizes[0]) +
               " ms(0.5,0.1,0.01,0.001)=" + join(ms) +
               " speedup=" + num(speedup) +
               (monotone ? " monotone" : " not monotone");
  return r;
}

// Random cell: angular span log-uniform in [1e-4, 2pi], radial span anywhere
// in [0, radius]; every fourth cell instead comes from a built quadtree.
CellBounds random_cell(RngStream& rng, double radius,
                       std::span<const QuadNode> tree_nodes) {
  if (!tree_nodes.empty() && rng.below(4) == 0) {
    return tree_nodes[rng.below(tree_nodes.size())].bounds;
  }
  const double width =
      std::min(kTwoPi, 1e-4 * std::pow(kTwoPi / 1e-4, rng.uniform()));
  const double lo_phi = (kTwoPi - width) * rng.uniform();
  double r1 = radius * rng.uniform();
  double r2 = radius * rng.uniform();
  if (r1 > r2) {
    std::swap(r1, r2);
  }
  return CellBounds{lo_phi, std::min(kTwoPi, lo_phi + width), r1, r2};
}

CheckResult check_distance_bounds(const ValidationOptions& o) {
  const std::size_t triples = is_full(o) ? 100000 : 20000;
  constexpr double kTolerance = 1e-9;
  CheckResult r;
  r.threshold = "zero sandwich violations at 1e-9";
  std::string measured;
  std::size_t total_violations = 0;
  for (const Geometry geometry : {Geometry::hyperbolic, Geometry::euclidean}) {
    const double radius = geometry == Geometry::hyperbolic ? 20.0 : 10.0;
    RngStream rng(
        derived_seed(o, geometry == Geometry::hyperbolic ? 1000 : 1001));
    QuadtreeConfig config;
    config.capacity = 8;
    config.geometry = geometry;
    config.density = geometry == Geometry::hyperbolic
                         ? RadialDensity::hyperbolic(1.0, radius)
                         : RadialDensity::euclidean_uniform(radius);
    const auto tree_points = sample_points(2000, config.density, rng);
    const Quadtree tree = Quadtree::build(to_records(tree_points), config);
    std::size_t violations = 0;
    for (std::size_t t = 0; t < triples; ++t) {
      const CellBounds cell = random_cell(rng, radius, tree.nodes());
      PolarPoint q{kTwoPi * rng.uniform(), radius * rng.uniform()};
      if (rng.below(8) == 0) {  // sometimes force q into the cell
        q = PolarPoint{
            cell.min_phi + (cell.max_phi - cell.min_phi) * rng.uniform(),
            cell.min_r + (cell.max_r - cell.min_r) * rng.uniform()};
        q.phi = normalize_angle(q.phi);
      }
      const PolarPoint p{
          cell.min_phi + (cell.max_phi - cell.min_phi) * rng.uniform(),
          cell.min_r + (cell.max_r - cell.min_r) * rng.uniform()};
      const DistanceBounds bounds = cell_distance_bounds(geometry, cell, q);
      const double d = distance(geometry, q, p);
      if (d < bounds.infimum - kTolerance || d > bounds.supremum + kTolerance) {
        ++violations;
      }
    }
    total_violations += violations;
    measured += std::string(geometry == Geometry::hyperbolic ? "hyperbolic="
                                                             : " euclidean=") +
                std::to_string(violations) + "/" + std::to_string(triples);
  }
  r.passed = total_violations == 0;
  r.measured = measured;
  return r;
}

// Serializes a graph the way the CLI does and parses it back.
GraphState round_trip(const GraphState& graph, double radius, double alpha) {
  std::stringstream coords;
  std::stringstream edges;
  write_coordinates(
      coords,
      CoordinateHeader{graph.node_count(), radius, alpha, Geometry::hyperbolic},
      graph.coordinates());
  const auto edge_list = graph.edges();
  write_edges(edges, edge_list);
  CoordinateFile file = read_coordinates(coords);
  const auto parsed_edges = read_edges(edges);
  return assemble_graph(std::move(file.points), parsed_edges);
}

CheckResult check_replay(const ValidationOptions& o) {
  DynamicConfig config;
  config.params =
      experiment_params(is_full(o) ? 8192 : 1000, derived_seed(o, 1100));
  config.params.balance = 0.5;
  config.steps = is_full(o) ? 10000 : 1000;
  const double radius = config.params.resolved_radius();
  const double alpha = config.params.alpha;
  config.tau_r = StepRange{0.0, 0.001 * std::sinh(alpha * radius)};
  std::stringstream stream;
  const DynamicRun run =
      run_dynamic(config, [&](const GraphDelta& d) { write_delta(stream, d); });
  const auto deltas = read_deltas(stream);
  const GraphState initial = round_trip(run.initial, radius, alpha);
  const GraphState expected = round_trip(run.final_state, radius, alpha);
  const bool replayed = replay(initial, deltas) == expected;

  DynamicConfig idle = config;
  idle.steps = 0;
  const DynamicRun empty = run_dynamic(idle);
  const bool idle_ok =
      empty.deltas.empty() && empty.final_state == empty.initial;

  CheckResult r;
  r.threshold = "replayed deltas equal the final snapshot; 0 steps, no deltas";
  r.passed = replayed && idle_ok && deltas.size() == config.steps;
  r.measured = "n=" + std::to_string(config.params.n) +
               " steps=" + std::to_string(config.steps) +
               " records=" + std::to_string(deltas.size()) +
               (replayed ? " replay=exact" : " replay=MISMATCH") +
               (idle_ok ? " idle=ok" : " idle=FAIL");
  return r;
}

CheckResult check_radial_sampler(const ValidationOptions& o) {
  const std::size_t n = is_full(o) ? 100000 : 20000;
  CheckResult r;
  r.threshold = "KS p > 0.01 against J(r) for alpha in {0.75, 1}";
  r.passed = true;
  for (const double alpha : {0.75, 1.0}) {
    const RadialDensity density = RadialDensity::hyperbolic(alpha, 15.0);
    RngStream rng(derived_seed(o, alpha == 1.0 ? 1201 : 1200));
    std::vector<double> radii(n);
    for (double& x : radii) {
      x = sample_point(rng, density).r;
    }
    const double p =
        ks_test(radii, [&](double x) { return density.cdf(x); }).p_value;
    r.passed = r.passed && p > 0.01;
    r.measured += (r.measured.empty() ? "" : " ") + std::string("alpha=") +
                  num(alpha) + ":p=" + num(p);
  }
  return r;
}

CheckResult check_gap_distribution(const ValidationOptions& o) {
  const std::size_t draws = is_full(o) ? 100000 : 20000;
  constexpr double kBound = 0.3;
  constexpr std::size_t kBins = 30;
  RngStream rng(derived_seed(o, 1300));
  std::vector<double> observed(kBins + 1, 0.0);
  for (std::size_t i = 0; i < draws; ++i) {
    const auto gap = sample_gap(kBound, rng);
    ++observed[std::min<std::uint64_t>(gap.value_or(kBins), kBins)];
  }
  std::vector<double> expected(kBins + 1);
  for (std::size_t k = 0; k < kBins; ++k) {
    expected[k] =
        static_cast<double>(draws) * std::pow(1.0 - kBound, k) * kBound;
  }
  expected[kBins] = static_cast<double>(draws) * std::pow(1.0 - kBound, kBins);
  const ChiSquareResult chi = chi_square_goodness_of_fit(observed, expected);
  CheckResult r;
  r.threshold = "geometric pmf, chi-square p > 0.001";
  r.passed = chi.p_value > 0.001;
  r.measured = "draws=" + std::to_string(draws) +
               " chi2=" + num(chi.statistic) + " p=" + num(chi.p_value);
  return r;
}

constexpr CheckSpec kChecks[] = {
    {"average_degree", 1, "mean degree of the experimental RHG setting",
     check_average_degree},
    {"degree_exponent", 2, "fitted power-law tail exponent",
     check_degree_exponent},
    {"inclusion", 3, "per-point inclusion probabilities of all query variants",
     check_inclusion},
    {"threshold_exact", 4, "T = 0 generation against the pairwise scan",
     check_threshold_exact},
    {"movement", 5, "marginals preserved by the movement model",
     check_movement},
    {"sublinear", 6, "query work scaling", check_sublinear},
    {"tree_shape", 7, "quadtree height and node count", check_tree_shape},
    {"cell_probability", 8, "depth-3 cell occupancy", check_cell_probability},
    {"balance_speedup", 9, "query time versus balance", check_balance_speedup},
    {"distance_bounds", 10, "point-to-cell distance bounds",
     check_distance_bounds},
    {"replay", 11, "delta stream replay", check_replay},
    {"radial_sampler", 0, "inverse-CDF radial sampling", check_radial_sampler},
    {"gap_distribution", 0, "geometric gap sampling", check_gap_distribution},
};

}  // namespace

std::span<const CheckSpec> validation_checks() { return kChecks; }

std::vector<CheckResult> run_validation(
    const ValidationOptions& options,
    const std::function<void(const CheckResult&)>& on_result) {
  for (const std::string& name : options.only) {
    const bool known =
        std::any_of(std::begin(kChecks), std::end(kChecks),
                    [&](const CheckSpec& spec) { return name == spec.name; });
    if (!known) {
      throw std::invalid_argument("unknown check '" + name + "'");
    }
  }
  std::vector<CheckResult> results;
  for (const CheckSpec& spec : kChecks) {
    if (!options.only.empty() &&
        std::find(options.only.begin(), options.only.end(), spec.name) ==
            options.only.end()) {
      continue;
    }
    const auto start = std::chrono::steady_clock::now();
    CheckResult result = spec.run(options);
    result.name = spec.name;
    result.criterion = spec.criterion;
    result.seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    if (on_result) {
      on_result(result);
    }
    results.push_back(std::move(result));
  }
  return results;
}

void write_validation_header(std::ostream& out) {
  out << "check\tcriterion\tstatus\tseconds\tmeasured\tthreshold\n";
}

void write_validation_row(std::ostream& out, const CheckResult& result) {
  out << result.name << '\t' << result.criterion << '\t'
      << (result.passed ? "PASS" : "FAIL") << '\t' << num(result.seconds)
      << '\t' << result.measured << '\t' << result.threshold << '\n';
}

}  // namespace hyperdisk
