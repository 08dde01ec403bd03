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

#ifndef HYPERDISK_ORACLE_HPP_
#define HYPERDISK_ORACLE_HPP_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <unordered_map>
#include <vector>

#include "hyperdisk/geometry.hpp"
#include "hyperdisk/kernel.hpp"
#include "hyperdisk/quadtree.hpp"
#include "hyperdisk/random.hpp"

namespace hyperdisk {

/// Reference neighborhood query: one Bernoulli(f(dist(q, p))) trial per
/// point, Theta(n).
template <DistanceKernel Kernel>
std::vector<NodeId> query_naive(std::span<const PointRecord> points,
                                const PolarPoint& q, const Kernel& kernel,
                                Geometry geometry, RngStream& rng) {
  const PreparedPoint center(q);
  std::vector<NodeId> out;
  for (const auto& p : points) {
    const double f =
        kernel(distance(geometry, center, PreparedPoint(p.position)));
    if (rng.uniform() < f) {
      out.push_back(p.id);
    }
  }
  return out;
}

/// Per-point inclusion counts over repeated query trials.
class FrequencyTable {
 public:
  explicit FrequencyTable(std::vector<NodeId> ids);

  /// Records one trial whose result set is `included`. Ids outside the
  /// table throw std::invalid_argument.
  void record(std::span<const NodeId> included);

  std::span<const NodeId> ids() const { return ids_; }
  std::span<const std::uint64_t> counts() const { return counts_; }
  std::uint64_t trials() const { return trials_; }
  double frequency(std::size_t index) const;

 private:
  std::vector<NodeId> ids_;
  std::unordered_map<NodeId, std::size_t> index_;
  std::vector<std::uint64_t> counts_;
  std::uint64_t trials_ = 0;
};

struct FrequencyComparison {
  double chi_square = 0.0;
  std::size_t degrees_of_freedom = 0;
  double p_value = 1.0;
  double max_abs_z = 0.0;
  std::vector<NodeId> flagged;  // |z| > 3
};

/// Per-point two-proportion z tests; their squares summed give a chi-square
/// homogeneity statistic with one degree of freedom per informative point.
/// Throws std::invalid_argument if the tables cover different point sets.
FrequencyComparison compare_frequencies(const FrequencyTable& a,
                                        const FrequencyTable& b);

struct BinomialCheck {
  std::size_t within = 0;
  std::size_t total = 0;
  std::vector<NodeId> outside;

  double fraction() const {
    return total == 0 ? 1.0 : static_cast<double>(within) / total;
  }
};

/// Counts points whose inclusion count lies within `sigmas` binomial
/// standard deviations (plus a half-count continuity correction) of
/// trials * p. Points with p in {0, 1} must match exactly.
BinomialCheck check_inclusion(const FrequencyTable& table,
                              std::span<const double> probabilities,
                              double sigmas = 3.0);

struct KsResult {
  double statistic = 0.0;
  double p_value = 1.0;
};

/// Asymptotic survival function of the Kolmogorov distribution,
/// Q(lambda) = 2 sum_{k>=1} (-1)^(k-1) exp(-2 k^2 lambda^2), 100 terms.
double kolmogorov_survival(double lambda);

/// One-sample Kolmogorov-Smirnov test. Requires at least 30 samples.
KsResult ks_test(std::vector<double> samples,
                 const std::function<double(double)>& cdf);

/// Upper tail of the chi-square distribution.
double chi_square_survival(double statistic, double degrees_of_freedom);

struct ChiSquareResult {
  double statistic = 0.0;
  double degrees_of_freedom = 0.0;
  double p_value = 1.0;
};

/// Pearson goodness of fit. Adjacent bins are pooled until every expected
/// count reaches `min_expected`.
ChiSquareResult chi_square_goodness_of_fit(std::span<const double> observed,
                                           std::span<const double> expected,
                                           double min_expected = 5.0);

}  // namespace hyperdisk

#endif  // HYPERDISK_ORACLE_HPP_
