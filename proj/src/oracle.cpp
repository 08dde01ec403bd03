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

#include "hyperdisk/oracle.hpp"

#include <algorithm>
#include <boost/math/special_functions/gamma.hpp>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace hyperdisk {

FrequencyTable::FrequencyTable(std::vector<NodeId> ids)
    : ids_(std::move(ids)), counts_(ids_.size(), 0) {
  index_.reserve(ids_.size());
  for (std::size_t i = 0; i < ids_.size(); ++i) {
    if (!index_.emplace(ids_[i], i).second) {
      throw std::invalid_argument("duplicate id in frequency table");
    }
  }
}

void FrequencyTable::record(std::span<const NodeId> included) {
  for (const NodeId id : included) {
    const auto it = index_.find(id);
    if (it == index_.end()) {
      throw std::invalid_argument("id " + std::to_string(id) +
                                  " is not in the frequency table");
    }
    ++counts_[it->second];
  }
  ++trials_;
}

double FrequencyTable::frequency(std::size_t index) const {
  return trials_ == 0 ? 0.0
                      : static_cast<double>(counts_[index]) /
                            static_cast<double>(trials_);
}

FrequencyComparison compare_frequencies(const FrequencyTable& a,
                                        const FrequencyTable& b) {
  if (!std::equal(a.ids().begin(), a.ids().end(), b.ids().begin(),
                  b.ids().end())) {
    throw std::invalid_argument("frequency tables cover different points");
  }
  if (a.trials() == 0 || b.trials() == 0) {
    throw std::invalid_argument("frequency tables need at least one trial");
  }
  FrequencyComparison out;
  const double ta = static_cast<double>(a.trials());
  const double tb = static_cast<double>(b.trials());
  for (std::size_t i = 0; i < a.ids().size(); ++i) {
    const double ca = static_cast<double>(a.counts()[i]);
    const double cb = static_cast<double>(b.counts()[i]);
    const double pooled = (ca + cb) / (ta + tb);
    if (pooled <= 0.0 || pooled >= 1.0) {
      continue;
    }
    const double se =
        std::sqrt(pooled * (1.0 - pooled) * (1.0 / ta + 1.0 / tb));
    const double z = (ca / ta - cb / tb) / se;
    out.chi_square += z * z;
    ++out.degrees_of_freedom;
    out.max_abs_z = std::max(out.max_abs_z, std::abs(z));
    if (std::abs(z) > 3.0) {
      out.flagged.push_back(a.ids()[i]);
    }
  }
  out.p_value =
      out.degrees_of_freedom == 0
          ? 1.0
          : chi_square_survival(out.chi_square,
                                static_cast<double>(out.degrees_of_freedom));
  return out;
}

BinomialCheck check_inclusion(const FrequencyTable& table,
                              std::span<const double> probabilities,
                              double sigmas) {
  if (probabilities.size() != table.ids().size()) {
    throw std::invalid_argument("one probability per table entry required");
  }
  BinomialCheck out;
  const double trials = static_cast<double>(table.trials());
  for (std::size_t i = 0; i < probabilities.size(); ++i) {
    const double p = probabilities[i];
    const double count = static_cast<double>(table.counts()[i]);
    const double mean = trials * p;
    const double sd = std::sqrt(trials * p * (1.0 - p));
    ++out.total;
    // Half-count continuity correction: without it a single hit on a point
    // with p ~ 1e-6 would already lie outside the interval.
    if (std::abs(count - mean) <= sigmas * sd + 0.5) {
      ++out.within;
    } else {
      out.outside.push_back(table.ids()[i]);
    }
  }
  return out;
}

double kolmogorov_survival(double lambda) {
  if (lambda <= 0.0) {
    return 1.0;
  }
  double sum = 0.0;
  if (lambda < 1.18) {
    // Jacobi theta form, convergent where the alternating series is slow:
    // 1 - Q = sqrt(2 pi) / lambda * sum exp(-(2k-1)^2 pi^2 / (8 lambda^2)).
    const double factor =
        -std::numbers::pi * std::numbers::pi / (8.0 * lambda * lambda);
    for (int k = 1; k <= 100; ++k) {
      const double odd = 2.0 * k - 1.0;
      const double term = std::exp(factor * odd * odd);
      sum += term;
      if (term < 1e-300) {
        break;
      }
    }
    return std::clamp(1.0 - std::sqrt(2.0 * std::numbers::pi) / lambda * sum,
                      0.0, 1.0);
  }
  double sign = 1.0;
  for (int k = 1; k <= 100; ++k) {
    sum += sign * std::exp(-2.0 * k * k * lambda * lambda);
    sign = -sign;
  }
  return std::clamp(2.0 * sum, 0.0, 1.0);
}

KsResult ks_test(std::vector<double> samples,
                 const std::function<double(double)>& cdf) {
  if (samples.size() < 30) {
    throw std::invalid_argument("ks_test needs at least 30 samples");
  }
  std::sort(samples.begin(), samples.end());
  const double n = static_cast<double>(samples.size());
  double d = 0.0;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const double f = cdf(samples[i]);
    const double above = (static_cast<double>(i) + 1.0) / n - f;
    const double below = f - static_cast<double>(i) / n;
    d = std::max({d, above, below});
  }
  const double root = std::sqrt(n);
  return KsResult{d, kolmogorov_survival((root + 0.12 + 0.11 / root) * d)};
}

double chi_square_survival(double statistic, double degrees_of_freedom) {
  if (statistic <= 0.0) {
    return 1.0;
  }
  return boost::math::gamma_q(0.5 * degrees_of_freedom, 0.5 * statistic);
}

ChiSquareResult chi_square_goodness_of_fit(std::span<const double> observed,
                                           std::span<const double> expected,
                                           double min_expected) {
  if (observed.size() != expected.size() || observed.empty()) {
    throw std::invalid_argument("observed and expected must match in size");
  }
  std::vector<double> obs;
  std::vector<double> exp;
  double acc_o = 0.0;
  double acc_e = 0.0;
  for (std::size_t i = 0; i < observed.size(); ++i) {
    acc_o += observed[i];
    acc_e += expected[i];
    if (acc_e >= min_expected) {
      obs.push_back(acc_o);
      exp.push_back(acc_e);
      acc_o = acc_e = 0.0;
    }
  }
  if (acc_e > 0.0 || acc_o > 0.0) {
    if (exp.empty()) {
      obs.push_back(acc_o);
      exp.push_back(acc_e);
    } else {
      obs.back() += acc_o;
      exp.back() += acc_e;
    }
  }
  ChiSquareResult out;
  for (std::size_t i = 0; i < obs.size(); ++i) {
    if (exp[i] > 0.0) {
      const double diff = obs[i] - exp[i];
      out.statistic += diff * diff / exp[i];
    }
  }
  out.degrees_of_freedom = static_cast<double>(obs.size()) - 1.0;
  out.p_value =
      out.degrees_of_freedom <= 0.0
          ? 1.0
          : chi_square_survival(out.statistic, out.degrees_of_freedom);
  return out;
}

}  // namespace hyperdisk
