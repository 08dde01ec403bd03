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

#ifndef HYPERDISK_KERNEL_HPP_
#define HYPERDISK_KERNEL_HPP_

#include <cmath>
#include <concepts>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>

namespace hyperdisk {

/// A kernel maps a distance to a probability in [0, 1] and must be
/// monotonically decreasing. It is supplied per query.
template <typename K>
concept DistanceKernel = requires(const K& kernel, double d) {
  { kernel(d) } -> std::convertible_to<double>;
};

/// Fermi-Dirac edge probability 1 / (1 + exp((d - R) / (2T))), T > 0.
inline double fermi_probability(double d, double radius, double temperature) {
  return 1.0 / (1.0 + std::exp((d - radius) / (2.0 * temperature)));
}

/// Closed disk indicator: 1 for d <= threshold.
inline double threshold_probability(double d, double threshold) {
  return d <= threshold ? 1.0 : 0.0;
}

class FermiKernel {
 public:
  FermiKernel(double radius, double temperature)
      : radius_(radius), temperature_(temperature) {
    if (!(temperature > 0.0)) {
      throw std::invalid_argument("Fermi kernel requires temperature > 0");
    }
  }

  double operator()(double d) const {
    return fermi_probability(d, radius_, temperature_);
  }

  double radius() const { return radius_; }
  double temperature() const { return temperature_; }

 private:
  double radius_;
  double temperature_;
};

class ThresholdKernel {
 public:
  explicit ThresholdKernel(double threshold) : threshold_(threshold) {
    if (!(threshold >= 0.0)) {
      throw std::invalid_argument("threshold must be non-negative");
    }
  }

  double operator()(double d) const {
    return threshold_probability(d, threshold_);
  }

  double threshold() const { return threshold_; }

 private:
  double threshold_;
};

/// Distance-independent probability; handy for f = 0 and f = 1 checks.
class ConstantKernel {
 public:
  explicit ConstantKernel(double probability) : probability_(probability) {}
  double operator()(double) const { return probability_; }

 private:
  double probability_;
};

/// The random hyperbolic graph edge kernel: threshold at T = 0, Fermi above.
using EdgeKernel = std::variant<FermiKernel, ThresholdKernel>;

inline EdgeKernel make_edge_kernel(double radius, double temperature) {
  if (temperature < 0.0 || std::isnan(temperature)) {
    throw std::invalid_argument("temperature must be >= 0");
  }
  if (temperature == 0.0) {
    return ThresholdKernel(radius);
  }
  return FermiKernel(radius, temperature);
}

/// Kernel selection by CLI name: "fermi" or "threshold".
inline EdgeKernel make_named_kernel(std::string_view name, double radius,
                                    double temperature) {
  if (name == "threshold") {
    return ThresholdKernel(radius);
  }
  if (name == "fermi") {
    return make_edge_kernel(radius, temperature);
  }
  throw std::invalid_argument("unknown kernel: " + std::string(name));
}

}  // namespace hyperdisk

#endif  // HYPERDISK_KERNEL_HPP_
