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

#ifndef HYPERDISK_TESTS_SUPPORT_HPP_
#define HYPERDISK_TESTS_SUPPORT_HPP_

#include <span>
#include <vector>

#include "hyperdisk/quadtree.hpp"

namespace hyperdisk::testing {

inline std::vector<PointRecord> to_records(std::span<const PolarPoint> pts) {
  std::vector<PointRecord> out(pts.size());
  for (std::size_t i = 0; i < pts.size(); ++i) {
    out[i] = PointRecord{pts[i], static_cast<NodeId>(i)};
  }
  return out;
}

inline QuadtreeConfig hyperbolic_config(double alpha, double radius,
                                        std::size_t capacity = 128,
                                        double balance = 0.5) {
  QuadtreeConfig config;
  config.capacity = capacity;
  config.balance = balance;
  config.density = RadialDensity::hyperbolic(alpha, radius);
  return config;
}

}  // namespace hyperdisk::testing

#endif  // HYPERDISK_TESTS_SUPPORT_HPP_
