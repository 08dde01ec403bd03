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

#include "hyperdisk/pnq.hpp"

namespace hyperdisk {

std::optional<std::uint64_t> sample_gap(double b_bar, double u) {
  if (b_bar >= 1.0) {
    return 0;
  }
  if (!(b_bar > 0.0)) {
    return std::nullopt;
  }
  const double gap = std::floor(std::log1p(-u) / std::log1p(-b_bar));
  if (!(gap < 0x1.0p63)) {
    return std::nullopt;
  }
  return static_cast<std::uint64_t>(gap);
}

}  // namespace hyperdisk
