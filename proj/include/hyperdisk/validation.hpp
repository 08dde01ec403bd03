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

#ifndef HYPERDISK_VALIDATION_HPP_
#define HYPERDISK_VALIDATION_HPP_

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace hyperdisk {

enum class Suite { quick, full };

struct ValidationOptions {
  Suite suite = Suite::quick;
  std::uint64_t seed = 1;
  // Corrupts the quadtree split bounds before the inclusion check, which
  // must then fail.
  bool inject_fault = false;
  // Restrict to these check names; empty runs everything.
  std::vector<std::string> only;
};

struct CheckResult {
  std::string name;
  int criterion = 0;  // acceptance criterion number, 0 for extra checks
  bool passed = false;
  std::string measured;
  std::string threshold;
  double seconds = 0.0;
};

struct CheckSpec {
  const char* name;
  int criterion;
  const char* description;
  CheckResult (*run)(const ValidationOptions&);
};

/// Every check, in criterion order followed by the extra checks.
std::span<const CheckSpec> validation_checks();

/// Runs the selected checks; `on_result` sees each result as it finishes.
/// Throws std::invalid_argument for unknown names in `options.only`.
std::vector<CheckResult> run_validation(
    const ValidationOptions& options,
    const std::function<void(const CheckResult&)>& on_result = {});

void write_validation_header(std::ostream& out);
void write_validation_row(std::ostream& out, const CheckResult& result);

}  // namespace hyperdisk

#endif  // HYPERDISK_VALIDATION_HPP_
