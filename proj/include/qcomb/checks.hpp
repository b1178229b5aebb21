// Copyright 2026 qcomb developers
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

#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace qcomb {

/// One row of the built-in verification table. Rows belonging to the same
/// `group` together make up one named consistency criterion.
struct CheckRow {
  int group;
  std::string name;
  double expected;
  double computed;
  double tolerance;
  bool pass;
};

struct CheckOptions {
  std::uint64_t monte_carlo_rounds = 1'000'000;
  std::uint64_t seed = 1;
  int perturb_row = -1;  // test hook: offsets that row's computed value
};

/// Group descriptions indexed 1..10.
const std::vector<std::string>& check_group_names();

/// Recomputes every known closed-form value and cross-route identity of the
/// library and compares at fixed tolerances.
std::vector<CheckRow> run_reference_checks(const CheckOptions& options = {});

bool all_pass(const std::vector<CheckRow>& rows);

}  // namespace qcomb
