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

namespace qcomb {

/// splitmix64 generator. Small, fast, and fully determined by its seed,
/// which is what the reproducibility contracts here need.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64();

  /// Uniform in [0, 1).
  double next_unit();

  /// Standard normal via Box-Muller; caches the spare draw.
  double next_gaussian();

 private:
  std::uint64_t state_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

/// Generator for one Monte Carlo round, derived from (seed, round) alone.
/// Rounds draw from independent streams, so aggregates built from counters
/// do not depend on how rounds are partitioned across workers.
SplitMix64 round_stream(std::uint64_t seed, std::uint64_t round);

}  // namespace qcomb
