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

#include <cstddef>
#include <vector>

#include "qcomb/networks.hpp"

namespace qcomb {

// Normalization constants for information and disturbance: the extremes of
// the average gain and fidelity over the constraint curve.
inline constexpr double kGainMin = 0.25;
inline constexpr double kGainMax = 0.625;
inline constexpr double kFidelityMin = 0.625;
inline constexpr double kFidelityMax = 1.0;

struct TradeoffPoint {
  double y;
  double x;
  double information;  // (G_avg − G_min)/(G_max − G_min), simplifies to x² + xy
  double disturbance;  // (F_max − F_avg)/(F_max − F_min), simplifies to x²
  double residual;     // (D − I)² − D(1 − I), zero on the curve
};

TradeoffPoint info_disturbance(const NetworkParams& params);

/// `samples` points with y uniform on [0, 1], ordered y descending, so the
/// curve runs from (I, D) = (0, 0) up to (1, 1). Requires samples >= 2.
std::vector<TradeoffPoint> tradeoff_curve(std::size_t samples);

}  // namespace qcomb
