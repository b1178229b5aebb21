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

#include "qcomb/tradeoff.hpp"

#include <stdexcept>

namespace qcomb {

TradeoffPoint info_disturbance(const NetworkParams& params) {
  const ClosedFormMetrics metrics = closed_form_metrics(params);
  TradeoffPoint point;
  point.y = params.y();
  point.x = params.x();
  point.information = (metrics.gain_optimal - kGainMin) / (kGainMax - kGainMin);
  point.disturbance =
      (kFidelityMax - metrics.fidelity_optimal) / (kFidelityMax - kFidelityMin);
  point.residual = (point.disturbance - point.information) *
                       (point.disturbance - point.information) -
                   point.disturbance * (1.0 - point.information);
  return point;
}

std::vector<TradeoffPoint> tradeoff_curve(std::size_t samples) {
  if (samples < 2) {
    throw std::invalid_argument("tradeoff_curve: need at least two samples");
  }
  std::vector<TradeoffPoint> points;
  points.reserve(samples);
  for (std::size_t k = 0; k < samples; ++k) {
    const double y =
        static_cast<double>(samples - 1 - k) / static_cast<double>(samples - 1);
    points.push_back(info_disturbance(NetworkParams::from_y(y)));
  }
  return points;
}

}  // namespace qcomb
