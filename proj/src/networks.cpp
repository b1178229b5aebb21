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

#include "qcomb/networks.hpp"

#include <cmath>
#include <stdexcept>

namespace qcomb {

NetworkParams NetworkParams::from_xy(double x, double y, double tol) {
  if (x < 0.0 || x > 1.0 || y < 0.0 || y > 1.0) {
    throw std::invalid_argument("NetworkParams: x and y must lie in [0, 1]");
  }
  NetworkParams params(x, y);
  if (std::abs(params.constraint_residual()) > tol) {
    throw std::invalid_argument(
        "NetworkParams: x^2 + xy + y^2 = 1 violated beyond tolerance");
  }
  return params;
}

NetworkParams NetworkParams::from_y(double y) {
  if (y < 0.0 || y > 1.0) {
    throw std::invalid_argument("NetworkParams: y must lie in [0, 1]");
  }
  const double x = (-y + std::sqrt(4.0 - 3.0 * y * y)) / 2.0;
  return NetworkParams(x, y);
}

double NetworkParams::constraint_residual() const {
  return x_ * x_ + x_ * y_ + y_ * y_ - 1.0;
}

Tester projective_network(const UnitaryBasis& basis) {
  Tester tester;
  tester.guesses = basis;
  for (const auto& u : basis.elements) {
    const WiredKet element_ket =
        tensor_product(vectorize(u, 3, 0), vectorize(u.conjugated(), 2, 1));
    tester.elements.push_back(
        WiredOperator(0.25 * outer(element_ket).matrix(), element_ket.wires()));
  }
  return tester;
}

Tester optimal_i_network(const UnitaryBasis& basis, const NetworkParams& params) {
  const ComplexMatrix id = ComplexMatrix::identity(2);
  const WiredKet passive = tensor_product(vectorize(id, 3, 2), vectorize(id, 1, 0));
  Tester tester;
  tester.guesses = basis;
  for (const auto& u : basis.elements) {
    WiredKet ket = params.x() * tensor_product(vectorize(u, 3, 0),
                                               vectorize(u.conjugated(), 2, 1));
    ket += params.y() * passive;
    tester.elements.push_back(
        WiredOperator(0.25 * outer(ket).matrix(), ket.wires()));
  }
  return tester;
}

Tester make_network(NetworkKind kind, const UnitaryBasis& basis,
                    const NetworkParams& params) {
  if (kind == NetworkKind::kProjective) return projective_network(basis);
  return optimal_i_network(basis, params);
}

ClosedFormMetrics closed_form_metrics(const NetworkParams& params) {
  const double x = params.x();
  const double y = params.y();
  ClosedFormMetrics metrics;
  metrics.gain_optimal = 0.625 * x * x + 0.625 * x * y + 0.25 * y * y;
  metrics.fidelity_optimal = 0.625 * x * x + x * y + y * y;
  metrics.gain_projective = 0.625;
  metrics.fidelity_projective = 0.625;
  return metrics;
}

double probability_guess_matches(const NetworkParams& params) {
  const double x = params.x();
  const double y = params.y();
  return x * x + x * y + 0.25 * y * y;
}

double probability_guess_differs(const NetworkParams& params) {
  const double y = params.y();
  return 0.25 * y * y;
}

double probability_unbiased_input(const NetworkParams& params) {
  const double x = params.x();
  const double y = params.y();
  return 0.25 * (x * x + x * y + y * y);
}

}  // namespace qcomb
