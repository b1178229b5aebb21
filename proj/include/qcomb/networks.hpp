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

#include "qcomb/comb.hpp"

namespace qcomb {

/// Point on the constraint curve x² + xy + y² = 1 with x, y ∈ [0, 1].
/// (1, 0) is the projective network, (0, 1) the passive identity network.
class NetworkParams {
 public:
  /// Validates the constraint to within `tol` and the ranges; throws on
  /// violation.
  static NetworkParams from_xy(double x, double y, double tol = 1e-9);

  /// x = (−y + √(4 − 3y²)) / 2, the nonnegative constraint solution.
  static NetworkParams from_y(double y);

  double x() const { return x_; }
  double y() const { return y_; }
  double constraint_residual() const;

 private:
  NetworkParams(double x, double y) : x_(x), y_(y) {}
  double x_;
  double y_;
};

enum class NetworkKind { kProjective, kOptimalI };

/// R_i = (1/4) |U_i>><<U_i|_{3,0} ⊗ |U_i*>><<U_i*|_{2,1}: guesses an element
/// of `basis` and then acts as that element.
Tester projective_network(const UnitaryBasis& basis);

/// Dispatch on the kind; the projective network ignores `params` (it sits at
/// x = 1 and coincides with the optimal one there).
Tester make_network(NetworkKind kind, const UnitaryBasis& basis,
                    const NetworkParams& params);

/// T_i = (1/4) |X_i>><<X_i| with
/// |X_i>> = x |U_i>>_{3,0} |U_i*>>_{2,1} + y |I>>_{3,2} |I>>_{1,0};
/// both terms are brought to canonical wire order before summing.
/// Interpolates between the projective network (x=1) and doing nothing (y=1).
Tester optimal_i_network(const UnitaryBasis& basis, const NetworkParams& params);

struct ClosedFormMetrics {
  double gain_optimal;        // (5/8)x² + (5/8)xy + (1/4)y²
  double fidelity_optimal;    // (5/8)x² + xy + y²
  double gain_projective;     // 5/8
  double fidelity_projective; // 5/8
};

/// Average gain/fidelity when distinguishing one basis element from one
/// element of the mutually unbiased partner basis, equal weights.
ClosedFormMetrics closed_form_metrics(const NetworkParams& params);

/// Guess probabilities of the optimal-I network in closed form.
double probability_guess_matches(const NetworkParams& params);   // x² + xy + y²/4
double probability_guess_differs(const NetworkParams& params);   // y²/4
double probability_unbiased_input(const NetworkParams& params);  // (x² + xy + y²)/4

}  // namespace qcomb
