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

#include <vector>

#include "qcomb/bases.hpp"
#include "qcomb/wired.hpp"

namespace qcomb {

// Wire layout of a 2-tester: 0 tester input, 1 slot input, 2 slot output,
// 3 tester output. The tested channel plugs into wires (2, 1).
inline const std::vector<int> kTesterWires = {3, 2, 1, 0};

/// Choi operator |U>><<U| of the unitary channel ρ -> UρU† on
/// (out_wire, in_wire). Throws if `u` fails unitarity beyond 1e-9.
WiredOperator choi_of_unitary(const ComplexMatrix& u, int out_wire,
                              int in_wire);

/// Link product: Tr_shared[(A ⊗ I)(I ⊗ B^{T_shared})], the composition rule
/// for networks in Choi form. Output wires are the symmetric difference;
/// disjoint wires degrade to a plain tensor product.
WiredOperator link(const WiredOperator& a, const WiredOperator& b);

/// Generalized instrument {R_i} on wires (3,2,1,0); element i stands for the
/// guess `guesses.elements[i]`.
struct Tester {
  std::vector<WiredOperator> elements;
  UnitaryBasis guesses;
  int dim = kQubitDim;
};

/// Residuals of the causal-normalization conditions. The first-stage comb is
/// recovered as R1 = Tr_{3,2}[ΣR_i] / d and checked for consistency, so
/// callers supply only the elements.
struct TesterReport {
  double min_eigenvalue;     // most negative eigenvalue among Hermitized elements
  double chain_residual;     // ‖Tr_3[R2] − I_2 ⊗ R1‖_max
  double marginal_residual;  // ‖Tr_1[R1] − I_0‖_max
  double trace_residual;     // |Tr[R2] − d^2|

  double worst() const;
  bool pass(double tol = 1e-10) const;
};

TesterReport validate_tester(const Tester& tester);

/// Pr(U_i|P) = (1/d) Tr[R_i (I_3 ⊗ |P*>><<P*|_{2,1} ⊗ I_0)]; sums to one for
/// a deterministic tester. Throws on non-unitary `p`.
std::vector<double> outcome_probabilities(const Tester& tester,
                                          const ComplexMatrix& p);

/// |Tr[guess P†]|^2 / d^2, which is one exactly when the guess matches P.
double gain(const ComplexMatrix& guess, const ComplexMatrix& p);

/// Σ_i Pr(U_i|P) g(U_i, P).
double network_gain(const Tester& tester, const ComplexMatrix& p);

/// (1/d^2) Σ_i <<P|<<P*| R_i |P>>|P*>> is the channel fidelity of the whole
/// network against P itself.
double network_fidelity(const Tester& tester, const ComplexMatrix& p);

}  // namespace qcomb
