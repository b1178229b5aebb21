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

#include <array>
#include <string>
#include <vector>

#include "qcomb/complex_matrix.hpp"
#include "qcomb/rng.hpp"

namespace qcomb {

inline constexpr int kQubitDim = 2;

ComplexMatrix pauli_x();
ComplexMatrix pauli_y();
ComplexMatrix pauli_z();

/// Orthogonal basis of d^2 unitaries: Tr[U_i†U_j] = d δ_ij.
struct UnitaryBasis {
  std::string name;
  std::vector<ComplexMatrix> elements;
};

/// {I, σx, σy, σz}, in that order.
const UnitaryBasis& standard_basis();

/// Sign vector (s2, s3, s4) with product -1; exactly four are admissible.
struct MuubSigns {
  int s2, s3, s4;
};

inline constexpr std::array<MuubSigns, 4> kMuubSigns = {
    MuubSigns{+1, +1, -1},
    MuubSigns{+1, -1, +1},
    MuubSigns{-1, +1, +1},
    MuubSigns{-1, -1, -1},
};

/// (I + i(s2 σx + s3 σy + s4 σz)) / 2; unitary for admissible signs.
ComplexMatrix muub_element(const MuubSigns& signs);

/// The four muub_element() operators over kMuubSigns, pairwise orthogonal
/// and mutually unbiased to every standard-basis element:
/// |Tr[M†U_j]|^2 = 1 for all pairs.
const UnitaryBasis& muub_basis();

/// Coefficients a_j with P = Σ_j a_j U_j; Σ|a_j|^2 = 1 for unitary P.
struct Decomposition {
  std::array<Complex, 4> coefficients;
  std::string basis_name;
};

/// a_j = Tr[U_j†P] / d.
Decomposition decompose(const ComplexMatrix& p, const UnitaryBasis& basis);

ComplexMatrix reconstruct(const Decomposition& dec, const UnitaryBasis& basis);

struct BasisReport {
  double max_unitarity_residual;
  double max_orthogonality_residual;  // off-diagonal |Tr[U_i†U_j]| and |Tr[U_i†U_i] - d|
  bool ok(double eps = kDefaultEps) const {
    return max_unitarity_residual <= eps && max_orthogonality_residual <= eps;
  }
};

BasisReport validate_basis(const UnitaryBasis& basis);

struct UnbiasednessReport {
  bool mutually_unbiased;
  double max_residual;  // worst | |Tr[A_i†B_j]|^2 - 1 |
};

UnbiasednessReport is_mutually_unbiased(const UnitaryBasis& a,
                                        const UnitaryBasis& b,
                                        double tol = 1e-9);

/// Haar-distributed SU(2) element: complex Ginibre draw, Gram-Schmidt on the
/// columns, then a global phase fixing det = 1.
ComplexMatrix haar_random_su2(SplitMix64& rng);

}  // namespace qcomb
