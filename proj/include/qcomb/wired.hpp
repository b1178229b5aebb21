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

#include "qcomb/complex_matrix.hpp"

namespace qcomb {

/// Vector living on an ordered set of labeled wires, each of dimension
/// `dim`. Storage is canonical: wire labels descending, the leftmost wire
/// forming the most significant base-`dim` digit of the amplitude index.
///
/// The two-wire case built by vectorize() is the double-ket |M>> with
/// amplitude <i|M|j> at index i*dim + j, so that <<M|N>> = Tr[M†N].
class WiredKet {
 public:
  /// `wires` gives the digit order of `amps` as passed; the constructor
  /// permutes into canonical (descending) storage. Labels must be distinct.
  WiredKet(std::vector<Complex> amps, std::vector<int> wires, int dim = 2);

  const std::vector<Complex>& amps() const { return amps_; }
  const std::vector<int>& wires() const { return wires_; }
  int dim() const { return dim_; }

  double squared_norm() const;

  WiredKet& operator+=(const WiredKet& other);  // requires identical wires
  friend WiredKet operator*(Complex scalar, const WiredKet& k);
  friend WiredKet operator*(double scalar, const WiredKet& k);

 private:
  std::vector<Complex> amps_;
  std::vector<int> wires_;  // descending
  int dim_;
};

/// |M>> on (out_wire, in_wire). Throws on non-square input.
WiredKet vectorize(const ComplexMatrix& m, int out_wire, int in_wire);

/// <<a|b>>; wires must match.
Complex overlap(const WiredKet& a, const WiredKet& b);

/// Kets on disjoint wires combine into one on the union (canonical order).
WiredKet tensor_product(const WiredKet& a, const WiredKet& b);

/// Square operator on labeled wires, stored in canonical (descending wire)
/// order. Matrix side length is dim^(number of wires).
class WiredOperator {
 public:
  WiredOperator(ComplexMatrix matrix, std::vector<int> wires, int dim = 2);

  const ComplexMatrix& matrix() const { return matrix_; }
  const std::vector<int>& wires() const { return wires_; }
  int dim_per_wire() const { return dim_; }
  Complex trace() const { return matrix_.trace(); }

  /// Matrix permuted from canonical storage into the requested wire order.
  /// Rebuilding a WiredOperator from the result restores the original
  /// bit-exactly.
  ComplexMatrix matrix_in_order(const std::vector<int>& order) const;

 private:
  ComplexMatrix matrix_;
  std::vector<int> wires_;  // descending
  int dim_;
};

/// Identity on the given wires; no wires gives the scalar 1 (a 1x1 matrix).
WiredOperator identity_on(std::vector<int> wires, int dim = 2);

/// Rank-one projector |k><k| on the ket's wires.
WiredOperator outer(const WiredKet& k);

/// Operators on disjoint wires combine; overlapping labels throw.
WiredOperator tensor_product(const WiredOperator& a, const WiredOperator& b);

/// Trace out `traced` wires; result acts on the remaining wires. Tracing
/// every wire leaves a 0-wire scalar. Unknown labels throw.
WiredOperator partial_trace(const WiredOperator& op,
                            const std::vector<int>& traced);

/// Transposition on a single tensor factor; an involution.
WiredOperator partial_transpose(const WiredOperator& op, int wire);

}  // namespace qcomb
