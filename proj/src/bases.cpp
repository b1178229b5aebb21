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

#include "qcomb/bases.hpp"

#include <cmath>
#include <stdexcept>

namespace qcomb {

namespace {
const Complex kI{0.0, 1.0};
}

ComplexMatrix pauli_x() {
  return ComplexMatrix::from_rows({{0.0, 1.0}, {1.0, 0.0}});
}

ComplexMatrix pauli_y() {
  return ComplexMatrix::from_rows({{0.0, -kI}, {kI, 0.0}});
}

ComplexMatrix pauli_z() {
  return ComplexMatrix::from_rows({{1.0, 0.0}, {0.0, -1.0}});
}

const UnitaryBasis& standard_basis() {
  static const UnitaryBasis basis{
      "standard",
      {ComplexMatrix::identity(2), pauli_x(), pauli_y(), pauli_z()}};
  return basis;
}

ComplexMatrix muub_element(const MuubSigns& signs) {
  if (signs.s2 * signs.s3 * signs.s4 != -1) {
    throw std::invalid_argument("muub_element: sign product must be -1");
  }
  const ComplexMatrix sum =
      static_cast<double>(signs.s2) * pauli_x() +
      static_cast<double>(signs.s3) * pauli_y() +
      static_cast<double>(signs.s4) * pauli_z();
  return 0.5 * (ComplexMatrix::identity(2) + kI * sum);
}

const UnitaryBasis& muub_basis() {
  static const UnitaryBasis basis = [] {
    UnitaryBasis b;
    b.name = "muub";
    for (const auto& signs : kMuubSigns) b.elements.push_back(muub_element(signs));
    return b;
  }();
  return basis;
}

Decomposition decompose(const ComplexMatrix& p, const UnitaryBasis& basis) {
  if (p.rows() != 2 || p.cols() != 2) {
    throw std::invalid_argument("decompose: expected a 2x2 matrix");
  }
  Decomposition dec;
  dec.basis_name = basis.name;
  for (std::size_t j = 0; j < 4; ++j) {
    dec.coefficients[j] = (basis.elements[j].dagger() * p).trace() / 2.0;
  }
  return dec;
}

ComplexMatrix reconstruct(const Decomposition& dec, const UnitaryBasis& basis) {
  ComplexMatrix out(2, 2);
  for (std::size_t j = 0; j < 4; ++j) {
    out = out + dec.coefficients[j] * basis.elements[j];
  }
  return out;
}

BasisReport validate_basis(const UnitaryBasis& basis) {
  BasisReport report{0.0, 0.0};
  const double d = 2.0;
  for (std::size_t i = 0; i < basis.elements.size(); ++i) {
    report.max_unitarity_residual = std::max(
        report.max_unitarity_residual, unitarity_residual(basis.elements[i]));
    for (std::size_t j = 0; j < basis.elements.size(); ++j) {
      const Complex ov = (basis.elements[i].dagger() * basis.elements[j]).trace();
      const double res = i == j ? std::abs(ov - d) : std::abs(ov);
      report.max_orthogonality_residual =
          std::max(report.max_orthogonality_residual, res);
    }
  }
  return report;
}

UnbiasednessReport is_mutually_unbiased(const UnitaryBasis& a,
                                        const UnitaryBasis& b, double tol) {
  double worst = 0.0;
  for (const auto& ai : a.elements) {
    for (const auto& bj : b.elements) {
      const double w = std::norm((ai.dagger() * bj).trace());
      worst = std::max(worst, std::abs(w - 1.0));
    }
  }
  return UnbiasednessReport{worst <= tol, worst};
}

ComplexMatrix haar_random_su2(SplitMix64& rng) {
  // Ginibre draw, Gram-Schmidt on the columns, then det normalized to one.
  Complex g[2][2];
  for (auto& row : g)
    for (auto& v : row)
      v = Complex{rng.next_gaussian(), rng.next_gaussian()} / std::sqrt(2.0);

  Complex c0[2] = {g[0][0], g[1][0]};
  Complex c1[2] = {g[0][1], g[1][1]};
  const double n0 = std::sqrt(std::norm(c0[0]) + std::norm(c0[1]));
  c0[0] /= n0;
  c0[1] /= n0;
  const Complex proj = std::conj(c0[0]) * c1[0] + std::conj(c0[1]) * c1[1];
  c1[0] -= proj * c0[0];
  c1[1] -= proj * c0[1];
  const double n1 = std::sqrt(std::norm(c1[0]) + std::norm(c1[1]));
  c1[0] /= n1;
  c1[1] /= n1;

  ComplexMatrix u = ComplexMatrix::from_rows({{c0[0], c1[0]}, {c0[1], c1[1]}});
  const Complex det = u(0, 0) * u(1, 1) - u(0, 1) * u(1, 0);
  const Complex phase = std::sqrt(det);  // |det| = 1 already
  return (Complex{1.0, 0.0} / phase) * u;
}

}  // namespace qcomb
