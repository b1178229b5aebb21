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

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <vector>

namespace qcomb {

using Complex = std::complex<double>;

/// Absolute tolerance used by approximate comparisons throughout the library.
inline constexpr double kDefaultEps = 1e-12;

/// Dense row-major complex matrix. Operations return new values and never
/// mutate their inputs; instances are safe to share across threads.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  ComplexMatrix(std::size_t rows, std::size_t cols);
  ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries);

  static ComplexMatrix identity(std::size_t n);
  static ComplexMatrix from_rows(
      std::initializer_list<std::initializer_list<Complex>> rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Complex& operator()(std::size_t i, std::size_t j) {
    return entries_[i * cols_ + j];
  }
  const Complex& operator()(std::size_t i, std::size_t j) const {
    return entries_[i * cols_ + j];
  }

  const std::vector<Complex>& entries() const { return entries_; }

  ComplexMatrix dagger() const;
  ComplexMatrix transposed() const;
  ComplexMatrix conjugated() const;
  Complex trace() const;

  double max_abs() const;
  double max_abs_diff(const ComplexMatrix& other) const;
  bool approx_equal(const ComplexMatrix& other, double eps = kDefaultEps) const;

  /// Exact structural equality (same shape, bit-identical entries).
  bool operator==(const ComplexMatrix& other) const;

  friend ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b);
  friend ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b);
  friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
  friend ComplexMatrix operator*(Complex scalar, const ComplexMatrix& m);
  friend ComplexMatrix operator*(double scalar, const ComplexMatrix& m);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Complex> entries_;
};

/// Kronecker product; row/column index of `a` forms the high digits.
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

/// Max-abs residual of U†U - I; zero exactly when U is unitary.
double unitarity_residual(const ComplexMatrix& u);

/// Eigenvalues of the Hermitian part (m + m†)/2, ascending. Cyclic Jacobi
/// sweeps; intended for the small matrices this library works with.
std::vector<double> hermitian_eigenvalues(const ComplexMatrix& m);

double min_hermitian_eigenvalue(const ComplexMatrix& m);

}  // namespace qcomb
