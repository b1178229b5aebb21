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

#include <cmath>
#include <stdexcept>

#include "doctest.h"
#include "qcomb/bases.hpp"
#include "qcomb/wired.hpp"

using namespace qcomb;

namespace {

// Independent oracle: swap the two wire digits of a 4x4 matrix by explicit
// index arithmetic, without going through WiredOperator.
ComplexMatrix swap_two_wire_digits(const ComplexMatrix& m) {
  ComplexMatrix out(4, 4);
  for (std::size_t i = 0; i < 4; ++i) {
    const std::size_t ri = (i & 1) * 2 + (i >> 1);
    for (std::size_t j = 0; j < 4; ++j) {
      const std::size_t rj = (j & 1) * 2 + (j >> 1);
      out(ri, rj) = m(i, j);
    }
  }
  return out;
}

}  // namespace

TEST_CASE("vectorize maps <i|M|j> to index i*d+j") {
  const WiredKet id_ket = vectorize(ComplexMatrix::identity(2), 1, 0);
  CHECK(id_ket.amps()[0] == Complex{1.0, 0.0});
  CHECK(id_ket.amps()[1] == Complex{0.0, 0.0});
  CHECK(id_ket.amps()[2] == Complex{0.0, 0.0});
  CHECK(id_ket.amps()[3] == Complex{1.0, 0.0});

  const WiredKet x_ket = vectorize(pauli_x(), 1, 0);
  CHECK(x_ket.amps()[0] == Complex{0.0, 0.0});
  CHECK(x_ket.amps()[1] == Complex{1.0, 0.0});
  CHECK(x_ket.amps()[2] == Complex{1.0, 0.0});
  CHECK(x_ket.amps()[3] == Complex{0.0, 0.0});

  CHECK(overlap(x_ket, x_ket) == Complex{2.0, 0.0});  // Tr[σx†σx]
  CHECK_THROWS_AS(vectorize(ComplexMatrix(2, 3), 1, 0), std::invalid_argument);
}

TEST_CASE("double kets of unitaries have squared norm d") {
  SplitMix64 rng(11);
  for (int k = 0; k < 10; ++k) {
    const WiredKet ket = vectorize(haar_random_su2(rng), 1, 0);
    CHECK(ket.squared_norm() == doctest::Approx(2.0).epsilon(1e-12));
  }
}

TEST_CASE("tensor product of identities and canonical ordering") {
  const WiredOperator id1(ComplexMatrix::identity(2), {1});
  const WiredOperator id0(ComplexMatrix::identity(2), {0});
  const WiredOperator both = tensor_product(id1, id0);
  CHECK(both.matrix() == ComplexMatrix::identity(4));
  CHECK(both.wires() == std::vector<int>{1, 0});

  const WiredOperator x1(pauli_x(), {1});
  const WiredOperator x_then_id = tensor_product(x1, id0);
  // Block form [[0, I], [I, 0]].
  CHECK(x_then_id.matrix() == kron(pauli_x(), ComplexMatrix::identity(2)));
}

TEST_CASE("tensor product commutes up to the wire permutation") {
  const WiredOperator id0(ComplexMatrix::identity(2), {0});
  const WiredOperator x1(pauli_x(), {1});
  const WiredOperator a = tensor_product(x1, id0);
  const WiredOperator b = tensor_product(id0, x1);
  CHECK(a.matrix() == b.matrix());

  // Against the explicit permutation oracle: kron in (0, 1) order, digits
  // swapped by hand, must equal canonical (1, 0) storage.
  const ComplexMatrix raw = kron(ComplexMatrix::identity(2), pauli_x());
  CHECK(b.matrix().max_abs_diff(swap_two_wire_digits(raw)) == 0.0);

  CHECK_THROWS_AS(tensor_product(x1, x1), std::invalid_argument);
}

TEST_CASE("partial trace marginals and factorization") {
  const WiredOperator bell = outer(vectorize(ComplexMatrix::identity(2), 1, 0));
  const WiredOperator reduced = partial_trace(bell, {0});
  CHECK(reduced.wires() == std::vector<int>{1});
  CHECK(reduced.matrix().approx_equal(ComplexMatrix::identity(2)));

  // Trace over everything equals the scalar trace.
  const WiredOperator all_traced = partial_trace(bell, {1, 0});
  CHECK(all_traced.wires().empty());
  CHECK(all_traced.matrix()(0, 0) == bell.trace());

  SplitMix64 rng(3);
  for (int k = 0; k < 20; ++k) {
    const ComplexMatrix a = haar_random_su2(rng);
    const ComplexMatrix b = haar_random_su2(rng);
    const WiredOperator prod =
        tensor_product(WiredOperator(a, {1}), WiredOperator(b, {0}));
    const WiredOperator left = partial_trace(prod, {1});
    CHECK(left.matrix().max_abs_diff(a.trace() * b) <= 1e-12);
  }

  CHECK_THROWS_AS(partial_trace(bell, {5}), std::invalid_argument);
}

TEST_CASE("partial transpose is an involution and acts on one factor") {
  SplitMix64 rng(5);
  const ComplexMatrix a = haar_random_su2(rng);
  const ComplexMatrix b = haar_random_su2(rng);
  const WiredOperator prod =
      tensor_product(WiredOperator(a, {1}), WiredOperator(b, {0}));

  const WiredOperator once = partial_transpose(prod, 1);
  CHECK(once.matrix().max_abs_diff(kron(a.transposed(), b)) <= 1e-15);
  const WiredOperator twice = partial_transpose(once, 1);
  CHECK(twice.matrix() == prod.matrix());
  CHECK(once.trace() == prod.trace());

  const WiredOperator bell = outer(vectorize(pauli_y(), 1, 0));
  CHECK(partial_transpose(partial_transpose(bell, 0), 0).matrix() ==
        bell.matrix());
  CHECK_THROWS_AS(partial_transpose(bell, 7), std::invalid_argument);
}

TEST_CASE("reorder round trip is bit-exact") {
  SplitMix64 rng(9);
  const WiredKet ket = tensor_product(vectorize(haar_random_su2(rng), 3, 0),
                                      vectorize(haar_random_su2(rng), 2, 1));
  const WiredOperator op = outer(ket);
  const std::vector<int> shuffled = {1, 3, 0, 2};
  const ComplexMatrix permuted = op.matrix_in_order(shuffled);
  const WiredOperator rebuilt(permuted, shuffled);
  CHECK(rebuilt.matrix() == op.matrix());
  CHECK(rebuilt.wires() == op.wires());
}

TEST_CASE("vectorization identities over random unitaries") {
  SplitMix64 rng(2024);
  const WiredKet id_ket = vectorize(ComplexMatrix::identity(2), 1, 0);
  for (int k = 0; k < 100; ++k) {
    const ComplexMatrix m = haar_random_su2(rng);
    const ComplexMatrix n = haar_random_su2(rng);
    const WiredKet direct = vectorize(m, 1, 0);

    const ComplexMatrix left =
        kron(m, ComplexMatrix::identity(2));  // (M ⊗ I) in (1, 0) order
    const ComplexMatrix right = kron(ComplexMatrix::identity(2), m.transposed());
    for (std::size_t i = 0; i < 4; ++i) {
      Complex via_left{0.0, 0.0};
      Complex via_right{0.0, 0.0};
      for (std::size_t j = 0; j < 4; ++j) {
        via_left += left(i, j) * id_ket.amps()[j];
        via_right += right(i, j) * id_ket.amps()[j];
      }
      CHECK(std::abs(via_left - direct.amps()[i]) <= 1e-12);
      CHECK(std::abs(via_right - direct.amps()[i]) <= 1e-12);
    }

    const Complex ip = overlap(direct, vectorize(n, 1, 0));
    CHECK(std::abs(ip - (m.dagger() * n).trace()) <= 1e-12);
  }
}

TEST_CASE("wire labels are opaque: sparse labels behave like dense ones") {
  SplitMix64 rng(15);
  const ComplexMatrix a = haar_random_su2(rng);
  const ComplexMatrix b = haar_random_su2(rng);
  const ComplexMatrix c = haar_random_su2(rng);
  const WiredOperator op = tensor_product(
      tensor_product(WiredOperator(a, {9}), WiredOperator(b, {5})),
      WiredOperator(c, {2}));
  CHECK(op.wires() == std::vector<int>{9, 5, 2});
  CHECK(op.matrix().max_abs_diff(kron(kron(a, b), c)) <= 1e-15);

  const WiredOperator traced = partial_trace(op, {5});
  CHECK(traced.wires() == std::vector<int>{9, 2});
  CHECK(traced.matrix().max_abs_diff(b.trace() * kron(a, c)) <= 1e-12);

  const WiredOperator transposed = partial_transpose(op, 9);
  CHECK(transposed.matrix().max_abs_diff(kron(kron(a.transposed(), b), c)) <=
        1e-15);
}

TEST_CASE("the tensor machinery is dimension-generic") {
  // A 3-level shift operator: vectorization norm equals the dimension and
  // the maximally entangled marginal is still the identity.
  ComplexMatrix shift(3, 3);
  shift(0, 2) = 1.0;
  shift(1, 0) = 1.0;
  shift(2, 1) = 1.0;
  const WiredKet ket = vectorize(shift, 1, 0);
  CHECK(ket.dim() == 3);
  CHECK(ket.squared_norm() == doctest::Approx(3.0).epsilon(1e-15));
  CHECK(std::abs(overlap(ket, ket) - Complex{3.0, 0.0}) <= 1e-15);

  const WiredOperator projector = outer(ket);
  const WiredOperator marginal = partial_trace(projector, {0});
  CHECK(marginal.matrix().max_abs_diff(ComplexMatrix::identity(3)) <= 1e-15);
  CHECK(partial_transpose(partial_transpose(projector, 1), 1).matrix() ==
        projector.matrix());
}

TEST_CASE("hermitian eigenvalues: known spectra and moment checks") {
  for (const ComplexMatrix& sigma : {pauli_x(), pauli_y(), pauli_z()}) {
    const auto eig = hermitian_eigenvalues(sigma);
    CHECK(eig[0] == doctest::Approx(-1.0).epsilon(1e-12));
    CHECK(eig[1] == doctest::Approx(1.0).epsilon(1e-12));
  }

  // Random Hermitian H: eigenvalue power sums must match matrix traces.
  SplitMix64 rng(77);
  ComplexMatrix g(6, 6);
  for (std::size_t i = 0; i < 6; ++i)
    for (std::size_t j = 0; j < 6; ++j)
      g(i, j) = Complex{rng.next_gaussian(), rng.next_gaussian()};
  const ComplexMatrix h = 0.5 * (g + g.dagger());
  const auto eig = hermitian_eigenvalues(h);
  double s1 = 0.0, s2 = 0.0, s3 = 0.0;
  for (double v : eig) {
    s1 += v;
    s2 += v * v;
    s3 += v * v * v;
  }
  CHECK(s1 == doctest::Approx(h.trace().real()).epsilon(1e-10));
  CHECK(s2 == doctest::Approx((h * h).trace().real()).epsilon(1e-10));
  CHECK(s3 == doctest::Approx((h * h * h).trace().real()).epsilon(1e-10));

  // Gram matrices are positive semidefinite.
  const ComplexMatrix psd = g.dagger() * g;
  CHECK(min_hermitian_eigenvalue(psd) >= -1e-10);
}
