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

#include "qcomb/comb.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace qcomb {

namespace {

void require_unitary(const ComplexMatrix& u, const char* what) {
  if (unitarity_residual(u) > 1e-9) {
    throw std::invalid_argument(std::string(what) + ": matrix is not unitary");
  }
}

std::vector<int> intersection(const std::vector<int>& a,
                              const std::vector<int>& b) {
  std::vector<int> out;
  for (int w : a)
    if (std::find(b.begin(), b.end(), w) != b.end()) out.push_back(w);
  return out;
}

std::vector<int> difference(const std::vector<int>& a,
                            const std::vector<int>& b) {
  std::vector<int> out;
  for (int w : a)
    if (std::find(b.begin(), b.end(), w) == b.end()) out.push_back(w);
  return out;
}

}  // namespace

WiredOperator choi_of_unitary(const ComplexMatrix& u, int out_wire, int in_wire) {
  require_unitary(u, "choi_of_unitary");
  return outer(vectorize(u, out_wire, in_wire));
}

WiredOperator link(const WiredOperator& a, const WiredOperator& b) {
  const std::vector<int> shared = intersection(a.wires(), b.wires());
  const std::vector<int> a_only = difference(a.wires(), shared);
  const std::vector<int> b_only = difference(b.wires(), shared);

  const WiredOperator a_full =
      b_only.empty() ? a : tensor_product(a, identity_on(b_only, a.dim_per_wire()));

  WiredOperator b_t = b;
  for (int w : shared) b_t = partial_transpose(b_t, w);
  const WiredOperator b_full =
      a_only.empty() ? b_t
                     : tensor_product(b_t, identity_on(a_only, b.dim_per_wire()));

  // Both factors are now on the same canonical wire set.
  WiredOperator product(a_full.matrix() * b_full.matrix(), a_full.wires(),
                        a.dim_per_wire());
  if (shared.empty()) return product;
  return partial_trace(product, shared);
}

double TesterReport::worst() const {
  return std::max({std::max(0.0, -min_eigenvalue), chain_residual,
                   marginal_residual, trace_residual});
}

bool TesterReport::pass(double tol) const { return worst() <= tol; }

TesterReport validate_tester(const Tester& tester) {
  const int d = tester.dim;
  TesterReport report{0.0, 0.0, 0.0, 0.0};
  if (tester.elements.empty()) {
    report.chain_residual = 1.0;
    return report;
  }

  WiredOperator sum = tester.elements.front();
  ComplexMatrix acc = sum.matrix();
  for (std::size_t i = 1; i < tester.elements.size(); ++i) {
    acc = acc + tester.elements[i].matrix_in_order(sum.wires());
  }
  const WiredOperator r2(acc, sum.wires(), d);

  for (const auto& element : tester.elements) {
    report.min_eigenvalue =
        std::min(report.min_eigenvalue,
                 min_hermitian_eigenvalue(element.matrix()));
  }

  // First-stage comb recovered from the sum itself: R1 = Tr_{3,2}[R2] / d.
  const WiredOperator r1 =
      WiredOperator((1.0 / d) * partial_trace(r2, {3, 2}).matrix(), {1, 0}, d);
  const WiredOperator lhs = partial_trace(r2, {3});
  const WiredOperator rhs = tensor_product(identity_on({2}, d), r1);
  report.chain_residual = lhs.matrix().max_abs_diff(rhs.matrix());

  const WiredOperator r1_marginal = partial_trace(r1, {1});
  report.marginal_residual =
      r1_marginal.matrix().max_abs_diff(ComplexMatrix::identity(d));

  report.trace_residual = std::abs(r2.trace() - Complex{static_cast<double>(d * d), 0.0});
  return report;
}

std::vector<double> outcome_probabilities(const Tester& tester,
                                          const ComplexMatrix& p) {
  require_unitary(p, "outcome_probabilities");
  const int d = tester.dim;
  const WiredOperator probe = tensor_product(
      tensor_product(identity_on({3}, d), outer(vectorize(p.conjugated(), 2, 1))),
      identity_on({0}, d));
  std::vector<double> probs;
  probs.reserve(tester.elements.size());
  for (const auto& element : tester.elements) {
    const Complex tr = (element.matrix() * probe.matrix()).trace();
    probs.push_back(tr.real() / d);
  }
  return probs;
}

double gain(const ComplexMatrix& guess, const ComplexMatrix& p) {
  const double d = static_cast<double>(p.rows());
  return std::norm((guess * p.dagger()).trace()) / (d * d);
}

double network_gain(const Tester& tester, const ComplexMatrix& p) {
  const auto probs = outcome_probabilities(tester, p);
  double g = 0.0;
  for (std::size_t i = 0; i < probs.size(); ++i) {
    g += probs[i] * gain(tester.guesses.elements[i], p);
  }
  return g;
}

double network_fidelity(const Tester& tester, const ComplexMatrix& p) {
  const int d = tester.dim;
  const WiredKet probe =
      tensor_product(vectorize(p, 3, 0), vectorize(p.conjugated(), 2, 1));
  double f = 0.0;
  for (const auto& element : tester.elements) {
    // <<probe| R |probe>>
    const std::size_t n = probe.amps().size();
    Complex s{0.0, 0.0};
    for (std::size_t i = 0; i < n; ++i) {
      Complex row{0.0, 0.0};
      for (std::size_t j = 0; j < n; ++j)
        row += element.matrix()(i, j) * probe.amps()[j];
      s += std::conj(probe.amps()[i]) * row;
    }
    f += s.real();
  }
  return f / (d * d);
}

}  // namespace qcomb
