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

#include "qcomb/wired.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <set>
#include <stdexcept>
#include <string>

namespace qcomb {

namespace {

std::size_t pow_dim(int dim, std::size_t n) {
  std::size_t out = 1;
  for (std::size_t i = 0; i < n; ++i) out *= static_cast<std::size_t>(dim);
  return out;
}

void require_distinct(const std::vector<int>& wires) {
  std::set<int> seen(wires.begin(), wires.end());
  if (seen.size() != wires.size()) {
    throw std::invalid_argument("wire labels must be distinct");
  }
}

std::vector<int> descending(std::vector<int> wires) {
  std::sort(wires.begin(), wires.end(), std::greater<int>());
  return wires;
}

// index_map[k] = index under `from` digit order of the k-th index under `to`
// digit order. Leftmost wire is the most significant base-`dim` digit.
std::vector<std::size_t> index_map(const std::vector<int>& from,
                                   const std::vector<int>& to, int dim) {
  const std::size_t n = from.size();
  std::vector<std::size_t> from_pos(n);
  for (std::size_t p = 0; p < n; ++p) {
    const auto it = std::find(from.begin(), from.end(), to[p]);
    if (it == from.end()) {
      throw std::invalid_argument("unknown wire label " + std::to_string(to[p]));
    }
    from_pos[p] = static_cast<std::size_t>(it - from.begin());
  }
  const std::size_t total = pow_dim(dim, n);
  std::vector<std::size_t> map(total);
  std::vector<std::size_t> digits(n);
  for (std::size_t idx = 0; idx < total; ++idx) {
    std::size_t rem = idx;
    for (std::size_t p = n; p-- > 0;) {
      digits[p] = rem % static_cast<std::size_t>(dim);
      rem /= static_cast<std::size_t>(dim);
    }
    std::size_t src = 0;
    std::vector<std::size_t> from_digits(n, 0);
    for (std::size_t p = 0; p < n; ++p) from_digits[from_pos[p]] = digits[p];
    for (std::size_t p = 0; p < n; ++p)
      src = src * static_cast<std::size_t>(dim) + from_digits[p];
    map[idx] = src;
  }
  return map;
}

}  // namespace

WiredKet::WiredKet(std::vector<Complex> amps, std::vector<int> wires, int dim)
    : dim_(dim) {
  require_distinct(wires);
  if (amps.size() != pow_dim(dim, wires.size())) {
    throw std::invalid_argument("WiredKet: amplitude count does not match wires");
  }
  wires_ = descending(wires);
  if (wires_ == wires) {
    amps_ = std::move(amps);
    return;
  }
  const auto map = index_map(wires, wires_, dim);
  amps_.resize(amps.size());
  for (std::size_t i = 0; i < amps.size(); ++i) amps_[i] = amps[map[i]];
}

double WiredKet::squared_norm() const {
  double s = 0.0;
  for (const auto& a : amps_) s += std::norm(a);
  return s;
}

WiredKet& WiredKet::operator+=(const WiredKet& other) {
  if (wires_ != other.wires_ || dim_ != other.dim_) {
    throw std::invalid_argument("WiredKet + : wires differ");
  }
  for (std::size_t i = 0; i < amps_.size(); ++i) amps_[i] += other.amps_[i];
  return *this;
}

WiredKet operator*(Complex scalar, const WiredKet& k) {
  WiredKet out = k;
  for (auto& a : out.amps_) a *= scalar;
  return out;
}

WiredKet operator*(double scalar, const WiredKet& k) {
  return Complex{scalar, 0.0} * k;
}

WiredKet vectorize(const ComplexMatrix& m, int out_wire, int in_wire) {
  if (!m.is_square()) {
    throw std::invalid_argument("vectorize: matrix is not square");
  }
  const int d = static_cast<int>(m.rows());
  std::vector<Complex> amps(static_cast<std::size_t>(d) * d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      amps[static_cast<std::size_t>(i) * d + j] = m(i, j);
  return WiredKet(std::move(amps), {out_wire, in_wire}, d);
}

Complex overlap(const WiredKet& a, const WiredKet& b) {
  if (a.wires() != b.wires() || a.dim() != b.dim()) {
    throw std::invalid_argument("overlap: wires differ");
  }
  Complex s{0.0, 0.0};
  for (std::size_t i = 0; i < a.amps().size(); ++i)
    s += std::conj(a.amps()[i]) * b.amps()[i];
  return s;
}

WiredKet tensor_product(const WiredKet& a, const WiredKet& b) {
  if (a.dim() != b.dim()) {
    throw std::invalid_argument("tensor_product: wire dimensions differ");
  }
  std::vector<int> wires = a.wires();
  for (int w : b.wires()) {
    if (std::find(wires.begin(), wires.end(), w) != wires.end()) {
      throw std::invalid_argument("tensor_product: wire label collision on " +
                                  std::to_string(w));
    }
    wires.push_back(w);
  }
  std::vector<Complex> amps(a.amps().size() * b.amps().size());
  for (std::size_t i = 0; i < a.amps().size(); ++i)
    for (std::size_t j = 0; j < b.amps().size(); ++j)
      amps[i * b.amps().size() + j] = a.amps()[i] * b.amps()[j];
  return WiredKet(std::move(amps), std::move(wires), a.dim());
}

WiredOperator::WiredOperator(ComplexMatrix matrix, std::vector<int> wires, int dim)
    : dim_(dim) {
  require_distinct(wires);
  if (!matrix.is_square() || matrix.rows() != pow_dim(dim, wires.size())) {
    throw std::invalid_argument(
        "WiredOperator: matrix side must be dim^(wire count)");
  }
  wires_ = descending(wires);
  if (wires_ == wires) {
    matrix_ = std::move(matrix);
    return;
  }
  const auto map = index_map(wires, wires_, dim);
  const std::size_t n = matrix.rows();
  matrix_ = ComplexMatrix(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) matrix_(i, j) = matrix(map[i], map[j]);
}

ComplexMatrix WiredOperator::matrix_in_order(const std::vector<int>& order) const {
  require_distinct(order);
  if (order.size() != wires_.size()) {
    throw std::invalid_argument("matrix_in_order: wrong number of wires");
  }
  const auto map = index_map(wires_, order, dim_);
  const std::size_t n = matrix_.rows();
  ComplexMatrix out(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out(i, j) = matrix_(map[i], map[j]);
  return out;
}

WiredOperator identity_on(std::vector<int> wires, int dim) {
  const std::size_t n = pow_dim(dim, wires.size());
  return WiredOperator(ComplexMatrix::identity(n), std::move(wires), dim);
}

WiredOperator outer(const WiredKet& k) {
  const std::size_t n = k.amps().size();
  ComplexMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      m(i, j) = k.amps()[i] * std::conj(k.amps()[j]);
  return WiredOperator(std::move(m), k.wires(), k.dim());
}

WiredOperator tensor_product(const WiredOperator& a, const WiredOperator& b) {
  if (a.dim_per_wire() != b.dim_per_wire()) {
    throw std::invalid_argument("tensor_product: wire dimensions differ");
  }
  std::vector<int> wires = a.wires();
  for (int w : b.wires()) {
    if (std::find(wires.begin(), wires.end(), w) != wires.end()) {
      throw std::invalid_argument("tensor_product: wire label collision on " +
                                  std::to_string(w));
    }
    wires.push_back(w);
  }
  return WiredOperator(kron(a.matrix(), b.matrix()), std::move(wires),
                       a.dim_per_wire());
}

WiredOperator partial_trace(const WiredOperator& op,
                            const std::vector<int>& traced) {
  for (int w : traced) {
    if (std::find(op.wires().begin(), op.wires().end(), w) == op.wires().end()) {
      throw std::invalid_argument("partial_trace: unknown wire label " +
                                  std::to_string(w));
    }
  }
  const int d = op.dim_per_wire();
  ComplexMatrix cur = op.matrix();
  std::vector<int> wires = op.wires();
  for (int w : traced) {
    const std::size_t pos = static_cast<std::size_t>(
        std::find(wires.begin(), wires.end(), w) - wires.begin());
    const std::size_t nw = wires.size();
    const std::size_t lo = pow_dim(d, nw - 1 - pos);  // stride of this digit
    const std::size_t hi = pow_dim(d, pos);           // blocks above it
    const std::size_t side = pow_dim(d, nw - 1);
    ComplexMatrix next(side, side);
    for (std::size_t ih = 0; ih < hi; ++ih)
      for (std::size_t il = 0; il < lo; ++il)
        for (std::size_t jh = 0; jh < hi; ++jh)
          for (std::size_t jl = 0; jl < lo; ++jl) {
            Complex s{0.0, 0.0};
            for (int k = 0; k < d; ++k) {
              const std::size_t row = (ih * d + static_cast<std::size_t>(k)) * lo + il;
              const std::size_t col = (jh * d + static_cast<std::size_t>(k)) * lo + jl;
              s += cur(row, col);
            }
            next(ih * lo + il, jh * lo + jl) = s;
          }
    cur = std::move(next);
    wires.erase(wires.begin() + static_cast<std::ptrdiff_t>(pos));
  }
  return WiredOperator(std::move(cur), std::move(wires), d);
}

WiredOperator partial_transpose(const WiredOperator& op, int wire) {
  const auto it = std::find(op.wires().begin(), op.wires().end(), wire);
  if (it == op.wires().end()) {
    throw std::invalid_argument("partial_transpose: unknown wire label " +
                                std::to_string(wire));
  }
  const int d = op.dim_per_wire();
  const std::size_t pos = static_cast<std::size_t>(it - op.wires().begin());
  const std::size_t nw = op.wires().size();
  const std::size_t lo = pow_dim(d, nw - 1 - pos);
  const std::size_t n = op.matrix().rows();
  ComplexMatrix out(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t di = (i / lo) % static_cast<std::size_t>(d);
    const std::size_t i_base = i - di * lo;
    for (std::size_t j = 0; j < n; ++j) {
      const std::size_t dj = (j / lo) % static_cast<std::size_t>(d);
      const std::size_t j_base = j - dj * lo;
      // Swap the `wire` digit between row and column.
      out(i_base + dj * lo, j_base + di * lo) = op.matrix()(i, j);
    }
  }
  return WiredOperator(std::move(out), op.wires(), d);
}

}  // namespace qcomb
