// Copyright 2026 The qremesh Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qremesh/core/dense.hpp"

#include <bit>
#include <string>
#include <vector>

namespace qremesh::core {

namespace {

void check_cap(int n, int cap) {
  if (n > cap) {
    throw DimensionOverflow("dense materialization of " + std::to_string(n) +
                            " qubits exceeds the cap of " + std::to_string(cap));
  }
}

DenseMatrix kron2(const DenseMatrix& a, const Matrix2& m) {
  DenseMatrix out(a.rows() * 2, a.cols() * 2);
  for (int r = 0; r < 2; ++r) {
    for (int c = 0; c < 2; ++c) {
      // out[(i*2 + r), (j*2 + c)] = a(i,j) * m(r,c)
      for (Eigen::Index i = 0; i < a.rows(); ++i) {
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
          out(i * 2 + r, j * 2 + c) = a(i, j) * m[r * 2 + c];
        }
      }
    }
  }
  return out;
}

}  // namespace

DenseMatrix materialize_term(const TensorTerm& term, int cap) {
  check_cap(term.num_qubits(), cap);
  DenseMatrix m = DenseMatrix::Constant(1, 1, term.coefficient);
  for (Elementary e : term.factors) m = kron2(m, matrix_of(e));
  return m;
}

DenseMatrix materialize_sum(const OperatorSum& op, int cap) {
  check_cap(op.num_qubits(), cap);
  const Eigen::Index dim = Eigen::Index{1} << op.num_qubits();
  DenseMatrix m = DenseMatrix::Zero(dim, dim);
  for (const auto& t : op.terms()) m += materialize_term(t, cap);
  return m;
}

SparseMatrix materialize_sparse(const OperatorSum& op) {
  const int n = op.num_qubits();
  if (n > 26) throw DimensionOverflow("sparse materialization beyond 26 qubits");
  const std::uint64_t dim = std::uint64_t{1} << n;
  std::vector<Eigen::Triplet<Complex>> triplets;
  for (const auto& t : op.terms()) {
    const CompiledTerm c = compile(t);
    const std::uint64_t free = ~c.care & (dim - 1);
    std::uint64_t s = 0;
    do {
      const std::uint64_t j = c.value | s;
      const Complex w = (std::popcount(j & c.sign) & 1) ? -c.scale : c.scale;
      triplets.emplace_back(static_cast<int>(j ^ c.flip), static_cast<int>(j), w);
      s = (s - free) & free;
    } while (s != 0);
  }
  SparseMatrix m(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
  m.setFromTriplets(triplets.begin(), triplets.end());
  return m;
}

Eigen::VectorXcd to_eigen(const StateVector& s) {
  Eigen::VectorXcd v(static_cast<Eigen::Index>(s.dimension()));
  for (std::size_t i = 0; i < s.dimension(); ++i) v(static_cast<Eigen::Index>(i)) = s[i];
  return v;
}

StateVector from_eigen(const Eigen::VectorXcd& v) {
  const auto dim = static_cast<std::size_t>(v.size());
  if (dim == 0 || !std::has_single_bit(dim)) throw LengthMismatch("vector length is not a power of two");
  return StateVector(std::countr_zero(dim), std::vector<Complex>(v.data(), v.data() + v.size()));
}

double max_abs_diff(const DenseMatrix& a, const DenseMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw LengthMismatch("matrix shapes differ");
  if (a.size() == 0) return 0.0;
  return (a - b).cwiseAbs().maxCoeff();
}

double max_abs_diff(const SparseMatrix& a, const SparseMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw LengthMismatch("matrix shapes differ");
  const SparseMatrix d = a - b;
  double m = 0.0;
  for (int k = 0; k < d.outerSize(); ++k) {
    for (SparseMatrix::InnerIterator it(d, k); it; ++it) m = std::max(m, std::abs(it.value()));
  }
  return m;
}

}  // namespace qremesh::core
