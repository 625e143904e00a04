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

#pragma once

#include <Eigen/Dense>
#include <Eigen/Sparse>
#include <stdexcept>

#include "qremesh/core/operator_sum.hpp"
#include "qremesh/core/state_vector.hpp"

namespace qremesh::core {

using DenseMatrix = Eigen::MatrixXcd;
using SparseMatrix = Eigen::SparseMatrix<Complex>;

/// Largest qubit count accepted by the dense materializers.
inline constexpr int kDenseQubitCap = 14;

class DimensionOverflow : public std::length_error {
 public:
  using std::length_error::length_error;
};

// Verification oracles. The dense path multiplies out explicit Kronecker
// products and shares no code with the matrix-free kernels.

DenseMatrix materialize_term(const TensorTerm& term, int cap = kDenseQubitCap);
DenseMatrix materialize_sum(const OperatorSum& op, int cap = kDenseQubitCap);

/// Entry-wise sparse materialization, usable well beyond the dense cap.
SparseMatrix materialize_sparse(const OperatorSum& op);

Eigen::VectorXcd to_eigen(const StateVector& s);
StateVector from_eigen(const Eigen::VectorXcd& v);

/// Largest entry-wise magnitude of a - b.
double max_abs_diff(const DenseMatrix& a, const DenseMatrix& b);
double max_abs_diff(const SparseMatrix& a, const SparseMatrix& b);

}  // namespace qremesh::core
