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
#include <vector>

#include "qremesh/core/operator_sum.hpp"
#include "qremesh/fem/problem.hpp"

namespace qremesh::fem {

using RealSparse = Eigen::SparseMatrix<double>;

/// Direct stiffness assembly over all (N_x-1)(N_y-1) elements.
RealSparse assemble_K_sparse(const ProblemSpec& spec);

/// Dense variant; capped at 14 qubits.
Eigen::MatrixXd assemble_K(const ProblemSpec& spec);

/// Consistent top-edge load: nodal_load on every (y = N_y-1, d = 1) DoF.
Eigen::VectorXd force_vector(const ProblemSpec& spec);

/// Diagonal 0/1 mask of the Dirichlet set described by spec.bc.
std::vector<bool> dirichlet_mask(const ProblemSpec& spec);

/// (I-P)K(I-P) + P for a projector given as an operator sum. Throws
/// std::invalid_argument when P is not a hermitian idempotent.
Eigen::MatrixXd apply_dirichlet(const Eigen::MatrixXd& K, const core::OperatorSum& P);
RealSparse apply_dirichlet(const RealSparse& K, const core::OperatorSum& P);

/// Same restriction for a diagonal mask, without materializing P.
RealSparse apply_dirichlet_mask(const RealSparse& K, const std::vector<bool>& mask);

}  // namespace qremesh::fem
