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

#include "qremesh/core/operator_sum.hpp"
#include "qremesh/fem/problem.hpp"

namespace qremesh::decomp {

// Grid structure operators on an m-qubit axis register (N = 2^m nodes).

/// Identity with the last diagonal entry removed: I - p-^m.
core::OperatorSum trim_last(int m);
/// Identity with the first diagonal entry removed: I - p+^m.
core::OperatorSum trim_first(int m);
/// Ones on the superdiagonal: sum_k I^k sigma+ sigma-^(m-k-1).
core::OperatorSum shift_up(int m);

/// Single-DoF operator p+ k00 + p- k11 + sigma+ k01 + sigma- k10.
core::OperatorSum link_operator(const Eigen::Matrix2d& k);

/// Stiffness operator of the unconstrained plate (or scalar grid) as a
/// simplified, hermitian sum of tensor terms.
core::OperatorSum build_operator(const fem::ProblemSpec& spec);

/// Upper bound on the number of tensor terms, a*nx*ny + b*(nx+ny) + c with
/// constants fixed by the construction.
std::size_t term_bound(int nx, int ny);

}  // namespace qremesh::decomp
