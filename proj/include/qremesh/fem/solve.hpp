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
#include <stdexcept>

#include "qremesh/fem/assembly.hpp"
#include "qremesh/fem/problem.hpp"

namespace qremesh::fem {

class SingularMatrix : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Relative residual target of every solve.
inline constexpr double kSolveTolerance = 1e-10;

/// Sparse LDL^T up to 2^14 unknowns, preconditioned CG above.
Eigen::VectorXd classical_solve(const RealSparse& K, const Eigen::VectorXd& f);
Eigen::VectorXd classical_solve(const Eigen::MatrixXd& K, const Eigen::VectorXd& f);

struct ClassicalSolution {
  RealSparse K;  ///< stiffness after the Dirichlet restriction
  Eigen::VectorXd f;
  Eigen::VectorXd u;
};

/// Assemble, restrict, build the load and solve in one call.
ClassicalSolution solve_problem(const ProblemSpec& spec);

/// 1/2 u^T K u - u^T f.
double energy(const RealSparse& K, const Eigen::VectorXd& f, const Eigen::VectorXd& u);

}  // namespace qremesh::fem
