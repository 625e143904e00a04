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

#include "qremesh/fem/solve.hpp"

#include <Eigen/IterativeLinearSolvers>
#include <Eigen/SparseCholesky>
#include <cmath>

namespace qremesh::fem {

namespace {

constexpr Eigen::Index kDirectLimit = Eigen::Index{1} << 14;

double relative_residual(const RealSparse& K, const Eigen::VectorXd& f, const Eigen::VectorXd& u) {
  return (K * u - f).norm() / f.norm();
}

}  // namespace

Eigen::VectorXd classical_solve(const RealSparse& K, const Eigen::VectorXd& f) {
  if (K.rows() != K.cols() || K.rows() != f.size()) throw std::invalid_argument("stiffness and load sizes differ");
  if (f.norm() == 0.0) return Eigen::VectorXd::Zero(f.size());

  Eigen::VectorXd u;
  if (K.rows() <= kDirectLimit) {
    Eigen::SimplicialLDLT<RealSparse> ldlt(K);
    if (ldlt.info() != Eigen::Success) throw SingularMatrix("LDL^T factorization failed");
    u = ldlt.solve(f);
  } else {
    Eigen::ConjugateGradient<RealSparse, Eigen::Lower | Eigen::Upper, Eigen::IncompleteCholesky<double>> cg;
    cg.setTolerance(kSolveTolerance * 1e-2);
    cg.setMaxIterations(20 * static_cast<Eigen::Index>(std::sqrt(static_cast<double>(K.rows()))) + 2000);
    cg.compute(K);
    if (cg.info() != Eigen::Success) throw SingularMatrix("preconditioner construction failed");
    u = cg.solve(f);
  }
  if (!u.allFinite() || relative_residual(K, f, u) > kSolveTolerance) {
    throw SingularMatrix("stiffness has a kernel overlapping the load (relative residual " +
                         std::to_string(relative_residual(K, f, u)) + ")");
  }
  return u;
}

Eigen::VectorXd classical_solve(const Eigen::MatrixXd& K, const Eigen::VectorXd& f) {
  if (K.rows() != K.cols() || K.rows() != f.size()) throw std::invalid_argument("stiffness and load sizes differ");
  if (f.norm() == 0.0) return Eigen::VectorXd::Zero(f.size());
  Eigen::LDLT<Eigen::MatrixXd> ldlt(K);
  Eigen::VectorXd u = ldlt.solve(f);
  const double res = (K * u - f).norm() / f.norm();
  if (ldlt.info() != Eigen::Success || !u.allFinite() || res > kSolveTolerance) {
    throw SingularMatrix("stiffness has a kernel overlapping the load (relative residual " + std::to_string(res) + ")");
  }
  return u;
}

ClassicalSolution solve_problem(const ProblemSpec& spec) {
  validate(spec);
  ClassicalSolution s;
  s.K = apply_dirichlet_mask(assemble_K_sparse(spec), dirichlet_mask(spec));
  s.f = force_vector(spec);
  s.u = classical_solve(s.K, s.f);
  return s;
}

double energy(const RealSparse& K, const Eigen::VectorXd& f, const Eigen::VectorXd& u) {
  return 0.5 * u.dot(K * u) - u.dot(f);
}

}  // namespace qremesh::fem
