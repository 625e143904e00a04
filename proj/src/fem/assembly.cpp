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

#include "qremesh/fem/assembly.hpp"

#include <stdexcept>

#include "qremesh/core/dense.hpp"
#include "qremesh/fem/links.hpp"

namespace qremesh::fem {

namespace {

constexpr double kProjectorTol = 1e-12;

std::vector<Eigen::Triplet<double>> element_triplets(const ProblemSpec& spec) {
  const int Nx = spec.nodes_x();
  const int Ny = spec.nodes_y();
  const bool vec = is_vector(spec.model);
  std::vector<Eigen::Triplet<double>> out;
  out.reserve(static_cast<std::size_t>(Nx - 1) * (Ny - 1) * 16 * (vec ? 4 : 1));

  Eigen::Matrix4d table = Eigen::Matrix4d::Zero();
  if (!vec) table = scalar_link(scalar_kind(spec.model)) * scalar_assembly_weight(scalar_kind(spec.model));
  std::array<std::array<Eigen::Matrix2d, 4>, 4> blocks{};
  if (vec) {
    for (Corner i : kCorners) {
      for (Corner j : kCorners) blocks[static_cast<int>(i)][static_cast<int>(j)] = elementary_link(spec.nu, {i, j});
    }
  }

  for (int ey = 0; ey + 1 < Ny; ++ey) {
    for (int ex = 0; ex + 1 < Nx; ++ex) {
      for (Corner i : kCorners) {
        const auto oi = corner_offset(i);
        for (Corner j : kCorners) {
          const auto oj = corner_offset(j);
          const int ii = static_cast<int>(i);
          const int jj = static_cast<int>(j);
          if (!vec) {
            const auto r = static_cast<int>(spec.dof_index(ex + oi[0], ey + oi[1]));
            const auto c = static_cast<int>(spec.dof_index(ex + oj[0], ey + oj[1]));
            out.emplace_back(r, c, table(ii, jj));
            continue;
          }
          const Eigen::Matrix2d& b = blocks[ii][jj];
          for (int di = 0; di < 2; ++di) {
            for (int dj = 0; dj < 2; ++dj) {
              if (b(di, dj) == 0.0) continue;
              out.emplace_back(static_cast<int>(spec.dof_index(ex + oi[0], ey + oi[1], di)),
                               static_cast<int>(spec.dof_index(ex + oj[0], ey + oj[1], dj)), b(di, dj));
            }
          }
        }
      }
    }
  }
  return out;
}

void check_projector(const core::SparseMatrix& P) {
  const core::SparseMatrix herm = P.adjoint();
  const core::SparseMatrix sq = P * P;
  if (core::max_abs_diff(P, herm) > kProjectorTol) throw std::invalid_argument("Dirichlet operator is not hermitian");
  if (core::max_abs_diff(P, sq) > kProjectorTol) throw std::invalid_argument("Dirichlet operator is not idempotent");
}

}  // namespace

RealSparse assemble_K_sparse(const ProblemSpec& spec) {
  validate(spec);
  const auto dim = static_cast<Eigen::Index>(spec.dimension());
  RealSparse K(dim, dim);
  const auto t = element_triplets(spec);
  K.setFromTriplets(t.begin(), t.end());
  K.prune(0.0);
  return K;
}

Eigen::MatrixXd assemble_K(const ProblemSpec& spec) {
  if (spec.num_qubits() > core::kDenseQubitCap) {
    throw core::DimensionOverflow("dense assembly of " + std::to_string(spec.num_qubits()) + " qubits exceeds the cap");
  }
  return Eigen::MatrixXd(assemble_K_sparse(spec));
}

Eigen::VectorXd force_vector(const ProblemSpec& spec) {
  Eigen::VectorXd f = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(spec.dimension()));
  const int top = spec.nodes_y() - 1;
  for (int x = 0; x < spec.nodes_x(); ++x) {
    f(static_cast<Eigen::Index>(spec.dof_index(x, top, 1))) = spec.nodal_load();
  }
  return f;
}

std::vector<bool> dirichlet_mask(const ProblemSpec& spec) {
  std::vector<bool> mask(spec.dimension(), false);
  for (const auto& b : spec.bc) {
    for (std::uint64_t i = 0; i < spec.dimension(); ++i) {
      if (b.matches(i)) mask[i] = true;
    }
  }
  return mask;
}

Eigen::MatrixXd apply_dirichlet(const Eigen::MatrixXd& K, const core::OperatorSum& P) {
  if (K.rows() != static_cast<Eigen::Index>(std::uint64_t{1} << P.num_qubits())) {
    throw core::LengthMismatch("matrix and projector dimensions differ");
  }
  const core::SparseMatrix Pc = core::materialize_sparse(P);
  check_projector(Pc);
  const Eigen::MatrixXd Pd = Eigen::MatrixXd(core::DenseMatrix(Pc).real());
  const Eigen::MatrixXd Q = Eigen::MatrixXd::Identity(K.rows(), K.cols()) - Pd;
  return Q * K * Q + Pd;
}

RealSparse apply_dirichlet(const RealSparse& K, const core::OperatorSum& P) {
  if (K.rows() != static_cast<Eigen::Index>(std::uint64_t{1} << P.num_qubits())) {
    throw core::LengthMismatch("matrix and projector dimensions differ");
  }
  const core::SparseMatrix Pc = core::materialize_sparse(P);
  check_projector(Pc);
  const RealSparse Pr = Pc.real();
  RealSparse I(K.rows(), K.cols());
  I.setIdentity();
  const RealSparse Q = I - Pr;
  RealSparse out = RealSparse(Q * K * Q) + Pr;
  out.prune(0.0);
  return out;
}

RealSparse apply_dirichlet_mask(const RealSparse& K, const std::vector<bool>& mask) {
  if (static_cast<std::size_t>(K.rows()) != mask.size()) throw core::LengthMismatch("mask length differs from matrix");
  std::vector<Eigen::Triplet<double>> t;
  t.reserve(static_cast<std::size_t>(K.nonZeros()));
  for (int k = 0; k < K.outerSize(); ++k) {
    for (RealSparse::InnerIterator it(K, k); it; ++it) {
      if (!mask[it.row()] && !mask[it.col()]) t.emplace_back(it.row(), it.col(), it.value());
    }
  }
  for (std::size_t i = 0; i < mask.size(); ++i) {
    if (mask[i]) t.emplace_back(static_cast<int>(i), static_cast<int>(i), 1.0);
  }
  RealSparse out(K.rows(), K.cols());
  out.setFromTriplets(t.begin(), t.end());
  return out;
}

}  // namespace qremesh::fem
