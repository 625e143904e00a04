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

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "oracles.hpp"
#include "qremesh/fem/assembly.hpp"
#include "qremesh/fem/classical_observables.hpp"
#include "qremesh/fem/links.hpp"
#include "qremesh/fem/problem.hpp"
#include "qremesh/fem/solve.hpp"

namespace qremesh {
namespace {

using fem::Model;

TEST(Links, MatchNumericallyIntegratedElement) {
  for (double nu : {0.0, 0.25, 0.3, 0.49}) {
    const auto Ke = testing::quad4_plane_strain(nu);
    for (auto r : fem::kCorners) {
      for (auto c : fem::kCorners) {
        const auto link = fem::elementary_link(nu, {r, c});
        const int a = static_cast<int>(r), b = static_cast<int>(c);
        EXPECT_LT((link - Ke.block<2, 2>(2 * a, 2 * b)).cwiseAbs().maxCoeff(), 1e-14)
            << fem::LinkPair{r, c}.label() << " nu=" << nu;
      }
    }
  }
}

TEST(Links, ScalarPoissonTable) {
  EXPECT_LT((fem::scalar_link(fem::ScalarKind::PoissonFem) - testing::quad4_laplace()).cwiseAbs().maxCoeff(), 1e-14);
  EXPECT_EQ(fem::scalar_assembly_weight(fem::ScalarKind::PoissonFem), 1.0);
}

TEST(Assembly, PlateMatchesElementOracle) {
  for (auto [nx, ny] : {std::pair{1, 1}, {2, 1}, {1, 3}, {3, 2}}) {
    const auto spec = fem::make_problem(Model::FreePlate, nx, ny, 0.3);
    EXPECT_LT((fem::assemble_K(spec) - testing::plate_stiffness(nx, ny, 0.3)).cwiseAbs().maxCoeff(), 1e-13);
    const Eigen::MatrixXd sparse(fem::assemble_K_sparse(spec));
    EXPECT_LT((sparse - testing::plate_stiffness(nx, ny, 0.3)).cwiseAbs().maxCoeff(), 1e-13);
  }
}

TEST(Assembly, PoissonAndFdm) {
  const auto p = fem::make_problem(Model::ScalarPoisson, 2, 3, 0.3);
  EXPECT_LT((fem::assemble_K(p) - testing::poisson_stiffness(2, 3)).cwiseAbs().maxCoeff(), 1e-14);
  const auto f = fem::make_problem(Model::ScalarFdm, 3, 3, 0.3);
  const auto K = fem::assemble_K(f);
  for (int y = 1; y + 1 < 8; ++y) {
    for (int x = 1; x + 1 < 8; ++x) {
      const auto row = K.row(static_cast<Eigen::Index>(f.dof_index(x, y))).transpose();
      EXPECT_LT((row - testing::fdm_row(3, 3, x, y)).cwiseAbs().maxCoeff(), 1e-14);
    }
  }
}

TEST(Assembly, RigidModesInKernel) {
  const auto spec = fem::make_problem(Model::FreePlate, 3, 2, 0.3);
  const auto K = fem::assemble_K_sparse(spec);
  Eigen::VectorXd tx = Eigen::VectorXd::Zero(K.rows()), ty = tx, rot = tx;
  for (int y = 0; y < spec.nodes_y(); ++y) {
    for (int x = 0; x < spec.nodes_x(); ++x) {
      tx(testing::vdof(3, x, y, 0)) = 1;
      ty(testing::vdof(3, x, y, 1)) = 1;
      rot(testing::vdof(3, x, y, 0)) = -y;
      rot(testing::vdof(3, x, y, 1)) = x;
    }
  }
  EXPECT_LT((K * tx).cwiseAbs().maxCoeff(), 1e-12);
  EXPECT_LT((K * ty).cwiseAbs().maxCoeff(), 1e-12);
  EXPECT_LT((K * rot).cwiseAbs().maxCoeff(), 1e-10);
}

TEST(Problem, SelectorsPickTheExpectedDofs) {
  const auto spec = fem::make_problem(Model::HalfPlateCrack, 3, 2, 0.3);
  const auto lig = fem::selectors::ligament_uy(3, 2);
  const auto tip = fem::selectors::crack_tip_ux(3, 2);
  const auto lip = fem::selectors::lip_full(3, 2);
  const auto inner = fem::selectors::lip_inner_quarter(3, 2);
  for (int y = 0; y < 4; ++y) {
    for (int x = 0; x < 8; ++x) {
      for (int d = 0; d < 2; ++d) {
        const auto i = spec.dof_index(x, y, d);
        EXPECT_EQ(lig.matches(i), y == 0 && x >= 4 && d == 1);
        EXPECT_EQ(tip.matches(i), y == 0 && x == 4 && d == 0);
        EXPECT_EQ(lip.matches(i), y == 0 && x < 4 && d == 1);
        EXPECT_EQ(inner.matches(i), y == 0 && x == 3 && d == 1);
      }
    }
  }
  EXPECT_THROW(fem::selectors::lip_inner_quarter(2, 2), fem::InvalidProblem);
}

TEST(Problem, ValidationNamesTheRule) {
  auto spec = fem::make_problem(Model::HalfPlateCrack, 2, 2, 0.3);
  spec.nu = 0.5;
  EXPECT_THROW(fem::validate(spec), fem::InvalidProblem);
  spec = fem::make_problem(Model::HalfPlateCrack, 2, 2, 0.3);
  spec.bc.push_back(fem::selectors::lip_full(2, 2));
  spec.bc.push_back({"overlap", "00***"});
  try {
    fem::validate(spec);
    FAIL() << "overlapping selectors accepted";
  } catch (const fem::InvalidProblem& e) {
    EXPECT_NE(std::string(e.what()).find("overlap"), std::string::npos);
  }
  spec = fem::make_problem(Model::HalfPlateCrack, 2, 2, 0.3);
  spec.bc[0].selector = "0";
  EXPECT_THROW(fem::validate(spec), fem::InvalidProblem);
}

TEST(Solve, ResidualAndSymmetry) {
  const auto spec = fem::make_problem(Model::HalfPlateCrack, 3, 3, 0.3);
  const auto sol = fem::solve_problem(spec);
  EXPECT_LT((sol.K * sol.u - sol.f).norm() / sol.f.norm(), 1e-10);
  // dense oracle with the same boundary set
  Eigen::MatrixXd K = testing::plate_stiffness(3, 3, 0.3);
  const auto mask = fem::dirichlet_mask(spec);
  for (Eigen::Index i = 0; i < K.rows(); ++i) {
    if (!mask[static_cast<std::size_t>(i)]) continue;
    K.row(i).setZero();
    K.col(i).setZero();
    K(i, i) = 1;
  }
  const Eigen::VectorXd u = K.ldlt().solve(fem::force_vector(spec));
  EXPECT_LT((u - sol.u).cwiseAbs().maxCoeff(), 1e-9 * u.cwiseAbs().maxCoeff());
}

TEST(Solve, ZeroLoadGivesZeroAndSingularThrows) {
  auto spec = fem::make_problem(Model::HalfPlateCrack, 2, 2, 0.3);
  spec.load_density = 0.0;
  EXPECT_EQ(fem::solve_problem(spec).u.cwiseAbs().maxCoeff(), 0.0);
  const auto free = fem::make_problem(Model::FreePlate, 2, 2, 0.3);
  EXPECT_THROW(fem::solve_problem(free), fem::SingularMatrix);
}

TEST(Solve, IterativePathMatchesDirect) {
  // Above the direct-solver threshold the CG path is used.
  const auto spec = fem::make_problem(Model::HalfPlateCrack, 7, 7, 0.3);
  const auto sol = fem::solve_problem(spec);
  EXPECT_LT((sol.K * sol.u - sol.f).norm() / sol.f.norm(), 1e-10);
}

TEST(ClassicalObservables, SyntheticSqrtProfileFitsUnitSif) {
  auto spec = fem::make_problem(Model::HalfPlateCrack, 4, 2, 0.3);
  Eigen::VectorXd u = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(spec.dimension()));
  const int Nx = spec.nodes_x();
  for (int x = 0; x < Nx / 2; ++x) {
    const double r = (Nx / 2 - x) * spec.width / Nx;
    u(static_cast<Eigen::Index>(spec.dof_index(x, 0, 1))) =
        2 * (1 - spec.nu * spec.nu) * std::sqrt(2 * r / std::numbers::pi);
  }
  EXPECT_NEAR(fem::sif_fit(u, spec), 1.0, 1e-6);
  const auto zero = fem::classical_observables(Eigen::VectorXd::Zero(u.size()), spec);
  EXPECT_EQ(zero.cod, 0.0);
  EXPECT_EQ(zero.sif_fit, 0.0);
  EXPECT_EQ(zero.sif_integral, 0.0);
}

TEST(ClassicalObservables, LipIntegralInversion) {
  // u_y^2 integrated over the lip for the exact profile gives back K = 1.
  const double nu = 0.3, L = 0.5;
  const double c = 2 * (1 - nu * nu) * std::sqrt(2 / std::numbers::pi);
  const double integral = c * c * L * L / 2;  // int_0^L c^2 r dr
  EXPECT_NEAR(fem::sif_from_lip_integral(integral, L, nu), 1.0, 1e-12);
}

}  // namespace
}  // namespace qremesh
