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

#include <random>

#include "oracles.hpp"
#include "qremesh/core/dense.hpp"
#include "qremesh/core/kernels.hpp"
#include "qremesh/decomp/measurement.hpp"
#include "qremesh/decomp/operator_builder.hpp"
#include "qremesh/decomp/pauli_coeffs.hpp"
#include "qremesh/decomp/projectors.hpp"
#include "qremesh/fem/assembly.hpp"
#include "qremesh/fem/classical_observables.hpp"
#include "qremesh/qsim/program.hpp"

namespace qremesh {
namespace {

using fem::Model;

Eigen::MatrixXd shift_oracle(int m) {
  const int N = 1 << m;
  Eigen::MatrixXd T = Eigen::MatrixXd::Zero(N, N);
  for (int i = 0; i + 1 < N; ++i) T(i, i + 1) = 1;
  return T;
}

TEST(Builder, ElementaryChains) {
  for (int m = 1; m <= 5; ++m) {
    const int N = 1 << m;
    Eigen::MatrixXd D = Eigen::MatrixXd::Identity(N, N), U = D;
    D(N - 1, N - 1) = 0;
    U(0, 0) = 0;
    EXPECT_LT(core::max_abs_diff(core::materialize_sum(decomp::trim_last(m)), D.cast<core::Complex>()), 1e-15);
    EXPECT_LT(core::max_abs_diff(core::materialize_sum(decomp::trim_first(m)), U.cast<core::Complex>()), 1e-15);
    EXPECT_LT(core::max_abs_diff(core::materialize_sum(decomp::shift_up(m)), shift_oracle(m).cast<core::Complex>()),
              1e-15);
  }
}

TEST(Builder, MatchesIndependentAssembly) {
  for (double nu : {0.0, 0.25, 0.3, 0.49}) {
    for (auto [nx, ny] : {std::pair{1, 1}, {2, 2}, {3, 1}, {2, 4}}) {
      const auto spec = fem::make_problem(Model::FreePlate, nx, ny, nu);
      const auto K = decomp::build_operator(spec);
      EXPECT_TRUE(K.hermitian());
      EXPECT_LT(core::max_abs_diff(core::materialize_sum(K), testing::plate_stiffness(nx, ny, nu).cast<core::Complex>()),
                1e-12)
          << nx << "," << ny << " nu=" << nu;
      EXPECT_LE(K.size(), decomp::term_bound(nx, ny));
    }
  }
}

TEST(Builder, ScalarVariants) {
  const auto p = fem::make_problem(Model::ScalarPoisson, 2, 3, 0.3);
  EXPECT_LT(core::max_abs_diff(core::materialize_sum(decomp::build_operator(p)),
                               testing::poisson_stiffness(2, 3).cast<core::Complex>()),
            1e-13);
  const auto f = fem::make_problem(Model::ScalarFdm, 3, 2, 0.3);
  const Eigen::MatrixXd K = core::materialize_sum(decomp::build_operator(f)).real();
  for (int y = 1; y < 3; ++y)
    for (int x = 1; x < 7; ++x)
      EXPECT_LT((K.row(testing::sdof(3, x, y)).transpose() - testing::fdm_row(3, 2, x, y)).cwiseAbs().maxCoeff(), 1e-14);
}

TEST(PauliCoeffs, ReconstructAndCorrectedClosedForm) {
  for (double nu : {0.0, 0.3, 0.49}) {
    for (auto r : fem::kCorners) {
      for (auto c : fem::kCorners) {
        const fem::LinkPair pair{r, c};
        const auto k = fem::elementary_link(nu, pair);
        EXPECT_LT((decomp::link_pauli_coeffs(nu, pair).reconstruct() - k).cwiseAbs().maxCoeff(), 1e-15);
        const auto printed = decomp::printed_closed_form(nu, pair);
        if (!printed) continue;
        // The printed (3 + 4 nu) factor only agrees with the element at nu = 0.
        const double dev = (printed->reconstruct() - k).cwiseAbs().maxCoeff();
        if (nu == 0.0) {
          EXPECT_LT(dev, 1e-15) << pair.label();
        }
      }
    }
  }
  // diagonal of the element: (3 - 4 nu) / 6
  EXPECT_NEAR(decomp::link_pauli_coeffs(0.3, {fem::Corner::A, fem::Corner::A}).identity, (3 - 4 * 0.3) / 6, 1e-15);
}

TEST(Projectors, DirichletRestriction) {
  const auto spec = fem::make_problem(Model::HalfPlateCrack, 2, 2, 0.3);
  const auto P = decomp::dirichlet_projector_terms(spec.bc, spec.num_qubits());
  const core::DenseMatrix Pm = core::materialize_sum(P);
  EXPECT_LT(core::max_abs_diff(Pm * Pm, Pm), 1e-15);
  const auto mask = fem::dirichlet_mask(spec);
  for (std::size_t i = 0; i < mask.size(); ++i) EXPECT_EQ(Pm(i, i).real(), mask[i] ? 1.0 : 0.0);
  Eigen::MatrixXd K = testing::plate_stiffness(2, 2, 0.3);
  for (Eigen::Index i = 0; i < K.rows(); ++i) {
    if (!mask[static_cast<std::size_t>(i)]) continue;
    K.row(i).setZero();
    K.col(i).setZero();
    K(i, i) = 1;
  }
  EXPECT_LT(core::max_abs_diff(core::materialize_sum(decomp::build_restricted_operator(spec)), K.cast<core::Complex>()),
            1e-13);
  std::vector<fem::BCDescriptor> overlapping = {{"a", "00***"}, {"b", "0***1"}};
  EXPECT_THROW(decomp::dirichlet_projector_terms(overlapping, 5), fem::InvalidProblem);
}

TEST(Measurement, GroupCountLaw) {
  for (auto [nx, ny] : {std::pair{1, 1}, {2, 2}, {3, 2}, {2, 5}}) {
    const auto spec = fem::make_problem(Model::HalfPlateCrack, nx, ny, 0.3);
    EXPECT_EQ(decomp::measurement_groups(decomp::build_operator(spec)).size(),
              static_cast<std::size_t>(2 * nx * ny + 2 * nx + 2 * ny + 2));
  }
  EXPECT_EQ(decomp::term_count(2, 2), 18u);
}

TEST(Measurement, RotationDiagonalizesEachGroup) {
  const auto spec = fem::make_problem(Model::HalfPlateCrack, 2, 1, 0.3);
  const auto K = decomp::build_operator(spec);
  for (const auto& g : decomp::measurement_groups(K)) {
    const core::DenseMatrix R = qsim::materialize_program(g.rotation);
    const core::DenseMatrix G = core::materialize_sum(g.terms);
    const core::DenseMatrix D = R * G * R.adjoint();
    const Eigen::VectorXd values = g.diagonal_values();
    core::DenseMatrix expect = core::DenseMatrix::Zero(D.rows(), D.cols());
    expect.diagonal() = values.cast<core::Complex>();
    EXPECT_LT(core::max_abs_diff(D, expect), 1e-13) << "mask " << g.flip_mask;
  }
}

TEST(Measurement, RequiresHermitianFlag) {
  core::OperatorSum op(2, {core::TensorTerm::parse(1.0, "+I")});
  EXPECT_THROW(decomp::measurement_groups(op), std::invalid_argument);
}

TEST(Measurement, GroupedSumEqualsDirectOnRandomStates) {
  std::mt19937_64 rng(3);
  const auto spec = fem::make_problem(Model::HalfPlateCrack, 2, 2, 0.25);
  const auto K = decomp::build_restricted_operator(spec);
  const auto groups = decomp::measurement_groups(K);
  for (int rep = 0; rep < 5; ++rep) {
    const auto psi = core::StateVector::random(spec.num_qubits(), rng);
    double total = 0.0;
    for (const auto& g : groups) {
      const auto rotated = qsim::apply_program(psi, g.rotation);
      const auto probs = rotated.probabilities();
      for (std::size_t s = 0; s < probs.size(); ++s) total += probs[s] * g.evaluate(s);
    }
    EXPECT_NEAR(total, core::expectation_direct(psi, K).real(), 1e-12);
  }
}

}  // namespace
}  // namespace qremesh
