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
#include <complex>

#include "qremesh/decomp/projectors.hpp"
#include "qremesh/fem/classical_observables.hpp"
#include "qremesh/fem/solve.hpp"
#include "qremesh/observables/observables.hpp"
#include "qremesh/qsim/program.hpp"

namespace qremesh {
namespace {

struct Solved {
  fem::ProblemSpec spec;
  fem::ClassicalSolution sol;
  core::OperatorSum K;
  core::StateVector psi;
};

Solved solved(int nx, int ny, double nu) {
  Solved s{fem::make_problem(fem::Model::HalfPlateCrack, nx, ny, nu), {}, {}, {}};
  s.sol = fem::solve_problem(s.spec);
  s.K = decomp::build_restricted_operator(s.spec);
  s.psi = core::StateVector::from_real(std::span<const double>(s.sol.u.data(), static_cast<std::size_t>(s.sol.u.size())))
              .normalized();
  return s;
}

TEST(Observables, ExactStateReproducesClassicalValues) {
  for (auto [nx, ny, nu] : {std::tuple{2, 2, 0.3}, std::tuple{3, 2, 0.25}, std::tuple{3, 3, 0.0}}) {
    const auto s = solved(nx, ny, nu);
    const auto c = fem::classical_observables(s.sol.u, s.spec);
    const auto q = observables::evaluate(s.psi, s.spec, s.K);
    EXPECT_NEAR(q.norm, s.sol.u.norm(), 1e-9 * s.sol.u.norm());
    EXPECT_NEAR(q.cod, c.cod, 1e-9 * std::abs(c.cod));
    EXPECT_NEAR(q.cod, s.sol.u[static_cast<Eigen::Index>(fem::crack_mouth_index(s.spec))], 1e-9 * std::abs(c.cod));
    EXPECT_NEAR(q.sif, c.sif_integral, 1e-9 * c.sif_integral);
    if (nx >= 3) {
      EXPECT_NEAR(q.sif_restricted, c.sif_integral_inner, 1e-9 * c.sif_integral_inner);
    } else {
      EXPECT_TRUE(std::isnan(q.sif_restricted));
    }
  }
}

TEST(Observables, GlobalPhaseIsRemoved) {
  const auto s = solved(2, 2, 0.3);
  std::vector<core::Complex> a(s.psi.amplitudes().begin(), s.psi.amplitudes().end());
  const core::Complex phase = std::polar(1.0, 2.2);
  for (auto& v : a) v *= phase;
  const core::StateVector rotated(s.psi.num_qubits(), a);
  const auto aligned = observables::align_phase(rotated, qsim::prepare_force_state(2, 2));
  for (std::size_t i = 0; i < aligned.dimension(); ++i) EXPECT_LT(std::abs(aligned[i] - s.psi[i]), 1e-12);
  const auto q = observables::evaluate(rotated, s.spec, s.K);
  EXPECT_NEAR(q.cod, fem::classical_observables(s.sol.u, s.spec).cod, 1e-9);
}

TEST(Observables, CodIndexOptions) {
  const auto s = solved(2, 2, 0.3);
  EXPECT_EQ(observables::cod_basis_index(s.spec, observables::CodIndex::LiteralZero), 0u);
  EXPECT_EQ(observables::cod_basis_index(s.spec, observables::CodIndex::CrackMouthVertical), s.spec.dof_index(0, 0, 1));
  const auto q = observables::evaluate(s.psi, s.spec, s.K, observables::CodIndex::LiteralZero);
  EXPECT_NEAR(q.cod, s.sol.u[0], 1e-9);
}

TEST(Observables, NormFromPartsMatchesDirectFormula) {
  // |f^T u| / (u^T K u) * |f| with u normalized recovers the unnormalized norm.
  EXPECT_DOUBLE_EQ(observables::norm_from_parts(0.5, 0.25, 2.0), 1.0);
  EXPECT_THROW(observables::norm_from_parts(0.0, 1.0, 1.0), std::domain_error);
  const auto spec = fem::make_problem(fem::Model::HalfPlateCrack, 3, 2, 0.3);
  EXPECT_NEAR(observables::force_norm(spec), fem::force_vector(spec).norm(), 1e-12);
}

TEST(Observables, ShotModeIsSeededAndReportsError) {
  const auto s = solved(2, 2, 0.3);
  const auto shots = qsim::ShotConfig::with_shots(20000, 9);
  const auto a = observables::evaluate(s.psi, s.spec, s.K, observables::CodIndex::CrackMouthVertical, shots);
  const auto b = observables::evaluate(s.psi, s.spec, s.K, observables::CodIndex::CrackMouthVertical, shots);
  EXPECT_EQ(a.sif, b.sif);
  EXPECT_GT(a.sif_std_error, 0.0);
  const auto exact = observables::evaluate(s.psi, s.spec, s.K);
  EXPECT_NEAR(a.lip_probability, exact.lip_probability, 0.05);
  EXPECT_NEAR(a.overlap, exact.overlap, 0.05);
}

TEST(Observables, RejectNonCrackModels) {
  const auto spec = fem::make_problem(fem::Model::ScalarPoisson, 2, 2, 0.3);
  const auto K = decomp::build_restricted_operator(spec);
  core::StateVector psi = core::StateVector::basis(spec.num_qubits(), 5);
  EXPECT_THROW(observables::evaluate(psi, spec, K), fem::InvalidProblem);
}

}  // namespace
}  // namespace qremesh
