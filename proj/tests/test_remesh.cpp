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
#include <random>

#include "qremesh/core/dense.hpp"
#include "qremesh/fem/problem.hpp"
#include "qremesh/remesh/cascade.hpp"
#include "qremesh/remesh/duplicate.hpp"
#include "qremesh/remesh/encoding.hpp"
#include "qremesh/remesh/positions.hpp"
#include "qremesh/vqa/ansatz.hpp"

namespace qremesh {
namespace {

using remesh::EncodingDescriptor;
using remesh::LayoutMode;

// Standard layout oracle: axis registers MSB first in axis order, then dof.
std::vector<std::uint64_t> split(std::uint64_t index, const std::vector<int>& bits, int dof_bits) {
  std::vector<std::uint64_t> c(bits.size() + 1);
  c.back() = index & ((1U << dof_bits) - 1);
  index >>= dof_bits;
  for (std::size_t a = bits.size(); a-- > 0;) {
    c[a] = index & ((1U << bits[a]) - 1);
    index >>= bits[a];
  }
  return c;
}

std::uint64_t join(const std::vector<std::uint64_t>& c, const std::vector<int>& bits, int dof_bits) {
  std::uint64_t index = 0;
  for (std::size_t a = 0; a < bits.size(); ++a) index = (index << bits[a]) | c[a];
  return (index << dof_bits) | c.back();
}

struct Case {
  std::vector<int> bits;
  int dof;
};

TEST(Duplicate, MatchesIndexMapFormula) {
  std::mt19937_64 rng(21);
  const std::vector<Case> cases = {{{3}, 0}, {{4}, 1}, {{2, 3}, 1}, {{3, 3}, 1}, {{2, 2}, 0}, {{1, 2, 1}, 1}, {{2, 1, 2}, 0}};
  for (const auto& cs : cases) {
    const int dims = static_cast<int>(cs.bits.size());
    const auto enc = EncodingDescriptor::standard(dims, cs.bits, cs.dof);
    const auto psi = core::StateVector::random(enc.num_qubits(), rng);
    const auto dup = remesh::duplicate_state(psi, enc, LayoutMode::Swap);
    std::vector<int> fine_bits = cs.bits;
    for (int& b : fine_bits) ++b;
    ASSERT_EQ(dup.state.num_qubits(), enc.num_qubits() + dims);
    const double scale = std::pow(2.0, -dims / 2.0);
    double err = 0.0;
    for (std::uint64_t i = 0; i < dup.state.dimension(); ++i) {
      auto c = split(i, fine_bits, cs.dof);
      for (int a = 0; a < dims; ++a) c[a] >>= 1;
      err = std::max(err, std::abs(dup.state[i] - scale * psi[join(c, cs.bits, cs.dof)]));
    }
    EXPECT_LT(err, 1e-15);
    EXPECT_NEAR(dup.state.norm(), 1.0, 1e-12);
    // the program reproduces the state from the embedded coarse wires
    const auto back = remesh::average_back(dup.state, dup.enc);
    for (std::uint64_t i = 0; i < psi.dimension(); ++i) EXPECT_LT(std::abs(back[i] - scale * psi[i]), 1e-15);
  }
}

TEST(Duplicate, SwaplessEqualsSwapAfterPermutation) {
  std::mt19937_64 rng(22);
  for (const Case& cs : std::vector<Case>{{{2, 2}, 1}, {{3, 2}, 1}, {{2, 3}, 0}, {{4}, 1}, {{3}, 0}}) {
    const int dims = static_cast<int>(cs.bits.size());
    const auto std_enc = EncodingDescriptor::standard(dims, cs.bits, cs.dof);
    const auto sl_enc = EncodingDescriptor::swapless(dims, cs.bits, cs.dof);
    const auto psi = core::StateVector::random(std_enc.num_qubits(), rng);
    const auto a = remesh::duplicate_state(psi, std_enc, LayoutMode::Swap);
    const auto b = remesh::duplicate_state(remesh::from_standard(psi, sl_enc), sl_enc, LayoutMode::Swapless);
    EXPECT_EQ(b.program.count(qsim::GateKind::SWAP), 0u);
    const auto b_std = remesh::to_standard(b.state, b.enc);
    EXPECT_LT((core::to_eigen(a.state) - core::to_eigen(b_std)).cwiseAbs().maxCoeff(), 1e-15);
  }
}

TEST(Duplicate, SwaplessThreeDimensionsUnsupported) {
  EXPECT_THROW(EncodingDescriptor::swapless(3, {1, 1, 1}, 0), remesh::UnsupportedLayout);
}

TEST(Duplicate, GhzVariantIsNormalizedAndDiffers) {
  std::mt19937_64 rng(23);
  const auto enc = EncodingDescriptor::standard(2, {2, 2}, 1);
  const auto psi = core::StateVector::random(5, rng);
  const auto g = remesh::duplicate_state(psi, enc, LayoutMode::Swap, true);
  EXPECT_NEAR(g.state.norm(), 1.0, 1e-12);
  const auto h = remesh::duplicate_state(psi, enc, LayoutMode::Swap, false);
  EXPECT_GT((core::to_eigen(g.state) - core::to_eigen(h.state)).norm(), 1e-3);
}

TEST(Encoding, RoundTripAndCoordinates) {
  const auto enc = EncodingDescriptor::swapless(2, {3, 2}, 1);
  std::mt19937_64 rng(24);
  const auto psi = core::StateVector::random(enc.num_qubits(), rng);
  const auto round = remesh::from_standard(remesh::to_standard(psi, enc), enc);
  EXPECT_LT((core::to_eigen(round) - core::to_eigen(psi)).norm(), 1e-15);
  const auto std_enc = EncodingDescriptor::standard(2, {3, 2}, 1);
  for (std::uint64_t i = 0; i < (std::uint64_t{1} << std_enc.num_qubits()); ++i) {
    EXPECT_EQ(remesh::index_of(remesh::coordinates(i, std_enc), std_enc), i);
  }
  EXPECT_TRUE(std_enc.is_standard());
  EXPECT_FALSE(enc.is_standard());
}

TEST(Positions, ProjectionInequality) {
  for (int q = 1; q <= 10; ++q) EXPECT_TRUE(remesh::projection_inequality_holds(q));
  const auto p = remesh::node_positions(2, 3.0);
  ASSERT_EQ(p.size(), 4u);
  EXPECT_DOUBLE_EQ(p.back(), 3.0);
}

TEST(Cascade, StructureAndDeterminism) {
  remesh::CascadeConfig cfg;
  cfg.problem = fem::make_problem(fem::Model::HalfPlateCrack, 2, 2, 0.3);
  cfg.schedule.stages = {{2, 300}, {2, 300}};
  cfg.cold_start_arm = true;
  cfg.seed = 5;
  const auto a = remesh::run_cascade(cfg);
  ASSERT_EQ(a.warm.stages.size(), 2u);
  EXPECT_EQ(a.qubits, (std::vector<int>{5, 7}));
  EXPECT_TRUE(std::isnan(a.warm.stages[0].duplicated_cost));
  EXPECT_NEAR(a.warm.stages[1].cost_jump,
              a.warm.stages[1].duplicated_cost - a.warm.stages[0].final_cost, 1e-15);
  ASSERT_TRUE(a.cold.has_value());
  EXPECT_EQ(a.cold->stages[0].num_qubits, 7);
  EXPECT_LE(a.cold->total_evaluations, 600u);
  const auto b = remesh::run_cascade(cfg);
  EXPECT_EQ(a.warm.stages[1].theta, b.warm.stages[1].theta);
  EXPECT_EQ(a.cold->stages[0].final_cost, b.cold->stages[0].final_cost);
}

TEST(Cascade, WarmStartNeverWorsensTheDuplicatedCost) {
  remesh::CascadeConfig cfg;
  cfg.problem = fem::make_problem(fem::Model::HalfPlateCrack, 2, 2, 0.3);
  cfg.schedule.stages = {{2, 400}, {2, 400}};
  cfg.optimizer.initial_spread = 0.0;  // start exactly at the duplicated state
  const auto r = remesh::run_cascade(cfg);
  EXPECT_NEAR(r.warm.stages[1].initial_cost, r.warm.stages[1].duplicated_cost, 1e-10);
  EXPECT_LE(r.warm.stages[1].final_cost, r.warm.stages[1].duplicated_cost + 1e-12);
}

TEST(Cascade, SwaplessTracesMatchSwap) {
  remesh::CascadeConfig cfg;
  cfg.problem = fem::make_problem(fem::Model::HalfPlateCrack, 2, 2, 0.3);
  cfg.schedule.stages = {{1, 150}, {1, 150}};
  const auto a = remesh::run_cascade(cfg);
  cfg.layout = LayoutMode::Swapless;
  const auto b = remesh::run_cascade(cfg);
  for (std::size_t k = 0; k < 2; ++k) {
    ASSERT_EQ(a.warm.stages[k].trace.size(), b.warm.stages[k].trace.size());
    for (std::size_t i = 0; i < a.warm.stages[k].trace.size(); ++i) {
      EXPECT_NEAR(a.warm.stages[k].trace[i].best_cost, b.warm.stages[k].trace[i].best_cost, 1e-9);
    }
  }
}

TEST(Cascade, ValidationRejectsBadSchedules) {
  remesh::CascadeConfig cfg;
  cfg.problem = fem::make_problem(fem::Model::HalfPlateCrack, 2, 2, 0.3);
  EXPECT_THROW(remesh::validate(cfg), fem::InvalidProblem);
  cfg.schedule.stages = {{0, 10}};
  EXPECT_THROW(remesh::validate(cfg), fem::InvalidProblem);
  cfg.schedule.stages = {{1, 10}};
  cfg.shots = qsim::ShotConfig::with_shots(100, 1);
  cfg.schedule.stages[0].cost = vqa::CostKind::Energy;
  EXPECT_THROW(remesh::validate(cfg), fem::InvalidProblem);
}

}  // namespace
}  // namespace qremesh
