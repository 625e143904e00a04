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

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qremesh/fem/problem.hpp"
#include "qremesh/observables/observables.hpp"
#include "qremesh/qsim/sampling.hpp"
#include "qremesh/remesh/encoding.hpp"
#include "qremesh/vqa/ansatz.hpp"
#include "qremesh/vqa/cost.hpp"
#include "qremesh/vqa/optimizer.hpp"

namespace qremesh::remesh {

/// Settings of one cascade stage. Stage k runs on the base mesh refined k
/// times, so each stage adds one bit per axis.
struct StageSpec {
  int layers = 2;
  std::size_t max_evaluations = 2000;
  int max_iterations = 1000000;
  vqa::CostKind cost = vqa::CostKind::Quotient;
  int restarts = 0;
};

struct CascadeSchedule {
  std::vector<StageSpec> stages;
};

struct CascadeConfig {
  fem::ProblemSpec problem;  ///< coarsest mesh
  CascadeSchedule schedule;
  vqa::OptimizerConfig optimizer;  ///< tolerances, spread and step; budgets come from the stages
  qsim::ShotConfig shots;
  int mitigation_start_iteration = 0;
  std::uint64_t seed = 0;
  LayoutMode layout = LayoutMode::Swap;
  bool cold_start_arm = false;
  bool entangle_new_wires = false;
  vqa::ReferenceKind reference = vqa::ReferenceKind::Zero;
  observables::CodIndex cod_index = observables::CodIndex::CrackMouthVertical;
};

/// Throws fem::InvalidProblem naming the violated rule.
void validate(const CascadeConfig& cfg);

/// Qubit count of each stage.
std::vector<int> stage_qubits(const CascadeConfig& cfg);

struct StageReport {
  int stage = 0;
  int nx = 0;
  int ny = 0;
  int num_qubits = 0;
  int layers = 0;
  std::uint64_t ansatz_seed = 0;
  double previous_final_cost = 0.0;  ///< NaN on the first stage
  double duplicated_cost = 0.0;      ///< cost of the duplicated state on this mesh; NaN on the first stage
  double cost_jump = 0.0;            ///< duplicated_cost - previous_final_cost
  double initial_cost = 0.0;
  double final_cost = 0.0;  ///< exact cost of the final state
  double classical_optimum = 0.0;
  double fidelity = 0.0;  ///< against the normalized same-mesh classical solution
  bool has_observables = false;
  observables::ObservableReport quantum;
  double classical_cod = 0.0;
  double classical_sif = 0.0;
  double cod_rel_error = 0.0;
  double sif_rel_error = 0.0;
  std::size_t evaluations = 0;
  int iterations = 0;
  vqa::StopReason status = vqa::StopReason::IterationCap;
  std::string algorithm;
  std::vector<vqa::TracePoint> trace;
  std::vector<double> theta;
};

struct ArmReport {
  std::string arm;  ///< "warm" or "cold"
  std::vector<StageReport> stages;
  std::size_t total_evaluations = 0;
};

struct CascadeReport {
  ArmReport warm;
  std::optional<ArmReport> cold;
  std::vector<int> qubits;
};

/// Optimize, duplicate, rebuild the finer problem and continue from the
/// duplicated state with a fresh identity-at-reference ansatz; earlier
/// circuits stay frozen inside the carried state. The optional cold arm
/// optimizes the final mesh from random angles with the warm arm's total
/// evaluation budget.
CascadeReport run_cascade(const CascadeConfig& cfg);

/// Independent seed for (root, tag, index).
std::uint64_t derive_seed(std::uint64_t root, std::uint64_t tag, std::uint64_t index);

}  // namespace qremesh::remesh
