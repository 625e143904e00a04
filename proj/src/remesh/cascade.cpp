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

#include "qremesh/remesh/cascade.hpp"

#include <cmath>
#include <limits>

#include "qremesh/decomp/projectors.hpp"
#include "qremesh/fem/classical_observables.hpp"
#include "qremesh/fem/solve.hpp"
#include "qremesh/qsim/program.hpp"
#include "qremesh/remesh/duplicate.hpp"
#include "qremesh/vqa/ansatz.hpp"
#include "qremesh/vqa/sequential.hpp"

namespace qremesh::remesh {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

// Everything a stage needs about its mesh.
struct Mesh {
  fem::ProblemSpec spec;
  EncodingDescriptor enc;
  core::OperatorSum K;
  core::StateVector f_state;
  core::StateVector classical_state;  // normalized, standard order
  double classical_optimum = 0.0;
  Eigen::VectorXd u;
};

EncodingDescriptor layout_for(const fem::ProblemSpec& spec, LayoutMode mode) {
  const int dof = fem::is_vector(spec.model) ? 1 : 0;
  return mode == LayoutMode::Swap ? EncodingDescriptor::standard(2, {spec.ny, spec.nx}, dof)
                                  : EncodingDescriptor::swapless(2, {spec.ny, spec.nx}, dof);
}

core::StateVector force_state(const fem::ProblemSpec& spec) {
  if (fem::is_vector(spec.model)) return qsim::prepare_force_state(spec.nx, spec.ny);
  Eigen::VectorXd f = fem::force_vector(spec);
  return core::StateVector::from_real(std::span<const double>(f.data(), static_cast<std::size_t>(f.size())))
      .normalized();
}

Mesh build_mesh(const fem::ProblemSpec& spec, LayoutMode mode) {
  Mesh m{spec, layout_for(spec, mode), decomp::build_restricted_operator(spec), force_state(spec), {}, 0.0, {}};
  const fem::ClassicalSolution sol = fem::solve_problem(spec);
  m.u = sol.u;
  m.classical_state =
      core::StateVector::from_real(std::span<const double>(sol.u.data(), static_cast<std::size_t>(sol.u.size())))
          .normalized();
  const double fn = sol.f.norm();
  m.classical_optimum = -0.5 * sol.f.dot(sol.u) / (fn * fn);
  return m;
}

// Ansatz wires follow the standard wire order through the layout map, so
// swap and swapless runs perform the same arithmetic.
vqa::WireLayout wires_for(const EncodingDescriptor& enc) {
  vqa::WireLayout w;
  w.active = enc.standard_wire_map();
  return w;
}

core::StateVector standard_view(const core::StateVector& s, const EncodingDescriptor& enc) {
  return enc.is_standard() ? s : to_standard(s, enc);
}

double rel_error(double value, double reference) {
  return reference == 0.0 ? std::abs(value) : std::abs(value - reference) / std::abs(reference);
}

struct StageRun {
  StageReport report;
  core::StateVector state;  // layout order
};

StageRun run_stage(const CascadeConfig& cfg, const Mesh& mesh, const StageSpec& st, int stage_index,
                   const core::StateVector& input, const std::vector<double>* start, const vqa::AnsatzCircuit& ansatz,
                   std::size_t budget) {
  vqa::CostModel model(mesh.K, mesh.f_state, qsim::force_program(mesh.spec.nx, mesh.spec.ny), st.cost, cfg.shots);
  model.set_mitigation_start(cfg.mitigation_start_iteration);
  if (!fem::is_vector(mesh.spec.model) && !cfg.shots.exact()) {
    throw fem::InvalidProblem("shot-mode cascades need the vector force-state circuit");
  }

  auto state_at = [&](std::span<const double> theta) { return ansatz.apply(input, theta); };
  auto parts = [&](std::span<const double> theta) { return model.evaluate(standard_view(state_at(theta), mesh.enc)); };
  auto cost = [&](std::span<const double> theta) { return parts(theta).cost; };

  vqa::OptimizerConfig oc = cfg.optimizer;
  oc.max_evaluations = budget;
  oc.max_iterations = st.max_iterations;
  oc.restarts = st.restarts;
  auto tick = [&](int it) { model.set_iteration(it); };
  const vqa::OptimizeResult res = oc.algorithm == vqa::OptimizerAlgorithm::SequentialSinusoid
                                      ? vqa::optimize_sequential(parts, st.cost, *start, oc, tick)
                                      : vqa::optimize(cost, *start, oc, tick);

  StageRun run;
  run.state = state_at(res.theta);
  const core::StateVector std_state = standard_view(run.state, mesh.enc);
  StageReport& r = run.report;
  r.stage = stage_index;
  r.nx = mesh.spec.nx;
  r.ny = mesh.spec.ny;
  r.num_qubits = mesh.spec.num_qubits();
  r.layers = st.layers;
  r.initial_cost = res.initial_cost;
  r.final_cost = model.evaluate_exact(std_state).cost;
  r.classical_optimum = mesh.classical_optimum;
  r.fidelity = vqa::fidelity(std_state, mesh.classical_state);
  r.evaluations = res.evaluations;
  r.iterations = res.iterations;
  r.status = res.status;
  r.algorithm = res.algorithm;
  r.trace = res.trace;
  r.theta = res.theta;
  if (mesh.spec.model == fem::Model::HalfPlateCrack) {
    r.has_observables = true;
    r.quantum = observables::evaluate(std_state, mesh.spec, mesh.K, cfg.cod_index);
    const auto c = fem::classical_observables(mesh.u, mesh.spec);
    r.classical_cod = mesh.u(static_cast<Eigen::Index>(observables::cod_basis_index(mesh.spec, cfg.cod_index)));
    r.classical_sif = c.sif_integral;
    r.cod_rel_error = rel_error(r.quantum.cod, r.classical_cod);
    r.sif_rel_error = rel_error(r.quantum.sif, r.classical_sif);
  }
  return run;
}

}  // namespace

std::uint64_t derive_seed(std::uint64_t root, std::uint64_t tag, std::uint64_t index) {
  // splitmix64 over a combined key
  std::uint64_t z = root + 0x9E3779B97F4A7C15ULL * (tag * 0x100000001B3ULL + index + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

void validate(const CascadeConfig& cfg) {
  fem::validate(cfg.problem);
  vqa::validate(cfg.optimizer);
  if (cfg.schedule.stages.empty()) throw fem::InvalidProblem("cascade schedule needs at least one stage");
  for (const auto& s : cfg.schedule.stages) {
    if (s.layers < 1) throw fem::InvalidProblem("every stage needs at least one ansatz layer");
    if (s.max_evaluations == 0) throw fem::InvalidProblem("every stage needs a positive evaluation budget");
    if (s.restarts < 0) throw fem::InvalidProblem("stage restarts must be >= 0");
    if (!cfg.shots.exact() && s.cost == vqa::CostKind::Energy) {
      throw fem::InvalidProblem("shot mode supports the quotient cost only");
    }
  }
  const auto q = stage_qubits(cfg);
  if (q.back() > 20) throw fem::InvalidProblem("cascade exceeds 20 qubits");
  if (cfg.shots.shots && *cfg.shots.shots == 0) throw fem::InvalidProblem("shot count must be positive");
}

std::vector<int> stage_qubits(const CascadeConfig& cfg) {
  std::vector<int> q;
  for (std::size_t k = 0; k < cfg.schedule.stages.size(); ++k) {
    q.push_back(cfg.problem.refined(static_cast<int>(k)).num_qubits());
  }
  return q;
}

CascadeReport run_cascade(const CascadeConfig& cfg) {
  validate(cfg);
  CascadeReport out;
  out.qubits = stage_qubits(cfg);
  out.warm.arm = "warm";

  std::optional<core::StateVector> carried;  // layout order of the previous mesh
  EncodingDescriptor prev_enc;
  double prev_cost = kNaN;
  std::size_t budget_total = 0;
  Mesh mesh;

  for (std::size_t k = 0; k < cfg.schedule.stages.size(); ++k) {
    const StageSpec& st = cfg.schedule.stages[k];
    mesh = build_mesh(cfg.problem.refined(static_cast<int>(k)), cfg.layout);
    const int n = mesh.spec.num_qubits();
    const std::uint64_t aseed = derive_seed(cfg.seed, 1, k);
    const vqa::AnsatzCircuit ansatz = vqa::build_ansatz(n, st.layers, wires_for(mesh.enc), aseed, cfg.reference);

    core::StateVector input(n);
    std::vector<double> start;
    double duplicated_cost = kNaN;
    if (!carried) {
      start = vqa::random_point(ansatz, derive_seed(cfg.seed, 2, k));
    } else {
      input = duplicate_state(*carried, prev_enc, cfg.layout, cfg.entangle_new_wires).state;
      start = vqa::warm_start_point(ansatz, cfg.optimizer.initial_spread, derive_seed(cfg.seed, 3, k));
      const vqa::CostModel exact(mesh.K, mesh.f_state, qsim::force_program(mesh.spec.nx, mesh.spec.ny), st.cost);
      duplicated_cost = exact.evaluate_exact(standard_view(input, mesh.enc)).cost;
    }

    StageRun run = run_stage(cfg, mesh, st, static_cast<int>(k), input, &start, ansatz, st.max_evaluations);
    run.report.ansatz_seed = aseed;
    run.report.previous_final_cost = prev_cost;
    run.report.duplicated_cost = duplicated_cost;
    run.report.cost_jump = duplicated_cost - prev_cost;
    budget_total += st.max_evaluations;
    out.warm.total_evaluations += run.report.evaluations;
    prev_cost = run.report.final_cost;
    carried = std::move(run.state);
    prev_enc = mesh.enc;
    out.warm.stages.push_back(std::move(run.report));
  }

  if (cfg.cold_start_arm) {
    ArmReport cold;
    cold.arm = "cold";
    const StageSpec& st = cfg.schedule.stages.back();
    const int n = mesh.spec.num_qubits();
    const std::uint64_t aseed = derive_seed(cfg.seed, 4, 0);
    const vqa::AnsatzCircuit ansatz = vqa::build_ansatz(n, st.layers, wires_for(mesh.enc), aseed, cfg.reference);
    const std::vector<double> start = vqa::random_point(ansatz, derive_seed(cfg.seed, 5, 0));
    StageRun run = run_stage(cfg, mesh, st, static_cast<int>(cfg.schedule.stages.size()) - 1, core::StateVector(n),
                             &start, ansatz, budget_total);
    run.report.ansatz_seed = aseed;
    run.report.previous_final_cost = kNaN;
    run.report.duplicated_cost = kNaN;
    run.report.cost_jump = kNaN;
    cold.total_evaluations = run.report.evaluations;
    cold.stages.push_back(std::move(run.report));
    out.cold = std::move(cold);
  }
  return out;
}

}  // namespace qremesh::remesh
