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

#include "qremesh/cli/commands.hpp"

#include <cmath>
#include <filesystem>
#include <ostream>
#include <random>
#include <sstream>

#include "qremesh/core/dense.hpp"
#include "qremesh/core/kernels.hpp"
#include "qremesh/decomp/measurement.hpp"
#include "qremesh/decomp/operator_builder.hpp"
#include "qremesh/decomp/projectors.hpp"
#include "qremesh/fem/assembly.hpp"
#include "qremesh/fem/classical_observables.hpp"
#include "qremesh/fem/solve.hpp"
#include "qremesh/io/serialize.hpp"
#include "qremesh/observables/observables.hpp"
#include "qremesh/qsim/grouped.hpp"
#include "qremesh/qsim/sampling.hpp"
#include "qremesh/remesh/cascade.hpp"

namespace qremesh::cli {

namespace fs = std::filesystem;
using io::json;

namespace {

constexpr double kOperatorTol = 1e-12;
constexpr double kExpectationTol = 1e-10;
constexpr double kKernelTol = 1e-10;
constexpr int kRandomStates = 8;

InvariantCheck bounded(std::string name, double error, double tol, std::string detail = {}) {
  return {std::move(name), error <= tol, error, tol, std::move(detail)};
}

double real_diff(const core::SparseMatrix& a, const fem::RealSparse& b) {
  const core::SparseMatrix bc = b.cast<core::Complex>();
  return core::max_abs_diff(a, bc);
}

double inf_norm(const Eigen::VectorXd& v) { return v.size() ? v.cwiseAbs().maxCoeff() : 0.0; }

// Rigid modes of the unconstrained operator: both translations and the
// infinitesimal rotation for vector models, the constant field for scalar ones.
std::vector<std::pair<std::string, Eigen::VectorXd>> rigid_modes(const fem::ProblemSpec& spec) {
  const auto dim = static_cast<Eigen::Index>(spec.dimension());
  std::vector<std::pair<std::string, Eigen::VectorXd>> modes;
  if (!fem::is_vector(spec.model)) {
    modes.emplace_back("constant", Eigen::VectorXd::Ones(dim));
    return modes;
  }
  Eigen::VectorXd tx = Eigen::VectorXd::Zero(dim), ty = tx, rot = tx;
  for (int y = 0; y < spec.nodes_y(); ++y) {
    for (int x = 0; x < spec.nodes_x(); ++x) {
      const auto ix = static_cast<Eigen::Index>(spec.dof_index(x, y, 0));
      const auto iy = static_cast<Eigen::Index>(spec.dof_index(x, y, 1));
      tx(ix) = 1.0;
      ty(iy) = 1.0;
      rot(ix) = -y;
      rot(iy) = x;
    }
  }
  modes.emplace_back("translation_x", tx);
  modes.emplace_back("translation_y", ty);
  modes.emplace_back("rotation", rot);
  return modes;
}

void check_groups(VerifyReport& r, const std::string& label, const core::OperatorSum& op, std::mt19937_64& rng) {
  const auto groups = decomp::measurement_groups(op);
  double err = 0.0;
  for (int i = 0; i < kRandomStates; ++i) {
    const auto psi = core::StateVector::random(op.num_qubits(), rng);
    const double grouped = qsim::expectation_grouped(psi, groups, qsim::ShotConfig::exact_mode()).value;
    err = std::max(err, std::abs(grouped - core::expectation_direct(psi, op).real()));
  }
  r.checks.push_back(bounded("grouped_expectation_" + label, err, kExpectationTol,
                             std::to_string(groups.size()) + " groups, " + std::to_string(kRandomStates) + " states"));
}

void require_cap(const fem::ProblemSpec& spec) {
  if (spec.num_qubits() > kVerifyQubitCap) {
    throw fem::InvalidProblem("verify needs at most " + std::to_string(kVerifyQubitCap) + " qubits, problem has " +
                              std::to_string(spec.num_qubits()));
  }
}

void log_checks(const VerifyReport& r, std::ostream& log) {
  for (const auto& c : r.checks) {
    log << (c.passed ? "ok    " : "FAIL  ") << c.name << "  error=" << io::format_double(c.error)
        << " tol=" << io::format_double(c.tolerance);
    if (!c.detail.empty()) log << "  (" << c.detail << ")";
    log << '\n';
  }
}

json checks_json(const VerifyReport& r) {
  json a = json::array();
  for (const auto& c : r.checks) {
    a.push_back({{"name", c.name},
                 {"passed", c.passed},
                 {"error", c.error},
                 {"tolerance", c.tolerance},
                 {"detail", c.detail}});
  }
  return {{"schema", "qremesh.verify/1"}, {"passed", r.passed()}, {"checks", std::move(a)}};
}

json classical_row(const fem::ProblemSpec& spec, const fem::ClassicalSolution& sol) {
  json row = {{"nx", spec.nx},
              {"ny", spec.ny},
              {"num_qubits", spec.num_qubits()},
              {"energy", fem::energy(sol.K, sol.f, sol.u)},
              {"solution_norm", sol.u.norm()}};
  if (spec.model == fem::Model::HalfPlateCrack) row["observables"] = io::to_json(fem::classical_observables(sol.u, spec));
  return row;
}

void write_stage(const fs::path& dir, const remesh::StageReport& s) {
  std::ostringstream trace;
  io::write_trace_csv(trace, s.trace);
  io::write_text(dir / "trace.csv", trace.str());
  io::write_json(dir / "report.json", io::to_json(s));
}

void log_stage(std::ostream& log, const std::string& arm, const remesh::StageReport& s) {
  log << arm << " stage " << s.stage << ": " << s.num_qubits << " qubits, cost " << io::format_double(s.final_cost)
      << " (classical " << io::format_double(s.classical_optimum) << "), fidelity " << io::format_double(s.fidelity)
      << ", " << s.evaluations << " evaluations, " << vqa::to_string(s.status) << '\n';
}

}  // namespace

bool VerifyReport::passed() const {
  for (const auto& c : checks) {
    if (!c.passed) return false;
  }
  return !checks.empty();
}

VerifyReport verify_operator(const fem::ProblemSpec& spec, const core::OperatorSum& K, std::uint64_t seed) {
  require_cap(spec);
  VerifyReport r;
  if (K.num_qubits() != spec.num_qubits()) {
    r.checks.push_back({"operator_width", false, static_cast<double>(std::abs(K.num_qubits() - spec.num_qubits())), 0.0,
                        "operator and problem qubit counts differ"});
    return r;
  }
  const core::SparseMatrix Kq = core::materialize_sparse(K);
  r.checks.push_back(bounded("decomposition_matches_assembly", real_diff(Kq, fem::assemble_K_sparse(spec)),
                             kOperatorTol));
  const core::SparseMatrix Kt = core::SparseMatrix(Kq.adjoint());
  r.checks.push_back(bounded("operator_hermitian", core::max_abs_diff(Kq, Kt), kOperatorTol));

  std::mt19937_64 rng = qsim::derive_rng(seed, 0x5E7F);
  check_groups(r, "stiffness", K, rng);

  if (fem::is_vector(spec.model)) {
    const auto groups = decomp::measurement_groups(K).size();
    std::size_t expected = decomp::term_count(spec.nx, spec.ny);
    std::string detail = "law 2nxny+2nx+2ny+2";
    if (spec.nu == 0.25) {
      expected -= static_cast<std::size_t>(spec.nx + spec.ny);  // shear coupling vanishes
      detail += " minus nx+ny at nu=0.25";
    }
    r.checks.push_back({"group_count_law", groups == expected,
                        std::abs(static_cast<double>(groups) - static_cast<double>(expected)), 0.0,
                        std::to_string(groups) + " groups, " + detail});
  }
  const std::size_t bound = decomp::term_bound(spec.nx, spec.ny);
  r.checks.push_back({"term_bound", K.size() <= bound, static_cast<double>(K.size()), static_cast<double>(bound),
                      "terms vs polylog bound"});
  return r;
}

VerifyReport verify_problem(const fem::ProblemSpec& spec, std::uint64_t seed) {
  fem::validate(spec);
  VerifyReport r = verify_operator(spec, decomp::build_operator(spec), seed);
  std::mt19937_64 rng = qsim::derive_rng(seed, 0x5E80);

  const auto P = decomp::dirichlet_projector_terms(spec.bc, spec.num_qubits());
  const auto Kr = decomp::build_restricted_operator(spec);
  if (!P.empty()) {
    const auto expected = fem::apply_dirichlet(fem::assemble_K_sparse(spec), P);
    r.checks.push_back(bounded("restriction_matches_assembly", real_diff(core::materialize_sparse(Kr), expected),
                               kOperatorTol));
    const auto Pm = core::materialize_sparse(P);
    const core::SparseMatrix P2 = Pm * Pm;
    r.checks.push_back(bounded("projector_idempotent", core::max_abs_diff(P2, Pm), kOperatorTol));
    check_groups(r, "projector", P, rng);
  }
  check_groups(r, "restricted", Kr, rng);
  if (spec.model == fem::Model::HalfPlateCrack) {
    check_groups(r, "lip_projector", decomp::lip_projector(spec, fem::LipDomain::FullLip), rng);
  }

  fem::ProblemSpec free = spec;
  free.bc.clear();
  const auto Kfree = core::materialize_sparse(decomp::build_operator(free));
  const Eigen::SparseMatrix<double> Kre = Kfree.real();
  for (const auto& [name, v] : rigid_modes(spec)) {
    r.checks.push_back(bounded("kernel_" + name, inf_norm(Kre * v), kKernelTol));
  }
  return r;
}

int cmd_verify(const io::RunConfig& cfg, std::ostream& log) {
  io::validate(cfg);
  const VerifyReport r = verify_problem(cfg.problem, cfg.seed);
  log_checks(r, log);
  io::write_json(fs::path(cfg.output_dir) / "verify.json", checks_json(r));
  log << (r.passed() ? "verify: pass" : "verify: FAIL") << '\n';
  return r.passed() ? 0 : 1;
}

int cmd_solve_classical(const io::RunConfig& cfg, std::ostream& log) {
  io::validate(cfg);
  const fs::path out(cfg.output_dir);
  fem::ClassicalSolution sol;
  try {
    sol = fem::solve_problem(cfg.problem);
  } catch (const fem::SingularMatrix& e) {
    throw fem::SingularMatrix(std::string("solve-classical on the base mesh: ") + e.what());
  }
  std::ostringstream csv;
  io::write_solution_csv(csv, sol.u, cfg.problem);
  io::write_text(out / "solution.csv", csv.str());

  json doc = {{"schema", io::kObservablesSchema}, {"problem", io::to_json(cfg.problem)}};
  json levels = json::array();
  levels.push_back(classical_row(cfg.problem, sol));
  for (int k = 1; k <= cfg.refinement_sweep; ++k) {
    const auto spec = cfg.problem.refined(k);
    try {
      levels.push_back(classical_row(spec, fem::solve_problem(spec)));
    } catch (const fem::SingularMatrix& e) {
      throw fem::SingularMatrix("solve-classical at refinement level " + std::to_string(k) + ": " + e.what());
    }
  }
  doc["levels"] = std::move(levels);
  io::write_json(out / "observables.json", doc);
  log << "solve-classical: " << cfg.problem.dimension() << " dofs, " << cfg.refinement_sweep + 1
      << " level(s) written to " << out.string() << '\n';
  return 0;
}

int cmd_decompose_dump(const io::RunConfig& cfg, std::ostream& log) {
  io::validate(cfg);
  const fs::path out(cfg.output_dir);
  const auto K = decomp::build_operator(cfg.problem);
  const auto Kr = decomp::build_restricted_operator(cfg.problem);
  io::write_json(out / "terms.json", io::term_dump(K));
  io::write_json(out / "terms_restricted.json", io::term_dump(Kr));

  json groups = json::array();
  for (const auto& g : decomp::measurement_groups(K)) {
    json entries = json::array();
    for (const auto& e : g.diagonal) {
      entries.push_back({{"coefficient", e.coefficient}, {"care", e.care}, {"value", e.value}, {"parity", e.parity}});
    }
    const char* rot = g.pivot_rotation == decomp::PivotRotation::None       ? "none"
                      : g.pivot_rotation == decomp::PivotRotation::Hadamard ? "hadamard"
                                                                            : "n_gate";
    groups.push_back({{"flip_mask", g.flip_mask},
                      {"chain", g.chain},
                      {"pivot_rotation", rot},
                      {"source_terms", g.terms.size()},
                      {"entries", std::move(entries)}});
  }
  io::write_json(out / "groups.json",
                 {{"schema", "qremesh.groups/1"}, {"count", groups.size()}, {"groups", std::move(groups)}});
  log << "decompose-dump: " << K.size() << " terms (" << Kr.size() << " restricted) written to " << out.string()
      << '\n';
  return 0;
}

int cmd_vqa_run(const io::RunConfig& cfg, std::ostream& log) {
  io::validate(cfg);
  remesh::CascadeConfig cc = io::cascade_config(cfg);
  cc.schedule.stages.resize(1);
  cc.cold_start_arm = false;
  const auto report = remesh::run_cascade(cc);
  const auto& s = report.warm.stages.front();
  write_stage(fs::path(cfg.output_dir), s);
  log_stage(log, "vqa", s);
  return 0;
}

int cmd_cascade(const io::RunConfig& cfg, std::ostream& log) {
  io::validate(cfg);
  const remesh::CascadeConfig cc = io::cascade_config(cfg);
  const auto report = remesh::run_cascade(cc);
  const fs::path out(cfg.output_dir);

  json stages = json::array();
  for (const auto& s : report.warm.stages) {
    write_stage(out / ("stage_" + std::to_string(s.stage)), s);
    log_stage(log, "warm", s);
    stages.push_back({{"stage", s.stage},
                      {"nx", s.nx},
                      {"ny", s.ny},
                      {"num_qubits", s.num_qubits},
                      {"ansatz_seed", s.ansatz_seed},
                      {"directory", "stage_" + std::to_string(s.stage)}});
  }
  json manifest = {{"schema", io::kManifestSchema},
                   {"config", io::to_json(cfg)},
                   {"root_seed", cfg.seed},
                   {"layout", std::string(remesh::to_string(cfg.layout))},
                   {"qubits", report.qubits},
                   {"stages", std::move(stages)},
                   {"warm_total_evaluations", report.warm.total_evaluations}};
  if (report.cold) {
    const auto& s = report.cold->stages.front();
    write_stage(out / "cold" / ("stage_" + std::to_string(s.stage)), s);
    log_stage(log, "cold", s);
    manifest["cold"] = {{"num_qubits", s.num_qubits},
                        {"ansatz_seed", s.ansatz_seed},
                        {"evaluations", s.evaluations},
                        {"directory", "cold/stage_" + std::to_string(s.stage)}};
  }
  io::write_json(out / "manifest.json", manifest);
  return 0;
}

int cmd_observables(const io::RunConfig& cfg, std::ostream& log) {
  io::validate(cfg);
  if (cfg.problem.model != fem::Model::HalfPlateCrack) {
    throw fem::InvalidProblem("observables needs the half_plate_crack model");
  }
  const fs::path out(cfg.output_dir);
  const auto& spec = cfg.problem;
  const auto sol = fem::solve_problem(spec);
  const double un = sol.u.norm();
  if (un == 0.0) throw fem::InvalidProblem("observables needs a nonzero load");
  const auto psi =
      core::StateVector::from_real(std::span<const double>(sol.u.data(), static_cast<std::size_t>(sol.u.size())))
          .normalized();
  const auto K = decomp::build_restricted_operator(spec);
  const auto quantum = observables::evaluate(psi, spec, K, cfg.cod_index, cfg.shots);
  json doc = {{"schema", io::kObservablesSchema},
              {"problem", io::to_json(spec)},
              {"state", "normalized classical solution"},
              {"mode", cfg.shots.exact() ? json("exact") : json(*cfg.shots.shots)},
              {"quantum", io::to_json(quantum)},
              {"classical", io::to_json(fem::classical_observables(sol.u, spec))}};
  io::write_json(out / "observables.json", doc);
  if (!cfg.shots.exact()) io::write_json(out / "counts.json", io::to_json(qsim::sample(psi, cfg.shots), spec.num_qubits()));
  log << "observables: cod " << io::format_double(quantum.cod) << ", sif " << io::format_double(quantum.sif) << '\n';
  return 0;
}

const std::vector<CommandInfo>& commands() {
  static const std::vector<CommandInfo> table = {
      {"verify", "check the operator decomposition and measurement groups against assembly", cmd_verify},
      {"solve-classical", "classical FEM solution and observables", cmd_solve_classical},
      {"decompose-dump", "write the operator terms and measurement groups as JSON", cmd_decompose_dump},
      {"vqa-run", "optimize the ansatz on the base mesh", cmd_vqa_run},
      {"cascade", "warm-started remeshing cascade with optional cold arm", cmd_cascade},
      {"observables", "quantum observable estimators on the classical solution state", cmd_observables},
  };
  return table;
}

}  // namespace qremesh::cli
