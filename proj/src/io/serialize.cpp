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

#include "qremesh/io/serialize.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace qremesh::io {

namespace {

// nlohmann writes NaN as null; keep it that way but spell it out for
// fields where a missing value is expected.
json number(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

}  // namespace

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

json term_dump(const core::OperatorSum& op) {
  json terms = json::array();
  for (const auto& t : op.terms()) {
    terms.push_back({{"re", t.coefficient.real()}, {"im", t.coefficient.imag()}, {"factors", t.label()}});
  }
  return {{"schema", kTermsSchema}, {"num_qubits", op.num_qubits()}, {"hermitian", op.hermitian()},
          {"count", op.size()}, {"terms", std::move(terms)}};
}

json to_json(const fem::ProblemSpec& spec) {
  json bc = json::array();
  for (const auto& b : spec.bc) bc.push_back({{"name", b.name}, {"selector", b.selector}});
  return {{"model", std::string(fem::to_string(spec.model))},
          {"nx", spec.nx},
          {"ny", spec.ny},
          {"nu", spec.nu},
          {"width", spec.width},
          {"height", spec.height},
          {"load_density", spec.load_density},
          {"bc", std::move(bc)}};
}

json to_json(const fem::ClassicalObservables& obs) {
  return {{"cod", number(obs.cod)},
          {"sif_fit", number(obs.sif_fit)},
          {"sif_integral", number(obs.sif_integral)},
          {"sif_integral_inner", number(obs.sif_integral_inner)}};
}

json to_json(const observables::ObservableReport& obs) {
  return {{"norm", number(obs.norm)},
          {"cod", number(obs.cod)},
          {"cod_index", obs.cod_index},
          {"sif", number(obs.sif)},
          {"sif_restricted", number(obs.sif_restricted)},
          {"sif_std_error", number(obs.sif_std_error)},
          {"stiffness", number(obs.stiffness)},
          {"overlap", number(obs.overlap)},
          {"lip_probability", number(obs.lip_probability)},
          {"lip_probability_restricted", number(obs.lip_probability_restricted)}};
}

json to_json(const remesh::StageReport& s) {
  json theta = json::array();
  for (double t : s.theta) theta.push_back(t);
  json j = {{"schema", kStageSchema},
            {"stage", s.stage},
            {"nx", s.nx},
            {"ny", s.ny},
            {"num_qubits", s.num_qubits},
            {"layers", s.layers},
            {"ansatz_seed", s.ansatz_seed},
            {"previous_final_cost", number(s.previous_final_cost)},
            {"duplicated_cost", number(s.duplicated_cost)},
            {"cost_jump", number(s.cost_jump)},
            {"initial_cost", number(s.initial_cost)},
            {"final_cost", number(s.final_cost)},
            {"classical_optimum", number(s.classical_optimum)},
            {"fidelity", number(s.fidelity)},
            {"evaluations", s.evaluations},
            {"iterations", s.iterations},
            {"status", std::string(vqa::to_string(s.status))},
            {"algorithm", s.algorithm},
            {"theta", std::move(theta)}};
  if (s.has_observables) {
    j["observables"] = {{"quantum", to_json(s.quantum)},
                        {"classical_cod", number(s.classical_cod)},
                        {"classical_sif", number(s.classical_sif)},
                        {"cod_rel_error", number(s.cod_rel_error)},
                        {"sif_rel_error", number(s.sif_rel_error)}};
  }
  return j;
}

json to_json(const qsim::Counts& counts, int num_qubits) {
  json c = json::object();
  for (const auto& [outcome, n] : counts) {
    std::string bits(static_cast<std::size_t>(num_qubits), '0');
    for (int q = 0; q < num_qubits; ++q) {
      if ((outcome >> (num_qubits - 1 - q)) & 1U) bits[static_cast<std::size_t>(q)] = '1';
    }
    c[bits] = n;
  }
  return {{"schema", kCountsSchema}, {"num_qubits", num_qubits}, {"counts", std::move(c)}};
}

void write_trace_csv(std::ostream& os, const std::vector<vqa::TracePoint>& trace) {
  os << "iteration,best_cost,evaluations\n";
  for (const auto& p : trace) os << p.iteration << ',' << format_double(p.best_cost) << ',' << p.evaluations << '\n';
}

void write_solution_csv(std::ostream& os, const Eigen::VectorXd& u, const fem::ProblemSpec& spec) {
  if (static_cast<std::uint64_t>(u.size()) != spec.dimension()) {
    throw std::invalid_argument("solution length does not match the problem dimension");
  }
  const bool vec = fem::is_vector(spec.model);
  os << (vec ? "node,x,y,u_x,u_y\n" : "node,x,y,u\n");
  const double hx = spec.width / spec.nodes_x();
  const double hy = spec.height / spec.nodes_y();
  std::uint64_t node = 0;
  for (int y = 0; y < spec.nodes_y(); ++y) {
    for (int x = 0; x < spec.nodes_x(); ++x, ++node) {
      os << node << ',' << format_double(x * hx) << ',' << format_double(y * hy);
      if (vec) {
        os << ',' << format_double(u(static_cast<Eigen::Index>(spec.dof_index(x, y, 0)))) << ','
           << format_double(u(static_cast<Eigen::Index>(spec.dof_index(x, y, 1))));
      } else {
        os << ',' << format_double(u(static_cast<Eigen::Index>(spec.dof_index(x, y))));
      }
      os << '\n';
    }
  }
}

void write_text(const std::filesystem::path& path, const std::string& text) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
  out << text;
  if (!out) throw std::runtime_error("failed writing " + path.string());
}

void write_json(const std::filesystem::path& path, const json& j) { write_text(path, j.dump(2) + "\n"); }

}  // namespace qremesh::io
