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

#include "qremesh/io/config.hpp"

#include <fstream>
#include <set>

namespace qremesh::io {

using nlohmann::json;

namespace {

[[noreturn]] void fail(const std::string& msg) { throw fem::InvalidProblem("config: " + msg); }

void reject_unknown(const json& block, const std::string& where, std::initializer_list<const char*> keys) {
  if (!block.is_object()) fail("'" + where + "' must be an object");
  const std::set<std::string> allowed(keys.begin(), keys.end());
  for (const auto& [k, v] : block.items()) {
    if (!allowed.count(k)) fail("unknown key '" + k + "' in '" + where + "'");
  }
}

template <class T>
void read(const json& block, const char* key, T& out, const std::string& where) {
  if (!block.contains(key)) return;
  try {
    out = block.at(key).get<T>();
  } catch (const json::exception&) {
    fail("'" + where + "." + key + "' has the wrong type");
  }
}

void read_problem(const json& b, RunConfig& c) {
  reject_unknown(b, "problem", {"model", "nx", "ny", "nu", "width", "height", "load_density", "bc"});
  auto& p = c.problem;
  if (b.contains("model")) {
    std::string m;
    read(b, "model", m, "problem");
    const auto model = fem::parse_model(m);
    if (!model) fail("unknown model '" + m + "'");
    p.model = *model;
  }
  read(b, "nx", p.nx, "problem");
  read(b, "ny", p.ny, "problem");
  read(b, "nu", p.nu, "problem");
  read(b, "width", p.width, "problem");
  read(b, "height", p.height, "problem");
  read(b, "load_density", p.load_density, "problem");
  if (p.nx < 1 || p.ny < 1) fail("mesh exponents nx and ny must be >= 1");
  if (b.contains("bc")) {
    if (!b["bc"].is_array()) fail("'problem.bc' must be a list");
    p.bc.clear();
    for (const auto& e : b["bc"]) {
      reject_unknown(e, "problem.bc[]", {"name", "selector"});
      fem::BCDescriptor d;
      read(e, "name", d.name, "problem.bc[]");
      read(e, "selector", d.selector, "problem.bc[]");
      p.bc.push_back(std::move(d));
    }
  } else {
    p.bc = fem::default_bc(p.model, p.nx, p.ny);
  }
}

void read_schedule(const json& b, RunConfig& c) {
  reject_unknown(b, "schedule", {"stages"});
  if (!b.contains("stages")) return;
  if (!b["stages"].is_array()) fail("'schedule.stages' must be a list");
  c.schedule.stages.clear();
  for (const auto& e : b["stages"]) {
    reject_unknown(e, "schedule.stages[]", {"layers", "max_evaluations", "max_iterations", "cost", "restarts"});
    remesh::StageSpec s;
    read(e, "layers", s.layers, "schedule.stages[]");
    read(e, "max_evaluations", s.max_evaluations, "schedule.stages[]");
    read(e, "max_iterations", s.max_iterations, "schedule.stages[]");
    read(e, "restarts", s.restarts, "schedule.stages[]");
    if (e.contains("cost")) {
      std::string k;
      read(e, "cost", k, "schedule.stages[]");
      const auto kind = vqa::parse_cost_kind(k);
      if (!kind) fail("unknown cost '" + k + "'");
      s.cost = *kind;
    }
    c.schedule.stages.push_back(s);
  }
}

void read_optimizer(const json& b, RunConfig& c) {
  reject_unknown(b, "optimizer", {"max_iterations", "max_evaluations", "absolute_tolerance", "relative_tolerance",
                                  "initial_spread", "initial_step", "restarts", "algorithm"});
  auto& o = c.optimizer;
  read(b, "max_iterations", o.max_iterations, "optimizer");
  if (b.contains("max_evaluations") && !b["max_evaluations"].is_null()) {
    std::size_t m = 0;
    read(b, "max_evaluations", m, "optimizer");
    o.max_evaluations = m;
  }
  read(b, "absolute_tolerance", o.absolute_tolerance, "optimizer");
  read(b, "relative_tolerance", o.relative_tolerance, "optimizer");
  read(b, "initial_spread", o.initial_spread, "optimizer");
  read(b, "initial_step", o.initial_step, "optimizer");
  read(b, "restarts", o.restarts, "optimizer");
  if (b.contains("algorithm")) {
    std::string a;
    read(b, "algorithm", a, "optimizer");
    const auto alg = vqa::parse_algorithm(a);
    if (!alg) fail("unknown optimizer algorithm '" + a + "'");
    o.algorithm = *alg;
  }
}

void read_shots(const json& b, RunConfig& c) {
  reject_unknown(b, "shots", {"shots", "mitigation_threshold", "mitigation_start_iteration"});
  if (b.contains("shots")) {
    const json& s = b["shots"];
    if (s.is_string() && s.get<std::string>() == "exact") {
      c.shots.shots.reset();
    } else if (s.is_number_unsigned()) {
      c.shots.shots = s.get<std::uint64_t>();
    } else {
      fail("'shots.shots' must be \"exact\" or a positive integer");
    }
  }
  if (b.contains("mitigation_threshold") && !b["mitigation_threshold"].is_null()) {
    double t = 0.0;
    read(b, "mitigation_threshold", t, "shots");
    c.shots.mitigation_threshold = t;
  }
  read(b, "mitigation_start_iteration", c.mitigation_start_iteration, "shots");
}

json stage_json(const remesh::StageSpec& s) {
  return {{"layers", s.layers},
          {"max_evaluations", s.max_evaluations},
          {"max_iterations", s.max_iterations},
          {"cost", std::string(vqa::to_string(s.cost))},
          {"restarts", s.restarts}};
}

}  // namespace

RunConfig default_config() {
  RunConfig c;
  c.problem = fem::make_problem(fem::Model::HalfPlateCrack, 2, 2, 0.3);
  c.schedule.stages = {remesh::StageSpec{}, remesh::StageSpec{}};
  return c;
}

RunConfig parse_config(const json& doc_in) {
  const json& doc = doc_in.contains("config") ? doc_in["config"] : doc_in;
  reject_unknown(doc, "config",
                 {"schema", "problem", "schedule", "optimizer", "shots", "output_dir", "seed", "layout",
                  "cold_start_arm", "entangle_new_wires", "ansatz_reference", "cod_index", "refinement_sweep"});
  if (doc.contains("schema") && doc["schema"] != kConfigSchema) {
    fail("unsupported schema '" + doc["schema"].dump() + "', expected " + kConfigSchema);
  }
  RunConfig c = default_config();
  if (doc.contains("problem")) read_problem(doc["problem"], c);
  if (doc.contains("schedule")) read_schedule(doc["schedule"], c);
  if (doc.contains("optimizer")) read_optimizer(doc["optimizer"], c);
  if (doc.contains("shots")) read_shots(doc["shots"], c);
  read(doc, "output_dir", c.output_dir, "config");
  read(doc, "seed", c.seed, "config");
  read(doc, "cold_start_arm", c.cold_start_arm, "config");
  read(doc, "entangle_new_wires", c.entangle_new_wires, "config");
  read(doc, "refinement_sweep", c.refinement_sweep, "config");
  if (doc.contains("layout")) {
    std::string l;
    read(doc, "layout", l, "config");
    if (l == "swap") c.layout = remesh::LayoutMode::Swap;
    else if (l == "swapless") c.layout = remesh::LayoutMode::Swapless;
    else fail("layout must be 'swap' or 'swapless'");
  }
  if (doc.contains("ansatz_reference")) {
    std::string r;
    read(doc, "ansatz_reference", r, "config");
    if (r == "zero") c.reference = vqa::ReferenceKind::Zero;
    else if (r == "random") c.reference = vqa::ReferenceKind::Random;
    else fail("ansatz_reference must be 'zero' or 'random'");
  }
  if (doc.contains("cod_index")) {
    std::string k;
    read(doc, "cod_index", k, "config");
    if (k == "crack_mouth_vertical") c.cod_index = observables::CodIndex::CrackMouthVertical;
    else if (k == "literal_zero") c.cod_index = observables::CodIndex::LiteralZero;
    else fail("cod_index must be 'crack_mouth_vertical' or 'literal_zero'");
  }
  c.optimizer.seed = c.seed;
  c.shots.seed = c.seed;
  return c;
}

RunConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) fail("cannot open '" + path.string() + "'");
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    fail("'" + path.string() + "' is not valid JSON: " + e.what());
  }
  return parse_config(doc);
}

json to_json(const RunConfig& c) {
  json bc = json::array();
  for (const auto& b : c.problem.bc) bc.push_back({{"name", b.name}, {"selector", b.selector}});
  json stages = json::array();
  for (const auto& s : c.schedule.stages) stages.push_back(stage_json(s));
  json shots = {{"shots", c.shots.shots ? json(*c.shots.shots) : json("exact")},
                {"mitigation_threshold",
                 c.shots.mitigation_threshold ? json(*c.shots.mitigation_threshold) : json(nullptr)},
                {"mitigation_start_iteration", c.mitigation_start_iteration}};
  const auto& o = c.optimizer;
  return {{"schema", kConfigSchema},
          {"problem",
           {{"model", std::string(fem::to_string(c.problem.model))},
            {"nx", c.problem.nx},
            {"ny", c.problem.ny},
            {"nu", c.problem.nu},
            {"width", c.problem.width},
            {"height", c.problem.height},
            {"load_density", c.problem.load_density},
            {"bc", std::move(bc)}}},
          {"schedule", {{"stages", std::move(stages)}}},
          {"optimizer",
           {{"max_iterations", o.max_iterations},
            {"max_evaluations", o.max_evaluations ? json(*o.max_evaluations) : json(nullptr)},
            {"absolute_tolerance", o.absolute_tolerance},
            {"relative_tolerance", o.relative_tolerance},
            {"initial_spread", o.initial_spread},
            {"initial_step", o.initial_step},
            {"restarts", o.restarts},
            {"algorithm", std::string(vqa::to_string(o.algorithm))}}},
          {"shots", std::move(shots)},
          {"output_dir", c.output_dir},
          {"seed", c.seed},
          {"layout", std::string(remesh::to_string(c.layout))},
          {"cold_start_arm", c.cold_start_arm},
          {"entangle_new_wires", c.entangle_new_wires},
          {"ansatz_reference", c.reference == vqa::ReferenceKind::Zero ? "zero" : "random"},
          {"cod_index", c.cod_index == observables::CodIndex::LiteralZero ? "literal_zero" : "crack_mouth_vertical"},
          {"refinement_sweep", c.refinement_sweep}};
}

void validate(const RunConfig& c) {
  fem::validate(c.problem);
  if (c.refinement_sweep < 0) fail("refinement_sweep must be >= 0");
  if (c.refinement_sweep > 0) fem::validate(c.problem.refined(c.refinement_sweep));
  if (c.shots.mitigation_threshold && !(*c.shots.mitigation_threshold >= 0.0 && *c.shots.mitigation_threshold < 1.0)) {
    fail("mitigation_threshold must lie in [0, 1)");
  }
  if (c.mitigation_start_iteration < 0) fail("mitigation_start_iteration must be >= 0");
  if (c.output_dir.empty()) fail("output_dir must not be empty");
  remesh::validate(cascade_config(c));
}

remesh::CascadeConfig cascade_config(const RunConfig& c) {
  remesh::CascadeConfig cc;
  cc.problem = c.problem;
  cc.schedule = c.schedule;
  cc.optimizer = c.optimizer;
  cc.shots = c.shots;
  cc.mitigation_start_iteration = c.mitigation_start_iteration;
  cc.seed = c.seed;
  cc.layout = c.layout;
  cc.cold_start_arm = c.cold_start_arm;
  cc.entangle_new_wires = c.entangle_new_wires;
  cc.reference = c.reference;
  cc.cod_index = c.cod_index;
  return cc;
}

}  // namespace qremesh::io
