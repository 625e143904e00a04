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
#include <filesystem>
#include <string>

#include <nlohmann/json.hpp>

#include "qremesh/fem/problem.hpp"
#include "qremesh/observables/observables.hpp"
#include "qremesh/qsim/sampling.hpp"
#include "qremesh/remesh/cascade.hpp"
#include "qremesh/vqa/optimizer.hpp"

namespace qremesh::io {

inline constexpr const char* kConfigSchema = "qremesh.config/1";

/// Everything a CLI run needs. Read from a JSON document whose blocks
/// mirror the fields below; unknown keys are rejected so typos surface.
struct RunConfig {
  fem::ProblemSpec problem;
  remesh::CascadeSchedule schedule;
  vqa::OptimizerConfig optimizer;
  qsim::ShotConfig shots;
  int mitigation_start_iteration = 0;
  std::string output_dir = "qremesh_out";
  std::uint64_t seed = 0;
  remesh::LayoutMode layout = remesh::LayoutMode::Swap;
  bool cold_start_arm = false;
  bool entangle_new_wires = false;
  vqa::ReferenceKind reference = vqa::ReferenceKind::Zero;
  observables::CodIndex cod_index = observables::CodIndex::CrackMouthVertical;
  /// Extra refinement levels solved by solve-classical (0 = base mesh only).
  int refinement_sweep = 0;
};

/// Defaults: 2x2-bit half plate with a crack, nu = 0.3, two-stage schedule.
RunConfig default_config();

/// Parses a config document. A replay manifest is accepted too: its
/// "config" block is used. Throws fem::InvalidProblem on bad input.
RunConfig parse_config(const nlohmann::json& doc);
RunConfig load_config(const std::filesystem::path& path);

nlohmann::json to_json(const RunConfig& cfg);

/// Checks every downstream precondition before any compute; throws
/// fem::InvalidProblem naming the rule.
void validate(const RunConfig& cfg);

remesh::CascadeConfig cascade_config(const RunConfig& cfg);

}  // namespace qremesh::io
