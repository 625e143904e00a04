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

#include <filesystem>
#include <iosfwd>
#include <string>

#include <Eigen/Core>
#include <nlohmann/json.hpp>

#include "qremesh/core/operator_sum.hpp"
#include "qremesh/fem/classical_observables.hpp"
#include "qremesh/fem/problem.hpp"
#include "qremesh/observables/observables.hpp"
#include "qremesh/qsim/sampling.hpp"
#include "qremesh/remesh/cascade.hpp"
#include "qremesh/vqa/optimizer.hpp"

namespace qremesh::io {

using nlohmann::json;

/// Schema tags written into every JSON artifact. Bump the suffix when a
/// field changes meaning.
inline constexpr const char* kTermsSchema = "qremesh.terms/1";
inline constexpr const char* kObservablesSchema = "qremesh.observables/1";
inline constexpr const char* kStageSchema = "qremesh.stage/1";
inline constexpr const char* kManifestSchema = "qremesh.manifest/1";
inline constexpr const char* kCountsSchema = "qremesh.counts/1";

json term_dump(const core::OperatorSum& op);
json to_json(const fem::ProblemSpec& spec);
json to_json(const fem::ClassicalObservables& obs);
json to_json(const observables::ObservableReport& obs);
json to_json(const remesh::StageReport& stage);
json to_json(const qsim::Counts& counts, int num_qubits);

/// iteration,best_cost,evaluations
void write_trace_csv(std::ostream& os, const std::vector<vqa::TracePoint>& trace);
/// node,x,y,u_x,u_y for vector models and node,x,y,u for scalar ones;
/// coordinates are physical.
void write_solution_csv(std::ostream& os, const Eigen::VectorXd& u, const fem::ProblemSpec& spec);

/// Creates parent directories; throws std::runtime_error on I/O failure.
void write_text(const std::filesystem::path& path, const std::string& text);
void write_json(const std::filesystem::path& path, const json& j);

/// Shortest text that reads back to the same double ("nan", "inf" and
/// "-inf" for non-finite values).
std::string format_double(double v);

}  // namespace qremesh::io
