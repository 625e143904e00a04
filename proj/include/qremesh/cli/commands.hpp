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
#include <iosfwd>
#include <string>
#include <vector>

#include "qremesh/core/operator_sum.hpp"
#include "qremesh/fem/problem.hpp"
#include "qremesh/io/config.hpp"

namespace qremesh::cli {

/// One named invariant of the verification suite.
struct InvariantCheck {
  std::string name;
  bool passed = false;
  double error = 0.0;
  double tolerance = 0.0;
  std::string detail;
};

struct VerifyReport {
  std::vector<InvariantCheck> checks;
  bool passed() const;
};

/// Largest qubit count accepted by the verification suite.
inline constexpr int kVerifyQubitCap = 13;

/// Checks a candidate unrestricted stiffness operator against the classical
/// assembly, its measurement groups against direct expectations and its
/// size against the term-count law. Tests pass corrupted operators here.
VerifyReport verify_operator(const fem::ProblemSpec& spec, const core::OperatorSum& K, std::uint64_t seed);

/// verify_operator on the built operator plus the Dirichlet restriction,
/// projector and rigid-body kernel checks.
VerifyReport verify_problem(const fem::ProblemSpec& spec, std::uint64_t seed);

// Each command validates the config, writes its artifacts under
// cfg.output_dir, logs a short summary to log and returns the exit status.
int cmd_verify(const io::RunConfig& cfg, std::ostream& log);
int cmd_solve_classical(const io::RunConfig& cfg, std::ostream& log);
int cmd_decompose_dump(const io::RunConfig& cfg, std::ostream& log);
int cmd_vqa_run(const io::RunConfig& cfg, std::ostream& log);
int cmd_cascade(const io::RunConfig& cfg, std::ostream& log);
int cmd_observables(const io::RunConfig& cfg, std::ostream& log);

/// Command table used by the front-end: name and one-line help.
struct CommandInfo {
  const char* name;
  const char* help;
  int (*run)(const io::RunConfig&, std::ostream&);
};
const std::vector<CommandInfo>& commands();

}  // namespace qremesh::cli
