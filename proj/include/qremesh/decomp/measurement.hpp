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

#include <Eigen/Dense>
#include <cstdint>
#include <vector>

#include "qremesh/core/operator_sum.hpp"
#include "qremesh/qsim/program.hpp"

namespace qremesh::decomp {

/// How the trailing pivot qubit is rotated after the CNOT chain.
enum class PivotRotation { None, Hadamard, NGate };

/// One term of a diagonal observable, evaluated on the decoded index j:
/// coefficient * [(j & care) == value] * (-1)^popcount(j & parity).
struct DiagonalEntry {
  double coefficient = 0.0;
  std::uint64_t care = 0;
  std::uint64_t value = 0;
  std::uint64_t parity = 0;
};

/// Terms that share a flip mask, measured together.
///
/// A CNOT ladder over the flipped qubits folds the mask onto its first qubit
/// (the pivot); H or N then turns the remaining X or Y action into Z. After
/// the rotation, outcome s contributes evaluate(s), so
/// <psi|terms|psi> = sum_s |<s|R|psi>|^2 evaluate(s).
struct MeasurementGroup {
  PivotRotation pivot_rotation = PivotRotation::None;
  std::uint64_t flip_mask = 0;
  std::vector<int> chain;  ///< flipped qubits, ascending; chain[0] is the pivot
  qsim::GateProgram rotation;
  std::vector<DiagonalEntry> diagonal;
  core::OperatorSum terms;  ///< source terms carrying this flip mask

  /// Pre-rotation index paired with outcome s (pivot bit cleared).
  std::uint64_t decode(std::uint64_t outcome) const;
  double evaluate(std::uint64_t outcome) const;
  /// evaluate() over every outcome; for dense verification.
  Eigen::VectorXd diagonal_values() const;
};

/// Plans one diagonal group plus one group per (nonzero flip mask, rotation)
/// with a nonvanishing diagonal. Requires op.hermitian().
std::vector<MeasurementGroup> measurement_groups(const core::OperatorSum& op);

/// 2 nx ny + 2 nx + 2 ny + 2.
std::size_t term_count(int nx, int ny);

}  // namespace qremesh::decomp
