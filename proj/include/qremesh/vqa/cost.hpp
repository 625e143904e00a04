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

#include <optional>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "qremesh/core/operator_sum.hpp"
#include "qremesh/core/state_vector.hpp"
#include "qremesh/decomp/measurement.hpp"
#include "qremesh/qsim/program.hpp"
#include "qremesh/qsim/sampling.hpp"

namespace qremesh::vqa {

enum class CostKind { Energy, Quotient };

std::string_view to_string(CostKind k);
std::optional<CostKind> parse_cost_kind(std::string_view s);

/// Raised when <psi|K|psi> is too small for the quotient cost.
class DegenerateQuotient : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

inline constexpr double kQuotientFloor = 1e-14;

/// 1/2 <psi|K|psi> - Re<psi|f>, evaluated matrix-free.
double cost_energy(const core::StateVector& psi, const core::OperatorSum& K, const core::StateVector& f_state);
/// -(Re<f|psi>)^2 / (2 <psi|K|psi>).
double cost_quotient(const core::StateVector& psi, const core::OperatorSum& K, const core::StateVector& f_state);

/// Raw pieces of one cost evaluation.
struct CostParts {
  double cost = 0.0;
  double stiffness = 0.0;   ///< <psi|K|psi>
  double overlap = 0.0;     ///< Re<f|psi> (magnitude only in shot mode)
  double overlap_sq = 0.0;  ///< (Re<f|psi>)^2
  double std_error = 0.0;   ///< shot-noise estimate of the cost
};

CostParts combine(CostKind kind, double stiffness, double overlap, double overlap_sq);

/// Everything needed to score a trial state on one mesh.
///
/// Exact mode evaluates matrix-free; shot mode measures the stiffness through
/// its measurement groups and the overlap through the zero-outcome
/// probability after undoing the force preparation. Shot mode supports the
/// quotient cost only, because the energy cost needs the sign of the overlap.
class CostModel {
 public:
  CostModel(core::OperatorSum K, core::StateVector f_state, qsim::GateProgram f_preparation, CostKind kind,
            qsim::ShotConfig shots = {});

  CostKind kind() const { return kind_; }
  const core::OperatorSum& stiffness_operator() const { return K_; }
  const core::StateVector& force_state() const { return f_; }
  const qsim::ShotConfig& shots() const { return shots_; }
  const std::vector<decomp::MeasurementGroup>& groups() const;

  /// Mitigation is applied from this iteration on (0 = always).
  void set_mitigation_start(int iteration) { mitigation_start_ = iteration; }
  void set_iteration(int iteration) const { iteration_ = iteration; }

  CostParts evaluate(const core::StateVector& psi) const;
  /// Exact evaluation regardless of the configured shot mode.
  CostParts evaluate_exact(const core::StateVector& psi) const;

  std::size_t evaluations() const { return evaluations_; }

 private:
  core::OperatorSum K_;
  core::StateVector f_;
  qsim::GateProgram f_prep_;
  CostKind kind_;
  qsim::ShotConfig shots_;
  int mitigation_start_ = 0;
  mutable int iteration_ = 0;
  mutable std::size_t evaluations_ = 0;
  mutable std::optional<std::vector<decomp::MeasurementGroup>> groups_;
};

}  // namespace qremesh::vqa
