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
#include <span>
#include <vector>

#include "qremesh/core/state_vector.hpp"
#include "qremesh/vqa/ansatz.hpp"
#include "qremesh/vqa/cost.hpp"

namespace qremesh::vqa {

/// Cost of the ansatz output for a fixed input state.
double ansatz_cost(const AnsatzCircuit& a, const CostModel& model, const core::StateVector& input,
                   std::span<const double> theta);

/// Exact gradient from shifted circuits: <K> shifts by pi/2, Re<f|psi> by pi
/// (it is linear in each half-angle rotation), then the chain rule of the
/// selected cost.
std::vector<double> parameter_shift_gradient(const AnsatzCircuit& a, const CostModel& model,
                                             const core::StateVector& input, std::span<const double> theta);

/// Central differences of ansatz_cost.
std::vector<double> finite_difference_gradient(const AnsatzCircuit& a, const CostModel& model,
                                               const core::StateVector& input, std::span<const double> theta,
                                               double step = 1e-5);

/// max_k |shift_k - difference_k|.
double gradient_check(const AnsatzCircuit& a, const CostModel& model, const core::StateVector& input,
                      std::span<const double> theta, double step = 1e-5);

struct GradientVariance {
  int num_qubits = 0;
  std::size_t samples = 0;
  double variance = 0.0;  ///< variance of the first parameter's gradient component
  double mean_abs = 0.0;  ///< mean |gradient| over all components and samples
};

/// Gradient statistics over uniformly random parameter draws.
GradientVariance gradient_variance(const AnsatzCircuit& a, const CostModel& model, const core::StateVector& input,
                                   std::size_t samples, std::uint64_t seed);

}  // namespace qremesh::vqa
