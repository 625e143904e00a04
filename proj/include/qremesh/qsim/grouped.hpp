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

#include <span>

#include "qremesh/core/state_vector.hpp"
#include "qremesh/decomp/measurement.hpp"
#include "qremesh/qsim/sampling.hpp"

namespace qremesh::qsim {

struct Estimate {
  double value = 0.0;
  double std_error = 0.0;
};

/// Expectation of one group: exact from the rotated probabilities, or the
/// sample mean of evaluate(s) over cfg.shots outcomes drawn from stream.
Estimate expectation_group(const core::StateVector& state, const decomp::MeasurementGroup& group,
                           const ShotConfig& cfg, std::uint64_t stream = 0);

/// Sum over groups. Shot mode draws independent streams per group; the
/// standard error adds in quadrature. Throws std::invalid_argument when
/// groups is empty.
Estimate expectation_grouped(const core::StateVector& state, std::span<const decomp::MeasurementGroup> groups,
                             const ShotConfig& cfg, std::uint64_t stream_offset = 0);

/// |<target|state>|^2 read off as the probability of the all-zero outcome
/// after undoing the target's preparation program.
Estimate overlap_probability(const core::StateVector& state, const GateProgram& target_preparation,
                             const ShotConfig& cfg, std::uint64_t stream = 0);

}  // namespace qremesh::qsim
