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

#include "qremesh/qsim/grouped.hpp"

#include <cmath>
#include <stdexcept>

namespace qremesh::qsim {

namespace {

void require_normalized(const core::StateVector& s) {
  if (!s.is_normalized(1e-9)) throw std::invalid_argument("grouped expectation requires a normalized state");
}

}  // namespace

Estimate expectation_group(const core::StateVector& state, const decomp::MeasurementGroup& group,
                           const ShotConfig& cfg, std::uint64_t stream) {
  if (state.num_qubits() != group.rotation.num_qubits()) throw core::LengthMismatch("group and state widths differ");
  const core::StateVector rotated = apply_program(state, group.rotation);
  const auto probs = rotated.probabilities();

  if (cfg.exact()) {
    double v = 0.0;
    for (std::size_t s = 0; s < probs.size(); ++s) {
      if (probs[s] != 0.0) v += probs[s] * group.evaluate(s);
    }
    return {v, 0.0};
  }

  auto rng = derive_rng(cfg.seed, stream);
  const Counts counts = sample_probabilities(probs, *cfg.shots, rng);
  Distribution dist = to_distribution(counts);
  if (cfg.mitigation_threshold) dist = mitigate_threshold(dist, *cfg.mitigation_threshold);
  double mean = 0.0;
  double second = 0.0;
  for (const auto& [s, p] : dist) {
    const double e = group.evaluate(s);
    mean += p * e;
    second += p * e * e;
  }
  const double var = std::max(0.0, second - mean * mean);
  return {mean, std::sqrt(var / static_cast<double>(*cfg.shots))};
}

Estimate expectation_grouped(const core::StateVector& state, std::span<const decomp::MeasurementGroup> groups,
                             const ShotConfig& cfg, std::uint64_t stream_offset) {
  if (groups.empty()) throw std::invalid_argument("expectation_grouped needs at least one group");
  require_normalized(state);
  Estimate total;
  double var = 0.0;
  for (std::size_t g = 0; g < groups.size(); ++g) {
    const Estimate e = expectation_group(state, groups[g], cfg, stream_offset + g);
    total.value += e.value;
    var += e.std_error * e.std_error;
  }
  total.std_error = std::sqrt(var);
  return total;
}

Estimate overlap_probability(const core::StateVector& state, const GateProgram& target_preparation,
                             const ShotConfig& cfg, std::uint64_t stream) {
  require_normalized(state);
  const core::StateVector back = apply_program(state, target_preparation.inverse());
  const double p0 = std::norm(back[0]);
  if (cfg.exact()) return {p0, 0.0};
  auto rng = derive_rng(cfg.seed, stream);
  const auto probs = back.probabilities();
  const Counts counts = sample_probabilities(probs, *cfg.shots, rng);
  Distribution dist = to_distribution(counts);
  if (cfg.mitigation_threshold) dist = mitigate_threshold(dist, *cfg.mitigation_threshold);
  const double est = dist.count(0) ? dist.at(0) : 0.0;
  return {est, std::sqrt(est * (1.0 - est) / static_cast<double>(*cfg.shots))};
}

}  // namespace qremesh::qsim
