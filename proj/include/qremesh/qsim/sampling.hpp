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
#include <map>
#include <optional>
#include <random>
#include <span>

#include "qremesh/core/state_vector.hpp"

namespace qremesh::qsim {

/// Measurement settings. No shot count means exact expectations.
struct ShotConfig {
  std::optional<std::uint64_t> shots;
  std::uint64_t seed = 0;
  std::optional<double> mitigation_threshold;

  bool exact() const { return !shots.has_value(); }
  static ShotConfig exact_mode() { return {}; }
  static ShotConfig with_shots(std::uint64_t n, std::uint64_t seed) { return {n, seed, std::nullopt}; }
};

using Counts = std::map<std::uint64_t, std::uint64_t>;
using Distribution = std::map<std::uint64_t, double>;

/// Multinomial draw of total shots over probs (conditional binomials, so the
/// result depends only on the generator state).
Counts sample_probabilities(std::span<const double> probs, std::uint64_t shots, std::mt19937_64& rng);

/// Counts from |amplitude|^2, seeded by cfg.seed. Throws if cfg is exact.
Counts sample(const core::StateVector& state, const ShotConfig& cfg);

Distribution to_distribution(const Counts& counts);

/// Zeroes entries below tau and renormalizes. Throws std::domain_error when
/// nothing survives and std::invalid_argument when dist does not sum to 1.
Distribution mitigate_threshold(const Distribution& dist, double tau);

/// Generator for stream k of a root seed.
std::mt19937_64 derive_rng(std::uint64_t seed, std::uint64_t stream);

}  // namespace qremesh::qsim
