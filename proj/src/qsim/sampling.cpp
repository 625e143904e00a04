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

#include "qremesh/qsim/sampling.hpp"

#include <cmath>
#include <stdexcept>

namespace qremesh::qsim {

Counts sample_probabilities(std::span<const double> probs, std::uint64_t shots, std::mt19937_64& rng) {
  Counts counts;
  double mass = 0.0;
  for (double p : probs) mass += p;
  std::uint64_t left = shots;
  for (std::size_t i = 0; i < probs.size() && left > 0; ++i) {
    if (probs[i] <= 0.0) continue;
    const double p = std::min(1.0, probs[i] / mass);
    std::uint64_t k = left;
    if (p < 1.0) {
      std::binomial_distribution<std::uint64_t> draw(left, p);
      k = draw(rng);
    }
    if (k > 0) counts[i] = k;
    left -= k;
    mass -= probs[i];
    if (mass <= 0.0) break;
  }
  if (left > 0) {
    // Rounding left a remainder; it belongs to the last outcome with mass.
    for (std::size_t i = probs.size(); i-- > 0;) {
      if (probs[i] > 0.0) {
        counts[i] += left;
        break;
      }
    }
  }
  return counts;
}

Counts sample(const core::StateVector& state, const ShotConfig& cfg) {
  if (cfg.exact()) throw std::invalid_argument("sampling requires a shot count");
  if (*cfg.shots == 0) throw std::invalid_argument("shot count must be positive");
  auto rng = derive_rng(cfg.seed, 0);
  const auto p = state.probabilities();
  return sample_probabilities(p, *cfg.shots, rng);
}

Distribution to_distribution(const Counts& counts) {
  std::uint64_t total = 0;
  for (const auto& [k, c] : counts) total += c;
  Distribution d;
  if (total == 0) return d;
  for (const auto& [k, c] : counts) d[k] = static_cast<double>(c) / static_cast<double>(total);
  return d;
}

Distribution mitigate_threshold(const Distribution& dist, double tau) {
  double total = 0.0;
  for (const auto& [k, p] : dist) total += p;
  if (std::abs(total - 1.0) > 1e-9) throw std::invalid_argument("distribution does not sum to 1");
  if (tau <= 0.0) return dist;
  Distribution out;
  double kept = 0.0;
  for (const auto& [k, p] : dist) {
    if (p >= tau) {
      out[k] = p;
      kept += p;
    }
  }
  if (out.empty() || kept <= 0.0) throw std::domain_error("every outcome falls below the mitigation threshold");
  for (auto& [k, p] : out) p /= kept;
  return out;
}

std::mt19937_64 derive_rng(std::uint64_t seed, std::uint64_t stream) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32)};
  return std::mt19937_64(seq);
}

}  // namespace qremesh::qsim
