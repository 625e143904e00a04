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
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace qremesh::vqa {

/// Nelder-Mead works on any scalar cost. The sequential driver needs the
/// stiffness and overlap parts of every evaluation and exploits the
/// sinusoidal dependence of both on a single rotation angle.
enum class OptimizerAlgorithm { NelderMead, SequentialSinusoid };
std::string_view to_string(OptimizerAlgorithm a);
std::optional<OptimizerAlgorithm> parse_algorithm(std::string_view s);

/// Derivative-free optimizer settings. Iteration and tolerance defaults
/// follow the reference runs; the evaluation cap matches budgets across arms.
struct OptimizerConfig {
  int max_iterations = 220;
  std::optional<std::size_t> max_evaluations;
  double absolute_tolerance = 5e-14;
  double relative_tolerance = 5e-10;
  std::uint64_t seed = 0;
  double initial_spread = 1e-2;  ///< warm-start noise around the reference
  double initial_step = 0.25;    ///< simplex edge length in radians
  int restarts = 0;              ///< fresh simplices around the best point after convergence
  OptimizerAlgorithm algorithm = OptimizerAlgorithm::NelderMead;
};

/// Throws std::invalid_argument naming the violated rule.
void validate(const OptimizerConfig& cfg);

struct TracePoint {
  int iteration = 0;
  double best_cost = 0.0;
  std::size_t evaluations = 0;
};

enum class StopReason { Converged, IterationCap, EvaluationCap };
std::string_view to_string(StopReason r);

struct OptimizeResult {
  std::vector<double> theta;
  double best_cost = 0.0;
  double initial_cost = 0.0;
  std::vector<TracePoint> trace;  ///< best-so-far after each iteration, monotone
  std::size_t evaluations = 0;
  int iterations = 0;
  StopReason status = StopReason::IterationCap;
  std::string algorithm = "nelder-mead-adaptive";
};

using CostFunction = std::function<double(std::span<const double>)>;

/// Nelder-Mead with dimension-adaptive coefficients and optional restarts.
/// on_iteration(k) runs before iteration k's evaluations.
OptimizeResult optimize(const CostFunction& cost, std::vector<double> x0, const OptimizerConfig& cfg,
                        const std::function<void(int)>& on_iteration = {});

}  // namespace qremesh::vqa
