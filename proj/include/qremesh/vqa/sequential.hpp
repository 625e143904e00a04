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

#include <functional>
#include <span>
#include <vector>

#include "qremesh/vqa/cost.hpp"
#include "qremesh/vqa/optimizer.hpp"

namespace qremesh::vqa {

using PartsFunction = std::function<CostParts(std::span<const double>)>;

/// Coordinate-wise minimization for circuits where every parameter drives
/// one RY gate. Along one angle t, <K> and the squared overlap are
/// a + b cos t + c sin t and the overlap itself is p cos(t/2) + q sin(t/2),
/// so two extra evaluations per coordinate fix the whole one-dimensional
/// landscape; its minimum is then located on the model and evaluated.
///
/// One iteration updates one coordinate. Converges when a full sweep
/// improves the best cost by no more than the configured tolerances.
/// Derivative-free; the result is monotone in best-so-far.
OptimizeResult optimize_sequential(const PartsFunction& parts, CostKind kind, std::vector<double> x0,
                                   const OptimizerConfig& cfg, const std::function<void(int)>& on_iteration = {});

}  // namespace qremesh::vqa
