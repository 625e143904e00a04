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
#include <string>

#include "qremesh/fem/problem.hpp"

namespace qremesh::fem {

/// Lip region over which the crack-opening integral runs. Both regions end
/// at the crack tip.
enum class LipDomain { FullLip, InnerQuarter };

std::string_view to_string(LipDomain d);

/// Selector of the vertical lip DoFs of a domain.
BCDescriptor lip_selector(const ProblemSpec& spec, LipDomain domain);

/// Physical length of the lip domain (distance from its far end to the tip).
double lip_length(const ProblemSpec& spec, LipDomain domain);

/// SIF from the integral of u_y^2 over a lip region adjoining the tip,
/// inverting u_y = SIF * 2(1-nu^2) sqrt(2r/pi). Reduces to
/// sqrt(pi * int u^2) / ((1-nu^2) W) on the full lip.
double sif_from_lip_integral(double lip_u2_integral, double domain_length, double nu);

struct ClassicalObservables {
  double cod = 0.0;
  double sif_fit = 0.0;
  double sif_integral = 0.0;
  double sif_integral_inner = 0.0;  ///< NaN when nx < 3
};

/// Basis index of the crack-mouth vertical DoF.
std::uint64_t crack_mouth_index(const ProblemSpec& spec);

/// Least-squares SIF over lip nodes with x in [N_x/4, N_x/2).
double sif_fit(const Eigen::VectorXd& u, const ProblemSpec& spec);

/// Discrete lip integral, node spacing W/N_x.
double sif_integral(const Eigen::VectorXd& u, const ProblemSpec& spec, LipDomain domain = LipDomain::FullLip);

/// Throws InvalidProblem unless spec.model is the cracked half plate.
ClassicalObservables classical_observables(const Eigen::VectorXd& u, const ProblemSpec& spec);

}  // namespace qremesh::fem
