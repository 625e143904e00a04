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

#include <vector>

#include "qremesh/core/operator_sum.hpp"
#include "qremesh/fem/classical_observables.hpp"
#include "qremesh/fem/problem.hpp"

namespace qremesh::decomp {

/// Sum of the p+/p-/I strings of pairwise disjoint selectors. Throws
/// fem::InvalidProblem when two selectors overlap.
core::OperatorSum dirichlet_projector_terms(const std::vector<fem::BCDescriptor>& bc, int n);

/// (I - P) K (I - P) + P, expanded with the operator product and simplified.
core::OperatorSum restrict_operator(const core::OperatorSum& K, const core::OperatorSum& P);

/// Stiffness with the problem's Dirichlet set applied.
core::OperatorSum build_restricted_operator(const fem::ProblemSpec& spec);

/// Projector onto the vertical lip DoFs of a domain.
core::OperatorSum lip_projector(const fem::ProblemSpec& spec, fem::LipDomain domain);

}  // namespace qremesh::decomp
