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

#include "qremesh/core/operator_sum.hpp"
#include "qremesh/core/state_vector.hpp"

namespace qremesh::core {

// Matrix-free kernels. Only basis indices that satisfy a term's projector
// constraints are visited; nothing larger than the state is allocated.

/// term * state (generally unnormalized).
StateVector apply_term(const StateVector& state, const TensorTerm& term);
/// op * state.
StateVector apply_sum(const StateVector& state, const OperatorSum& op);

/// <bra| term |ket>.
Complex matrix_element(const StateVector& bra, const TensorTerm& term, const StateVector& ket);

/// sum_k coeff_k <psi|M_k|psi>. Throws std::invalid_argument if psi is not normalized.
Complex expectation_direct(const StateVector& psi, const OperatorSum& op);

/// Same value computed the way a heralding photonic device would: each term is
/// applied as a (non-unitary) map and its overlap with psi is accumulated;
/// pure projector strings use the squared norm of the projected state.
Complex expectation_heralded(const StateVector& psi, const OperatorSum& op);

}  // namespace qremesh::core
