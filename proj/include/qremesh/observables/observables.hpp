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
#include <optional>

#include "qremesh/core/operator_sum.hpp"
#include "qremesh/core/state_vector.hpp"
#include "qremesh/fem/classical_observables.hpp"
#include "qremesh/fem/problem.hpp"
#include "qremesh/qsim/sampling.hpp"

namespace qremesh::observables {

/// Which amplitude the crack opening is read from.
enum class CodIndex {
  CrackMouthVertical,  ///< (y = 0, x = 0, d = 1), the default
  LiteralZero,         ///< basis index 0, the horizontal DoF at the mouth
};

std::uint64_t cod_basis_index(const fem::ProblemSpec& spec, CodIndex which);

/// Euclidean norm of the load vector of spec: load * W * 2^{-nx/2}.
double force_norm(const fem::ProblemSpec& spec);

/// |<f|psi>| / <psi|K|psi> scaled by the load norm; the length of the
/// displacement field whose direction psi encodes. Throws std::domain_error
/// when <psi|K|psi> <= 0.
double norm_from_parts(double stiffness, double overlap, double load_norm);
double norm_estimate(const core::StateVector& psi, const core::OperatorSum& K, const core::StateVector& f_state,
                     const fem::ProblemSpec& spec);

/// Real amplitude at index times the norm.
double cod(const core::StateVector& psi, double norm, std::uint64_t index);

/// Lip integral of u_y^2 from <psi|P|psi> and the norm, then the SIF
/// inversion of the lip domain. Throws fem::InvalidProblem if the domain
/// needs more x bits than spec has.
double sif_from_parts(double lip_probability, double norm, const fem::ProblemSpec& spec, fem::LipDomain domain);
double sif_quantum(const core::StateVector& psi, const fem::ProblemSpec& spec, fem::LipDomain domain,
                   const core::OperatorSum& K, const core::StateVector& f_state);

/// Global phase that makes <f|psi> real and nonnegative.
core::StateVector align_phase(const core::StateVector& psi, const core::StateVector& f_state);

struct ObservableReport {
  double norm = 0.0;
  double cod = 0.0;
  double sif = 0.0;
  double sif_restricted = 0.0;  ///< inner-quarter domain; NaN when nx < 3
  double stiffness = 0.0;       ///< <psi|K|psi>
  double overlap = 0.0;         ///< |<f|psi>|
  double lip_probability = 0.0;
  double lip_probability_restricted = 0.0;
  std::uint64_t cod_index = 0;
  double sif_std_error = 0.0;  ///< shot mode only
};

/// All observables from one state snapshot. Exact mode by default; with
/// shots, <K> and <P> come from grouped sampling, |<f|psi>| from the
/// zero-outcome probability and |COD| from the index outcome probability.
ObservableReport evaluate(const core::StateVector& psi, const fem::ProblemSpec& spec, const core::OperatorSum& K,
                          CodIndex which = CodIndex::CrackMouthVertical, const qsim::ShotConfig& shots = {});

}  // namespace qremesh::observables
