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

#include "qremesh/decomp/projectors.hpp"

#include "qremesh/decomp/operator_builder.hpp"

namespace qremesh::decomp {

using core::OperatorSum;

core::OperatorSum dirichlet_projector_terms(const std::vector<fem::BCDescriptor>& bc, int n) {
  OperatorSum P(n);
  for (std::size_t i = 0; i < bc.size(); ++i) {
    if (bc[i].num_qubits() != n) {
      throw fem::InvalidProblem("boundary selector '" + bc[i].name + "' does not span " + std::to_string(n) + " qubits");
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (bc[i].overlaps(bc[j])) {
        throw fem::InvalidProblem("boundary selectors '" + bc[j].name + "' and '" + bc[i].name +
                                  "' overlap; their sum would not be a projector");
      }
    }
    P.add(bc[i].to_term());
  }
  P.set_hermitian(true);
  return P;
}

core::OperatorSum restrict_operator(const core::OperatorSum& K, const core::OperatorSum& P) {
  if (P.empty()) return K;
  // (I-P)K(I-P) + P = K - PK - KP + PKP + P
  const OperatorSum PK = P * K;
  OperatorSum out = K - PK - K * P + PK * P + P;
  out = out.simplified(1e-15);
  out.set_hermitian(K.hermitian() && P.hermitian());
  return out;
}

core::OperatorSum build_restricted_operator(const fem::ProblemSpec& spec) {
  return restrict_operator(build_operator(spec), dirichlet_projector_terms(spec.bc, spec.num_qubits()));
}

core::OperatorSum lip_projector(const fem::ProblemSpec& spec, fem::LipDomain domain) {
  return dirichlet_projector_terms({fem::lip_selector(spec, domain)}, spec.num_qubits());
}

}  // namespace qremesh::decomp
