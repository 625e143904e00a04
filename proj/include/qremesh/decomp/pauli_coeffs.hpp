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
#include <optional>

#include "qremesh/fem/links.hpp"

namespace qremesh::decomp {

/// Real 2x2 matrix written as cI I + cX X + cIY (iY) + cZ Z, where
/// iY = [[0, 1], [-1, 0]] is real.
struct PauliCoeffs {
  double identity = 0.0;
  double x = 0.0;
  double iy = 0.0;
  double z = 0.0;

  Eigen::Matrix2d reconstruct() const;
};

/// Trace projections; reconstruction is exact for every real 2x2 input.
PauliCoeffs pauli_coeffs(const Eigen::Matrix2d& m);

PauliCoeffs link_pauli_coeffs(double nu, fem::LinkPair pair);

/// Published closed forms, available for aa, bb, ab, bc, ac and bd. Their
/// identity coefficient carries (3 + 4 nu) while the link matrices give
/// (3 - 4 nu); kept verbatim so the discrepancy stays visible in tests.
std::optional<PauliCoeffs> printed_closed_form(double nu, fem::LinkPair pair);

}  // namespace qremesh::decomp
