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

#include "qremesh/decomp/pauli_coeffs.hpp"

namespace qremesh::decomp {

Eigen::Matrix2d PauliCoeffs::reconstruct() const {
  Eigen::Matrix2d m;
  m << identity + z, x + iy, x - iy, identity - z;
  return m;
}

PauliCoeffs pauli_coeffs(const Eigen::Matrix2d& m) {
  return {(m(0, 0) + m(1, 1)) / 2.0, (m(0, 1) + m(1, 0)) / 2.0, (m(0, 1) - m(1, 0)) / 2.0,
          (m(0, 0) - m(1, 1)) / 2.0};
}

PauliCoeffs link_pauli_coeffs(double nu, fem::LinkPair pair) { return pauli_coeffs(fem::elementary_link(nu, pair)); }

std::optional<PauliCoeffs> printed_closed_form(double nu, fem::LinkPair pair) {
  using fem::Corner;
  const double s = 3.0 + 4.0 * nu;
  const double y = (4.0 * nu - 1.0) / 8.0;
  if (pair.row == Corner::A && pair.col == Corner::A) return PauliCoeffs{s / 6.0, 0.125, 0.0, 0.0};
  if (pair.row == Corner::B && pair.col == Corner::B) return PauliCoeffs{s / 6.0, -0.125, 0.0, 0.0};
  if (pair.row == Corner::A && pair.col == Corner::B) return PauliCoeffs{-s / 24.0, 0.0, y, -0.125};
  if (pair.row == Corner::B && pair.col == Corner::C) return PauliCoeffs{-s / 24.0, 0.0, y, 0.125};
  if (pair.row == Corner::A && pair.col == Corner::C) return PauliCoeffs{-s / 12.0, -0.125, 0.0, 0.0};
  if (pair.row == Corner::B && pair.col == Corner::D) return PauliCoeffs{-s / 12.0, 0.125, 0.0, 0.0};
  return std::nullopt;
}

}  // namespace qremesh::decomp
